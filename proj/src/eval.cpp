#include "tspd/eval.hpp"

#include <algorithm>
#include <sstream>

namespace tspd {

const char* to_string(Clause clause) {
  switch (clause) {
    case Clause::Structure: return "structure";
    case Clause::Coverage: return "A";
    case Clause::DroneTwice: return "B";
    case Clause::Compatible: return "C";
    case Clause::Interference: return "D";
    case Clause::Eligibility: return "eligibility";
    case Clause::Endurance: return "endurance";
  }
  return "?";
}

std::vector<Violation> validate(const Problem& problem, const Solution& solution) {
  std::vector<Violation> out;
  const int n = problem.n();
  const NodeId last = n + 1;
  const auto& td = solution.truck_tour;
  auto add = [&](Clause c, std::vector<NodeId> nodes, std::string msg) {
    out.push_back({c, std::move(nodes), std::move(msg)});
  };

  if (td.size() < 2) {
    add(Clause::Structure, {}, "truck tour needs at least the two depot copies");
    return out;
  }
  bool ids_ok = true;
  for (NodeId v : td) {
    if (v < 0 || v > last) {
      add(Clause::Structure, {v}, "node id out of range in truck tour");
      ids_ok = false;
    }
  }
  if (!ids_ok) return out;
  if (td.front() != 0) add(Clause::Structure, {td.front()}, "truck tour must start at the depot");
  if (td.back() != last) add(Clause::Structure, {td.back()}, "truck tour must end at the depot copy");

  std::vector<int> pos(n + 2, -1);
  for (int p = 0; p < static_cast<int>(td.size()); ++p) {
    if (pos[td[p]] >= 0)
      add(Clause::Structure, {td[p]}, "node repeated in truck tour");
    else
      pos[td[p]] = p;
  }

  std::vector<int> served(n + 2, 0);
  for (NodeId v = 1; v <= n; ++v) served[v] = pos[v] >= 0 ? 1 : 0;

  struct Span {
    int from, to;
    std::size_t index;
  };
  std::vector<Span> spans;
  std::vector<int> drone_count(n + 2, 0);
  for (std::size_t d = 0; d < solution.deliveries.size(); ++d) {
    const DroneDelivery& dd = solution.deliveries[d];
    const NodeId i = dd.launch, j = dd.customer, k = dd.rendezvous;
    if (i < 0 || i > last || j < 0 || j > last || k < 0 || k > last) {
      add(Clause::Structure, {i, j, k}, "node id out of range in drone delivery");
      continue;
    }
    if (j >= 1 && j <= n) {
      ++drone_count[j];
      ++served[j];
    }
    if (!problem.eligible(j)) add(Clause::Eligibility, {i, j, k}, "customer is not drone-eligible");
    if (pos[j] >= 0)
      add(Clause::Compatible, {i, j, k}, "customer cannot be served by both the truck and the drone");
    if (pos[i] < 0) add(Clause::Compatible, {i, j, k}, "launch node is not on the truck tour");
    if (pos[k] < 0) add(Clause::Compatible, {i, j, k}, "rendezvous node is not on the truck tour");
    if (pos[i] >= 0 && pos[k] >= 0) {
      if (pos[i] >= pos[k])
        add(Clause::Compatible, {i, j, k}, "launch must precede rendezvous on the truck tour");
      else
        spans.push_back({pos[i], pos[k], d});
    }
    if (i == 0 && k == last)
      add(Clause::Compatible, {i, j, k}, "a sortie cannot span the whole tour");
    if (i != j && j != k && problem.drone_time(i, j) + problem.drone_time(j, k) > problem.params().endurance)
      add(Clause::Endurance, {i, j, k}, "flight exceeds drone endurance");
  }
  for (NodeId v = 1; v <= n; ++v) {
    if (served[v] == 0) add(Clause::Coverage, {v}, "customer is not served");
    if (drone_count[v] > 1) add(Clause::DroneTwice, {v}, "customer served twice by the drone");
  }
  for (std::size_t a = 0; a < spans.size(); ++a) {
    for (std::size_t b = a + 1; b < spans.size(); ++b) {
      if (std::max(spans[a].from, spans[b].from) < std::min(spans[a].to, spans[b].to)) {
        const auto& da = solution.deliveries[spans[a].index];
        const auto& db = solution.deliveries[spans[b].index];
        add(Clause::Interference, {da.launch, da.customer, da.rendezvous, db.launch, db.customer, db.rendezvous},
            "drone deliveries overlap on the truck tour");
      }
    }
  }
  return out;
}

double Evaluation::total_truck_wait() const {
  double s = 0.0;
  for (const auto& t : timeline.sorties) s += t.truck_wait;
  return s;
}

double Evaluation::total_drone_wait() const {
  double s = 0.0;
  for (const auto& t : timeline.sorties) s += t.drone_wait;
  return s;
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid solution: " << violations.size() << " violation(s)";
  if (!violations.empty())
    os << ", first [" << to_string(violations.front().clause) << "] " << violations.front().message;
  return os.str();
}

}  // namespace

InvalidSolution::InvalidSolution(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

Evaluation evaluate_unchecked(const Problem& problem, const Solution& solution) {
  const CostParams& prm = problem.params();
  const auto& td = solution.truck_tour;
  const int len = static_cast<int>(td.size());
  std::vector<int> pos(problem.n() + 2, -1);
  for (int p = 0; p < len; ++p) pos[td[p]] = p;
  std::vector<int> launch_at(len, -1), rend_at(len, -1);
  for (std::size_t d = 0; d < solution.deliveries.size(); ++d) {
    launch_at[pos[solution.deliveries[d].launch]] = static_cast<int>(d);
    rend_at[pos[solution.deliveries[d].rendezvous]] = static_cast<int>(d);
  }

  Evaluation ev;
  Timeline& tl = ev.timeline;
  tl.arrival.assign(len, 0.0);
  tl.departure.assign(len, 0.0);
  tl.sorties.resize(solution.deliveries.size());
  for (std::size_t d = 0; d < solution.deliveries.size(); ++d) tl.sorties[d].delivery = solution.deliveries[d];

  for (int p = 0; p < len; ++p) {
    double ready = tl.arrival[p];
    if (rend_at[p] >= 0) {
      SortieTiming& s = tl.sorties[rend_at[p]];
      s.truck_at_rendezvous = tl.arrival[p];
      s.truck_wait = std::max(0.0, s.drone_at_rendezvous - s.truck_at_rendezvous);
      s.drone_wait = std::max(0.0, s.truck_at_rendezvous - s.drone_at_rendezvous);
      ready = std::max(s.truck_at_rendezvous, s.drone_at_rendezvous) + prm.retrieve_time;
    }
    double depart = ready;
    if (launch_at[p] >= 0) {
      SortieTiming& s = tl.sorties[launch_at[p]];
      depart = ready + prm.launch_time;
      s.launch = depart;
      s.drone_at_customer = depart + problem.drone_time(s.delivery.launch, s.delivery.customer);
      s.drone_at_rendezvous = s.drone_at_customer + problem.drone_time(s.delivery.customer, s.delivery.rendezvous);
    }
    tl.departure[p] = depart;
    if (p + 1 < len) {
      tl.arrival[p + 1] = depart + problem.truck_time(td[p], td[p + 1]);
      ev.truck_transport_cost += prm.truck_cost * problem.truck_dist(td[p], td[p + 1]);
    }
  }
  for (const SortieTiming& s : tl.sorties) {
    const DroneDelivery& d = s.delivery;
    ev.drone_transport_cost +=
        prm.drone_cost * (problem.drone_dist(d.launch, d.customer) + problem.drone_dist(d.customer, d.rendezvous));
    ev.truck_waiting_cost += prm.truck_wait_fee * s.truck_wait;
    ev.drone_waiting_cost += prm.drone_wait_fee * s.drone_wait;
  }
  ev.total_cost = ev.truck_transport_cost + ev.drone_transport_cost + ev.truck_waiting_cost + ev.drone_waiting_cost;
  ev.completion_time = len > 0 ? tl.departure[len - 1] : 0.0;
  return ev;
}

Evaluation evaluate(const Problem& problem, const Solution& solution) {
  auto violations = validate(problem, solution);
  if (!violations.empty()) throw InvalidSolution(std::move(violations));
  return evaluate_unchecked(problem, solution);
}

Evaluation evaluate_min_cost(const Problem& problem, const Solution& solution) {
  return evaluate(problem, solution);
}

Evaluation evaluate_min_time(const Problem& problem, const Solution& solution) {
  return evaluate(problem, solution);
}

double objective_value(const Problem& problem, const Solution& solution, Objective objective) {
  return evaluate(problem, solution).value(objective);
}

}  // namespace tspd
