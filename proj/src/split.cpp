#include "tspd/split.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace tspd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class ArcPricer {
 public:
  ArcPricer(const Problem& problem, const Tour& tour, Objective objective)
      : pb_(problem), s_(tour), obj_(objective), dist_(tour.size(), 0.0), time_(tour.size(), 0.0) {
    if (!is_giant_tour(problem, tour)) throw std::invalid_argument("split needs a giant tour");
    for (std::size_t p = 1; p < tour.size(); ++p) {
      dist_[p] = dist_[p - 1] + problem.truck_dist(tour[p - 1], tour[p]);
      time_[p] = time_[p - 1] + problem.truck_time(tour[p - 1], tour[p]);
    }
  }

  double adjacent(int a) const {
    return obj_ == Objective::MinCost ? pb_.params().truck_cost * pb_.truck_dist(s_[a], s_[a + 1])
                                      : pb_.truck_time(s_[a], s_[a + 1]);
  }

  // Cheapest sortie from position a to position c; returns the position of the
  // drone customer, or -1 when none is feasible.
  int spanning(int a, int c, double& cost) const {
    const CostParams& prm = pb_.params();
    const NodeId i = s_[a], k = s_[c];
    const double sub_d = dist_[c] - dist_[a];
    const double sub_t = time_[c] - time_[a];
    cost = kInf;
    int best = -1;
    for (int b = a + 1; b < c; ++b) {
      const NodeId j = s_[b];
      if (!pb_.feasible_delivery(i, j, k)) continue;
      const NodeId prev = s_[b - 1], next = s_[b + 1];
      const double tt = sub_t + pb_.truck_time(prev, next) - pb_.truck_time(prev, j) - pb_.truck_time(j, next);
      const double dt = pb_.drone_time(i, j) + pb_.drone_time(j, k);
      double v;
      if (obj_ == Objective::MinCost) {
        const double td = sub_d + pb_.truck_dist(prev, next) - pb_.truck_dist(prev, j) - pb_.truck_dist(j, next);
        v = prm.truck_cost * td + prm.drone_cost * (pb_.drone_dist(i, j) + pb_.drone_dist(j, k)) +
            prm.truck_wait_fee * std::max(0.0, dt - tt) + prm.drone_wait_fee * std::max(0.0, tt - dt);
      } else {
        v = std::max(tt, dt) + prm.retrieve_time + prm.launch_time;
      }
      if (v < cost) {
        cost = v;
        best = b;
      }
    }
    return best;
  }

 private:
  const Problem& pb_;
  const Tour& s_;
  Objective obj_;
  std::vector<double> dist_, time_;
};

}  // namespace

std::vector<AuxArc> auxiliary_arcs(const Problem& problem, const Tour& tour, Objective objective) {
  ArcPricer pricer(problem, tour, objective);
  std::vector<AuxArc> arcs;
  const int len = static_cast<int>(tour.size());
  for (int a = 0; a + 1 < len; ++a) {
    arcs.push_back({tour[a], tour[a + 1], pricer.adjacent(a), std::nullopt});
    for (int c = a + 2; c < len; ++c) {
      AuxArc arc{tour[a], tour[c], kInf, std::nullopt};
      const int b = pricer.spanning(a, c, arc.cost);
      if (b >= 0) arc.drone_node = tour[b];
      arcs.push_back(arc);
    }
  }
  return arcs;
}

SplitTables build_and_search(const Problem& problem, const Tour& tour, Objective objective) {
  ArcPricer pricer(problem, tour, objective);
  const int len = static_cast<int>(tour.size());
  SplitTables t;
  t.predecessor.assign(problem.n() + 2, -1);
  t.value.assign(problem.n() + 2, kInf);
  t.value[tour[0]] = 0.0;
  for (int a = 0; a + 1 < len; ++a) {
    const double base = t.value[tour[a]];
    const double adj = base + pricer.adjacent(a);
    if (adj < t.value[tour[a + 1]]) {
      t.value[tour[a + 1]] = adj;
      t.predecessor[tour[a + 1]] = tour[a];
    }
    for (int c = a + 2; c < len; ++c) {
      double cost;
      const int b = pricer.spanning(a, c, cost);
      if (b < 0) continue;
      t.deliveries.push_back({tour[a], tour[b], tour[c], cost});
      if (base + cost < t.value[tour[c]]) {
        t.value[tour[c]] = base + cost;
        t.predecessor[tour[c]] = tour[a];
      }
    }
  }
  return t;
}

Solution extract(const SplitTables& tables, const Tour& tour, const Problem& problem) {
  const int size = problem.n() + 2;
  if (static_cast<int>(tables.predecessor.size()) != size || static_cast<int>(tour.size()) != size)
    throw std::logic_error("split tables do not match the tour");
  std::vector<int> pos(size, -1);
  for (int p = 0; p < size; ++p) pos[tour[p]] = p;
  std::map<std::pair<NodeId, NodeId>, NodeId> drone_of;
  for (const CandidateDelivery& d : tables.deliveries) drone_of[{d.launch, d.rendezvous}] = d.customer;

  std::vector<bool> drone_node(size, false);
  Solution sol;
  NodeId k = tour.back();
  int guard = 0;
  while (k != tour.front()) {
    const NodeId i = tables.predecessor[k];
    if (i < 0 || i >= size || pos[i] >= pos[k] || ++guard > size)
      throw std::logic_error("split predecessor chain is broken");
    if (pos[k] - pos[i] >= 2) {
      auto it = drone_of.find({i, k});
      if (it == drone_of.end()) throw std::logic_error("split chose a spanning arc without a delivery");
      const NodeId j = it->second;
      if (pos[j] <= pos[i] || pos[j] >= pos[k]) throw std::logic_error("split delivery lies outside its arc");
      drone_node[j] = true;
      sol.deliveries.push_back({i, j, k});
    }
    k = i;
  }
  for (NodeId v : tour)
    if (!drone_node[v]) sol.truck_tour.push_back(v);
  std::reverse(sol.deliveries.begin(), sol.deliveries.end());
  return sol;
}

Solution split(const Problem& problem, const Tour& tour, Objective objective) {
  return extract(build_and_search(problem, tour, objective), tour, problem);
}

}  // namespace tspd
