#include "tspd/tspls.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace tspd {

namespace {

double arc(const Problem& pb, Objective obj, NodeId u, NodeId v) {
  return obj == Objective::MinCost ? pb.params().truck_cost * pb.truck_dist(u, v) : pb.truck_time(u, v);
}

double detour(const Problem& pb, Objective obj, NodeId u, NodeId j, NodeId v) {
  return arc(pb, obj, u, j) + arc(pb, obj, j, v) - arc(pb, obj, u, v);
}

double detour_time(const Problem& pb, NodeId u, NodeId j, NodeId v) {
  return pb.truck_time(u, j) + pb.truck_time(j, v) - pb.truck_time(u, v);
}

// Drone legs plus waiting (cost), or waiting plus service (time), of one sortie
// whose truck side takes tt minutes.
double sortie_extra(const Problem& pb, Objective obj, const DroneDelivery& d, double tt) {
  const CostParams& p = pb.params();
  const double dt = pb.drone_time(d.launch, d.customer) + pb.drone_time(d.customer, d.rendezvous);
  if (obj == Objective::MinCost)
    return p.drone_cost * (pb.drone_dist(d.launch, d.customer) + pb.drone_dist(d.customer, d.rendezvous)) +
           p.truck_wait_fee * std::max(0.0, dt - tt) + p.drone_wait_fee * std::max(0.0, tt - dt);
  return std::max(0.0, dt - tt) + p.launch_time + p.retrieve_time;
}

double route_time(const Problem& pb, const std::vector<NodeId>& nodes) {
  double t = 0.0;
  for (std::size_t q = 1; q < nodes.size(); ++q) t += pb.truck_time(nodes[q - 1], nodes[q]);
  return t;
}

// Subroute and index of interior node j.
std::pair<int, int> locate(const TspLsState& st, NodeId j) {
  for (std::size_t s = 0; s < st.subroutes.size(); ++s) {
    const auto& nodes = st.subroutes[s].nodes;
    for (std::size_t q = 1; q + 1 < nodes.size(); ++q)
      if (nodes[q] == j) return {static_cast<int>(s), static_cast<int>(q)};
  }
  throw std::logic_error("node " + std::to_string(j) + " is not inside any truck subroute");
}

void rebuild_route(TspLsState& st) {
  st.truck_route.clear();
  for (const Subroute& s : st.subroutes) {
    auto from = s.nodes.begin();
    if (!st.truck_route.empty()) ++from;
    st.truck_route.insert(st.truck_route.end(), from, s.nodes.end());
  }
}

void offer(TspLsState& st, const TspLsMove& m) {
  if (m.savings > st.best.savings) st.best = m;
}

}  // namespace

Solution TspLsState::solution() const {
  Solution s{truck_route, {}};
  for (const Subroute& r : subroutes)
    if (r.sortie) s.deliveries.push_back(*r.sortie);
  return s;
}

TspLsState tspls_initial_state(const Problem& pb, const Tour& tour) {
  if (!is_giant_tour(pb, tour)) throw std::invalid_argument("initial tour must visit every customer once");
  TspLsState st;
  for (NodeId v = 1; v <= pb.n(); ++v) st.customers.push_back(v);
  st.truck_route = tour;
  st.subroutes.push_back({tour, std::nullopt});
  return st;
}

double calc_savings(const Problem& pb, const TspLsState& st, NodeId j, Objective obj) {
  const auto [s, q] = locate(st, j);
  const Subroute& r = st.subroutes[s];
  const NodeId prev = r.nodes[q - 1], next = r.nodes[q + 1];
  double savings = detour(pb, obj, prev, j, next);
  if (r.sortie) {
    const double tt = route_time(pb, r.nodes);
    savings += sortie_extra(pb, obj, *r.sortie, tt) - sortie_extra(pb, obj, *r.sortie, tt - detour_time(pb, prev, j, next));
  }
  return savings;
}

void relocate_as_truck(const Problem& pb, TspLsState& st, NodeId j, int s, double savings, Objective obj) {
  const Subroute& r = st.subroutes[s];
  if (!r.sortie) throw std::invalid_argument("relocate_as_truck needs a subroute with a sortie");
  // Truck time of the subroute once j has left it.
  double base = route_time(pb, r.nodes);
  const auto it = std::find(r.nodes.begin(), r.nodes.end(), j);
  if (it != r.nodes.end()) base -= detour_time(pb, *(it - 1), j, *(it + 1));
  const double before = sortie_extra(pb, obj, *r.sortie, base);
  for (std::size_t q = 0; q + 1 < r.nodes.size(); ++q) {
    const NodeId e = r.nodes[q], f = r.nodes[q + 1];
    if (e == j || f == j) continue;
    const double tt = base + detour_time(pb, e, j, f);
    if (tt > pb.params().endurance) continue;
    const double delta = detour(pb, obj, e, j, f) + sortie_extra(pb, obj, *r.sortie, tt) - before;
    offer(st, {false, e, j, f, s, savings - delta});
  }
}

void relocate_as_drone(const Problem& pb, TspLsState& st, NodeId j, int s, double savings, Objective obj) {
  const Subroute& r = st.subroutes[s];
  if (r.sortie) throw std::invalid_argument("relocate_as_drone needs a subroute without a sortie");
  const int len = static_cast<int>(r.nodes.size());
  std::vector<double> prefix(len, 0.0);
  for (int q = 1; q < len; ++q) prefix[q] = prefix[q - 1] + pb.truck_time(r.nodes[q - 1], r.nodes[q]);
  int pj = -1;
  double cut = 0.0;
  for (int q = 1; q + 1 < len; ++q)
    if (r.nodes[q] == j) {
      pj = q;
      cut = detour_time(pb, r.nodes[q - 1], j, r.nodes[q + 1]);
    }
  for (int a = 0; a < len; ++a) {
    if (a == pj) continue;
    for (int b = a + 1; b < len; ++b) {
      if (b == pj) continue;
      const DroneDelivery d{r.nodes[a], j, r.nodes[b]};
      if (!pb.feasible_delivery(d)) continue;
      const double tt = prefix[b] - prefix[a] - (a < pj && pj < b ? cut : 0.0);
      offer(st, {true, d.launch, j, d.rendezvous, s, savings - sortie_extra(pb, obj, d, tt)});
    }
  }
}

void apply_changes(TspLsState& st) {
  const TspLsMove m = st.best;
  if (m.j < 0) throw std::logic_error("no move to apply");
  {
    const auto [s, q] = locate(st, m.j);
    st.subroutes[s].nodes.erase(st.subroutes[s].nodes.begin() + q);
  }
  auto& nodes = st.subroutes[m.subroute].nodes;
  if (!m.drone) {
    const auto at = std::find(nodes.begin(), nodes.end(), m.k);
    if (at == nodes.begin() || at == nodes.end() || *(at - 1) != m.i) throw std::logic_error("insertion point vanished");
    nodes.insert(at, m.j);
  } else {
    const auto a = std::find(nodes.begin(), nodes.end(), m.i);
    const auto b = std::find(a, nodes.end(), m.k);
    if (a == nodes.end() || b == nodes.end()) throw std::logic_error("sortie ends vanished");
    std::vector<Subroute> parts;
    if (a != nodes.begin()) parts.push_back({{nodes.begin(), a + 1}, std::nullopt});
    parts.push_back({{a, b + 1}, DroneDelivery{m.i, m.j, m.k}});
    if (b + 1 != nodes.end()) parts.push_back({{b, nodes.end()}, std::nullopt});
    st.subroutes.erase(st.subroutes.begin() + m.subroute);
    st.subroutes.insert(st.subroutes.begin() + m.subroute, parts.begin(), parts.end());
    std::erase_if(st.customers, [&](NodeId v) { return v == m.i || v == m.j || v == m.k; });
  }
  rebuild_route(st);
  st.best = {};
}

TspLsResult run_tspls(const Problem& pb, Objective obj, const std::optional<Tour>& initial, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  TspLsState st = tspls_initial_state(pb, initial ? *initial : reference_tour(pb, seed));
  TspLsResult res;
  res.history.push_back(evaluate(pb, st.solution()).value(obj));
  for (;;) {
    st.best = {};
    // Moves worth less than rounding noise are not taken.
    st.best.savings = 1e-9 * std::max(1.0, std::abs(res.history.back()));
    for (NodeId j : st.customers) {
      const double savings = calc_savings(pb, st, j, obj);
      for (int s = 0; s < static_cast<int>(st.subroutes.size()); ++s) {
        if (st.subroutes[s].sortie)
          relocate_as_truck(pb, st, j, s, savings, obj);
        else
          relocate_as_drone(pb, st, j, s, savings, obj);
      }
    }
    if (st.best.j < 0) break;
    const bool drone = st.best.drone;
    apply_changes(st);
    const double value = evaluate(pb, st.solution()).value(obj);
    if (!(value < res.history.back())) throw std::logic_error("TSP-LS move did not decrease the objective");
    res.history.push_back(value);
    ++res.iterations;
    res.drone_iterations += drone;
  }
  res.solution = st.solution();
  canonicalize(res.solution);
  res.evaluation = evaluate(pb, res.solution);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace tspd
