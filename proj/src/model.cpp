#include "tspd/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tspd {

void CostParams::check() const {
  const double scalars[] = {truck_cost,    drone_cost, truck_wait_fee, drone_wait_fee,
                            launch_time,   retrieve_time, endurance};
  for (double v : scalars)
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("cost parameters must be finite and non-negative");
  if (!(truck_speed > 0.0) || !(drone_speed > 0.0) || !std::isfinite(truck_speed) ||
      !std::isfinite(drone_speed))
    throw std::invalid_argument("speeds must be positive");
}

void Instance::check() const {
  if (n < 1) throw std::invalid_argument("instance needs at least one customer");
  if (static_cast<int>(points.size()) != n + 1)
    throw std::invalid_argument("instance must hold n+1 points");
  if (static_cast<int>(drone_eligible.size()) != n + 2)
    throw std::invalid_argument("drone eligibility must cover n+2 nodes");
  if (drone_eligible[0] || drone_eligible[n + 1])
    throw std::invalid_argument("depot cannot be drone-eligible");
  for (const Point& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("coordinates must be finite");
  params.check();
}

namespace {

double distance(Metric metric, const Point& a, const Point& b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  if (metric == Metric::Manhattan) return std::abs(dx) + std::abs(dy);
  return std::hypot(dx, dy);
}

}  // namespace

Matrices build_matrices(const Instance& instance) {
  const int size = instance.node_count();
  const CostParams& p = instance.params;
  Matrices m;
  m.truck_dist.resize(size, size);
  m.drone_dist.resize(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      m.truck_dist(i, j) = distance(p.truck_metric, instance.point(i), instance.point(j));
      m.drone_dist(i, j) = distance(p.drone_metric, instance.point(i), instance.point(j));
    }
  }
  m.truck_time = m.truck_dist / p.truck_speed * 60.0;
  m.drone_time = m.drone_dist / p.drone_speed * 60.0;
  return m;
}

void canonicalize(Solution& solution) {
  auto position = [&](NodeId v) {
    auto it = std::find(solution.truck_tour.begin(), solution.truck_tour.end(), v);
    return static_cast<long>(it - solution.truck_tour.begin());
  };
  std::stable_sort(solution.deliveries.begin(), solution.deliveries.end(),
                   [&](const DroneDelivery& a, const DroneDelivery& b) {
                     long pa = position(a.launch), pb = position(b.launch);
                     if (pa != pb) return pa < pb;
                     return a < b;
                   });
}

Problem::Problem(Instance instance) : instance_(std::move(instance)) {
  instance_.check();
  m_ = build_matrices(instance_);
  max_time_ = std::max(m_.truck_time.maxCoeff(), m_.drone_time.maxCoeff());
}

bool Problem::feasible_delivery(NodeId i, NodeId j, NodeId k) const {
  const int n = instance_.n;
  if (i < 0 || i > n || k < 1 || k > n + 1 || j < 1 || j > n) return false;
  if (i == j || j == k || i == k) return false;
  if (i == 0 && k == n + 1) return false;
  if (!instance_.drone_eligible[j]) return false;
  return m_.drone_time(i, j) + m_.drone_time(j, k) <= instance_.params.endurance;
}

std::vector<DroneDelivery> enumerate_feasible_deliveries(const Problem& problem) {
  std::vector<DroneDelivery> out;
  const int n = problem.n();
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId j = 1; j <= n; ++j)
      for (NodeId k = 1; k <= n + 1; ++k)
        if (problem.feasible_delivery(i, j, k)) out.push_back({i, j, k});
  return out;
}

std::vector<DroneDelivery> enumerate_feasible_deliveries(const Instance& instance) {
  return enumerate_feasible_deliveries(Problem(instance));
}

const char* to_string(Objective objective) {
  return objective == Objective::MinCost ? "min_cost" : "min_time";
}

const char* to_string(Metric metric) {
  return metric == Metric::Manhattan ? "manhattan" : "euclidean";
}

Objective objective_from_string(const std::string& s) {
  if (s == "min_cost" || s == "cost") return Objective::MinCost;
  if (s == "min_time" || s == "time") return Objective::MinTime;
  throw std::invalid_argument("unknown objective: " + s);
}

Metric metric_from_string(const std::string& s) {
  if (s == "manhattan") return Metric::Manhattan;
  if (s == "euclidean") return Metric::Euclidean;
  throw std::invalid_argument("unknown metric: " + s);
}

}  // namespace tspd
