#pragma once

#include <Eigen/Core>

#include <compare>
#include <string>
#include <vector>

namespace tspd {

using NodeId = int;

enum class Metric { Manhattan, Euclidean };
enum class Objective { MinCost, MinTime };

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct CostParams {
  double truck_cost = 25.0;      // per km
  double drone_cost = 1.0;       // per km
  double truck_wait_fee = 10.0;  // per minute the truck waits
  double drone_wait_fee = 10.0;  // per minute the drone hovers
  double launch_time = 1.0;      // minutes
  double retrieve_time = 1.0;    // minutes
  double endurance = 20.0;       // minutes of flight per sortie
  double truck_speed = 40.0;     // km/h
  double drone_speed = 40.0;     // km/h
  Metric truck_metric = Metric::Manhattan;
  Metric drone_metric = Metric::Euclidean;

  bool operator==(const CostParams&) const = default;
  void check() const;
};

// Nodes are 0 (depot), 1..n (customers) and n+1, a copy of the depot that
// closes the tour. points holds n+1 entries; node n+1 reuses points[0].
struct Instance {
  std::string id;
  int n = 0;
  double area = 0.0;
  std::vector<Point> points;
  std::vector<bool> drone_eligible;  // indexed by node id, size n+2
  CostParams params;

  bool operator==(const Instance&) const = default;

  NodeId end_depot() const { return n + 1; }
  int node_count() const { return n + 2; }
  const Point& point(NodeId v) const { return points[v == n + 1 ? 0 : v]; }
  void check() const;
};

struct Matrices {
  Eigen::MatrixXd truck_dist;
  Eigen::MatrixXd drone_dist;
  Eigen::MatrixXd truck_time;  // minutes
  Eigen::MatrixXd drone_time;  // minutes
};

Matrices build_matrices(const Instance& instance);

struct DroneDelivery {
  NodeId launch = 0;
  NodeId customer = 0;
  NodeId rendezvous = 0;
  auto operator<=>(const DroneDelivery&) const = default;
};

struct Solution {
  std::vector<NodeId> truck_tour;
  std::vector<DroneDelivery> deliveries;
  bool operator==(const Solution&) const = default;
};

// Orders deliveries by the tour position of their launch node so that equal
// solutions compare and serialize identically.
void canonicalize(Solution& solution);

// An instance bundled with its matrices; the unit every algorithm works on.
class Problem {
 public:
  explicit Problem(Instance instance);

  const Instance& instance() const { return instance_; }
  const CostParams& params() const { return instance_.params; }
  const Matrices& matrices() const { return m_; }
  int n() const { return instance_.n; }
  NodeId end_depot() const { return instance_.n + 1; }

  double truck_dist(NodeId i, NodeId j) const { return m_.truck_dist(i, j); }
  double drone_dist(NodeId i, NodeId j) const { return m_.drone_dist(i, j); }
  double truck_time(NodeId i, NodeId j) const { return m_.truck_time(i, j); }
  double drone_time(NodeId i, NodeId j) const { return m_.drone_time(i, j); }
  bool eligible(NodeId j) const { return instance_.drone_eligible[j]; }

  // Membership in the set of endurance-feasible deliveries.
  bool feasible_delivery(NodeId i, NodeId j, NodeId k) const;
  bool feasible_delivery(const DroneDelivery& d) const {
    return feasible_delivery(d.launch, d.customer, d.rendezvous);
  }

  // Largest entry over both time matrices.
  double max_travel_time() const { return max_time_; }

 private:
  Instance instance_;
  Matrices m_;
  double max_time_ = 0.0;
};

std::vector<DroneDelivery> enumerate_feasible_deliveries(const Problem& problem);
std::vector<DroneDelivery> enumerate_feasible_deliveries(const Instance& instance);

const char* to_string(Objective objective);
const char* to_string(Metric metric);
Objective objective_from_string(const std::string& s);
Metric metric_from_string(const std::string& s);

}  // namespace tspd
