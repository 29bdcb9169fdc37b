#pragma once

#include "tspd/model.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tspd {

enum class Clause {
  Structure,    // TD endpoints, repeats, node ids
  Coverage,     // (A) every customer served exactly once overall
  DroneTwice,   // (B)
  Compatible,   // (C) drone customer off the tour, launch before rendezvous on it
  Interference, // (D)
  Eligibility,
  Endurance,
};

const char* to_string(Clause clause);

struct Violation {
  Clause clause;
  std::vector<NodeId> nodes;
  std::string message;
};

std::vector<Violation> validate(const Problem& problem, const Solution& solution);
inline bool is_valid(const Problem& problem, const Solution& solution) {
  return validate(problem, solution).empty();
}

struct SortieTiming {
  DroneDelivery delivery;
  double launch = 0.0;              // drone leaves the truck
  double drone_at_customer = 0.0;
  double drone_at_rendezvous = 0.0;
  double truck_at_rendezvous = 0.0;
  double truck_wait = 0.0;          // minutes the truck waits for the drone
  double drone_wait = 0.0;          // minutes the drone hovers
};

// Times include launch and retrieval service. Positions follow truck_tour.
struct Timeline {
  std::vector<double> arrival;
  std::vector<double> departure;
  std::vector<SortieTiming> sorties;  // same order as Solution::deliveries
};

struct Evaluation {
  double truck_transport_cost = 0.0;
  double drone_transport_cost = 0.0;
  double truck_waiting_cost = 0.0;
  double drone_waiting_cost = 0.0;
  double total_cost = 0.0;
  double completion_time = 0.0;  // minutes
  Timeline timeline;

  double value(Objective objective) const {
    return objective == Objective::MinCost ? total_cost : completion_time;
  }
  double total_truck_wait() const;
  double total_drone_wait() const;
};

class InvalidSolution : public std::runtime_error {
 public:
  explicit InvalidSolution(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Both objectives are always computed; the two names differ only in intent.
Evaluation evaluate_min_cost(const Problem& problem, const Solution& solution);
Evaluation evaluate_min_time(const Problem& problem, const Solution& solution);
Evaluation evaluate(const Problem& problem, const Solution& solution);

// Skips validation. The solution must be structurally sound (valid ids, every
// launch and rendezvous on the tour before use).
Evaluation evaluate_unchecked(const Problem& problem, const Solution& solution);

double objective_value(const Problem& problem, const Solution& solution, Objective objective);

}  // namespace tspd
