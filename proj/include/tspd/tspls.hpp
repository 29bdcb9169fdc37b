#pragma once

#include "tspd/construct.hpp"
#include "tspd/eval.hpp"
#include "tspd/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tspd {

// Consecutive stretch of the truck route. Neighbouring subroutes share their
// end node; a subroute with a sortie runs from its launch to its rendezvous.
struct Subroute {
  std::vector<NodeId> nodes;
  std::optional<DroneDelivery> sortie;
};

struct TspLsMove {
  bool drone = false;
  NodeId i = -1;  // drone: launch; truck: node before the insertion point
  NodeId j = -1;
  NodeId k = -1;  // drone: rendezvous; truck: node after the insertion point
  int subroute = -1;
  double savings = 0.0;
};

struct TspLsState {
  std::vector<NodeId> customers;  // still movable, ascending
  std::vector<NodeId> truck_route;
  std::vector<Subroute> subroutes;
  TspLsMove best;

  Solution solution() const;
};

TspLsState tspls_initial_state(const Problem& problem, const Tour& tour);

// Objective decrease from taking truck node j out of its subroute.
double calc_savings(const Problem& problem, const TspLsState& state, NodeId j, Objective objective);

// Candidate insertions of j between neighbours of a subroute carrying a sortie.
void relocate_as_truck(const Problem& problem, TspLsState& state, NodeId j, int subroute, double savings,
                       Objective objective);

// Candidate sorties for j inside a subroute without one.
void relocate_as_drone(const Problem& problem, TspLsState& state, NodeId j, int subroute, double savings,
                       Objective objective);

void apply_changes(TspLsState& state);

struct TspLsResult {
  Solution solution;
  Evaluation evaluation;
  std::vector<double> history;  // objective before the first and after every applied move
  int iterations = 0;
  int drone_iterations = 0;
  double seconds = 0.0;
};

// Starts from the supplied tour, or from reference_tour(problem, seed).
TspLsResult run_tspls(const Problem& problem, Objective objective, const std::optional<Tour>& initial = std::nullopt,
                      std::uint64_t seed = 1);

}  // namespace tspd
