#pragma once

#include "tspd/construct.hpp"
#include "tspd/eval.hpp"
#include "tspd/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tspd {

struct GraspConfig {
  int n_tsp = 2000;
  Constructor constructor = Constructor::NearestNeighbour;
  std::vector<int> k_choices{2, 3};
  Objective objective = Objective::MinCost;
  std::uint64_t seed = 1;
  int parallel_workers = 1;
  bool local_search = true;  // false gives the split-only variant

  void check() const;
};

struct GraspResult {
  Solution best;
  Evaluation evaluation;
  int iterations = 0;
  int best_iteration = 0;
  double seconds = 0.0;
  std::vector<double> iteration_values;  // objective reached by each iteration
};

// Iteration t draws everything from its own stream derive_seed(seed, t), so
// the result does not depend on the number of workers.
GraspResult run_grasp(const Problem& problem, const GraspConfig& config);

// One iteration from the reference tour (or the supplied one).
GraspResult run_grasp_plus(const Problem& problem, const GraspConfig& config,
                           const std::optional<Tour>& tour = std::nullopt);

}  // namespace tspd
