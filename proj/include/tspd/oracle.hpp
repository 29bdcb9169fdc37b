#pragma once

#include "tspd/construct.hpp"
#include "tspd/eval.hpp"

#include <chrono>
#include <stdexcept>

namespace tspd {

class OracleTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Solution solution;
  double value = 0.0;
  long long candidates = 0;  // complete solutions scored
};

inline constexpr int kExactTspdLimit = 7;

// Scores every set of disjoint sorties that respects the tour order with the
// evaluator and keeps the first minimum.
OracleResult exact_split(const Problem& problem, const Tour& tour, Objective objective,
                         std::chrono::seconds limit = std::chrono::seconds(120));

// exact_split over every customer permutation; n <= kExactTspdLimit.
OracleResult exact_tspd(const Problem& problem, Objective objective,
                        std::chrono::seconds limit = std::chrono::seconds(120));

}  // namespace tspd
