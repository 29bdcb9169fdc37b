#pragma once

#include "tspd/eval.hpp"
#include "tspd/model.hpp"

#include <optional>
#include <vector>

namespace tspd {

// Each operator returns the neighbour, or nothing when the move is not
// applicable or its result fails validation.

// Move truck-only node a so that it is visited immediately before b.
std::optional<Solution> relocate_truck(const Problem& problem, const Solution& s, NodeId a, NodeId b);
// Serve customer a by a new sortie from i to k (a leaves the tour or its old sortie).
std::optional<Solution> relocate_drone(const Problem& problem, const Solution& s, NodeId a, NodeId i, NodeId k);
// Drop the sortie serving j and visit j by truck immediately before k.
std::optional<Solution> remove_drone(const Problem& problem, const Solution& s, NodeId j, NodeId k);
// Swap the roles of customers a and b everywhere they appear.
std::optional<Solution> two_exchange(const Problem& problem, const Solution& s, NodeId a, NodeId b);

enum class MoveKind { RelocateTruck, RelocateDrone, RemoveDrone, TwoExchange };

const char* to_string(MoveKind kind);

// RelocateTruck(a, b), RelocateDrone(a, i=b, k=c), RemoveDrone(j=a, k=b), TwoExchange(a, b).
struct Move {
  MoveKind kind = MoveKind::RelocateTruck;
  NodeId a = -1;
  NodeId b = -1;
  NodeId c = -1;
  double delta = 0.0;
};

std::optional<Solution> apply_move(const Problem& problem, const Solution& s, const Move& m);

// Every applicable move with its incrementally computed objective change, in
// scan order: the four operators in declaration order, nodes ascending.
std::vector<Move> neighbourhood(const Problem& problem, const Solution& s, Objective objective);

struct ImproveStats {
  int moves = 0;
  int scans = 0;
  int by_kind[4] = {0, 0, 0, 0};
};

// Best improvement over all four neighbourhoods until no move gains more than
// a relative 1e-9. The input must be valid.
Solution improve(const Problem& problem, Solution s, Objective objective, ImproveStats* stats = nullptr);

}  // namespace tspd
