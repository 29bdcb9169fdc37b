#pragma once

#include "tspd/construct.hpp"
#include "tspd/model.hpp"

#include <optional>
#include <vector>

namespace tspd {

// Arc of the auxiliary graph over tour positions. An arc spanning two or more
// positions carries the best drone customer between its ends, or +inf cost.
struct AuxArc {
  NodeId from = 0;
  NodeId to = 0;
  double cost = 0.0;
  std::optional<NodeId> drone_node;
};

struct CandidateDelivery {
  NodeId launch = 0;
  NodeId customer = 0;
  NodeId rendezvous = 0;
  double cost = 0.0;
};

// Indexed by node id.
struct SplitTables {
  std::vector<NodeId> predecessor;
  std::vector<double> value;
  std::vector<CandidateDelivery> deliveries;
};

std::vector<AuxArc> auxiliary_arcs(const Problem& problem, const Tour& tour, Objective objective);
SplitTables build_and_search(const Problem& problem, const Tour& tour, Objective objective);
// Throws std::logic_error when the tables do not describe a path on this tour.
Solution extract(const SplitTables& tables, const Tour& tour, const Problem& problem);
Solution split(const Problem& problem, const Tour& tour, Objective objective);

}  // namespace tspd
