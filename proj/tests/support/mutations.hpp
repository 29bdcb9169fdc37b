#pragma once

#include "tspd/construct.hpp"
#include "tspd/localsearch.hpp"
#include "tspd/split.hpp"

namespace fixtures {

// Valid solutions and a spread of broken ones, all with ids in range.
inline tspd::Solution random_solution(const tspd::Problem& pb, tspd::Rng& rng, tspd::Objective obj) {
  const int n = pb.n();
  tspd::Tour tour = tspd::k_nearest_neighbour(pb, n, rng);
  tspd::Solution s = tspd::split(pb, tour, obj);
  if (rng.below(3) == 0) s = tspd::improve(pb, s, obj);
  auto node = [&](int lo, int hi) { return static_cast<tspd::NodeId>(lo + rng.below(hi - lo + 1)); };
  const int mutation = static_cast<int>(rng.below(12));
  auto& td = s.truck_tour;
  switch (mutation) {
    case 0: {  // a random extra delivery, possibly infeasible or clashing
      s.deliveries.push_back({node(0, n + 1), node(0, n + 1), node(0, n + 1)});
      break;
    }
    case 1:  // drop a truck customer
      if (td.size() > 2) td.erase(td.begin() + 1 + rng.below(td.size() - 2));
      break;
    case 2:  // visit a customer twice
      td.insert(td.begin() + 1 + rng.below(td.size() - 1), node(1, n));
      break;
    case 3:  // swap two tour positions, sorties keep their ends
      if (td.size() > 3) std::swap(td[1 + rng.below(td.size() - 2)], td[1 + rng.below(td.size() - 2)]);
      break;
    case 4:  // re-point a rendezvous
      if (!s.deliveries.empty()) s.deliveries[rng.below(s.deliveries.size())].rendezvous = td[rng.below(td.size())];
      break;
    case 5:  // re-point a launch
      if (!s.deliveries.empty()) s.deliveries[rng.below(s.deliveries.size())].launch = td[rng.below(td.size())];
      break;
    case 6:  // drop a sortie: its customer goes missing
      if (!s.deliveries.empty()) s.deliveries.erase(s.deliveries.begin() + rng.below(s.deliveries.size()));
      break;
    default:
      break;  // unchanged, valid
  }
  return s;
}

}  // namespace fixtures
