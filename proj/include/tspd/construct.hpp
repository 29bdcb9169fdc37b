#pragma once

#include "tspd/model.hpp"
#include "tspd/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tspd {

// Giant tour: 0, every customer once, n+1.
using Tour = std::vector<NodeId>;

enum class Constructor { NearestNeighbour, CheapestInsertion, RandomInsertion };

const char* to_string(Constructor c);
Constructor constructor_from_string(const std::string& s);

bool is_giant_tour(const Problem& problem, const Tour& tour);

Tour k_nearest_neighbour(const Problem& problem, int k, Rng& rng);
Tour k_cheapest_insertion(const Problem& problem, int k, Rng& rng);
Tour random_insertion(const Problem& problem, Rng& rng);
Tour construct(const Problem& problem, Constructor c, int k, Rng& rng);

inline double insertion_cost(double d_iv, double d_vj, double d_ij) { return d_iv + d_vj - d_ij; }

double tour_length(const Problem& problem, const Tour& tour);
double tour_time(const Problem& problem, const Tour& tour);

inline constexpr int kExactTspLimit = 15;
// Held-Karp; refuses n > kExactTspLimit.
Tour exact_tsp(const Problem& problem);

// 2-opt plus or-opt descent on truck distance.
Tour polish(const Problem& problem, Tour tour);

// Best of `restarts` seeded nearest-neighbour tours, each polished. For
// instances too large for exact_tsp.
Tour best_known_tour(const Problem& problem, std::uint64_t seed = 1, int restarts = 50);

// exact_tsp when it is tractable, best_known_tour otherwise.
Tour reference_tour(const Problem& problem, std::uint64_t seed = 1);

}  // namespace tspd
