#include "tspd/construct.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace tspd {

const char* to_string(Constructor c) {
  switch (c) {
    case Constructor::NearestNeighbour: return "knn";
    case Constructor::CheapestInsertion: return "kci";
    case Constructor::RandomInsertion: return "ri";
  }
  return "?";
}

Constructor constructor_from_string(const std::string& s) {
  if (s == "knn" || s == "nearest") return Constructor::NearestNeighbour;
  if (s == "kci" || s == "cheapest") return Constructor::CheapestInsertion;
  if (s == "ri" || s == "random") return Constructor::RandomInsertion;
  throw std::invalid_argument("unknown constructor: " + s);
}

bool is_giant_tour(const Problem& problem, const Tour& tour) {
  const int n = problem.n();
  if (static_cast<int>(tour.size()) != n + 2 || tour.front() != 0 || tour.back() != n + 1) return false;
  std::vector<bool> seen(n + 2, false);
  for (NodeId v : tour) {
    if (v < 0 || v > n + 1 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {

std::vector<NodeId> customers(const Problem& problem) {
  std::vector<NodeId> c;
  for (NodeId v = 1; v <= problem.n(); ++v) c.push_back(v);
  return c;
}

}  // namespace

Tour k_nearest_neighbour(const Problem& problem, int k, Rng& rng) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<NodeId> open = customers(problem);
  Tour tour{0};
  std::vector<std::pair<double, NodeId>> cand;
  while (!open.empty()) {
    const NodeId cur = tour.back();
    cand.clear();
    for (NodeId v : open) cand.emplace_back(problem.truck_dist(cur, v), v);
    const std::size_t width = std::min<std::size_t>(k, cand.size());
    std::partial_sort(cand.begin(), cand.begin() + width, cand.end());
    const NodeId pick = cand[rng.below(width)].second;
    tour.push_back(pick);
    open.erase(std::find(open.begin(), open.end(), pick));
  }
  tour.push_back(problem.end_depot());
  return tour;
}

Tour k_cheapest_insertion(const Problem& problem, int k, Rng& rng) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<NodeId> open = customers(problem);
  Tour tour{0, problem.end_depot()};
  // (IC, node, edge index); lexicographic order gives the low-index tie-break.
  using Option = std::tuple<double, NodeId, int>;
  std::vector<Option> best;
  while (!open.empty()) {
    best.clear();
    for (NodeId v : open) {
      for (int e = 0; e + 1 < static_cast<int>(tour.size()); ++e) {
        const NodeId a = tour[e], b = tour[e + 1];
        Option o{insertion_cost(problem.truck_dist(a, v), problem.truck_dist(v, b), problem.truck_dist(a, b)), v, e};
        if (static_cast<int>(best.size()) < k) {
          best.insert(std::upper_bound(best.begin(), best.end(), o), o);
        } else if (o < best.back()) {
          best.pop_back();
          best.insert(std::upper_bound(best.begin(), best.end(), o), o);
        }
      }
    }
    const auto& [ic, v, e] = best[rng.below(best.size())];
    tour.insert(tour.begin() + e + 1, v);
    open.erase(std::find(open.begin(), open.end(), v));
  }
  return tour;
}

Tour random_insertion(const Problem& problem, Rng& rng) {
  std::vector<NodeId> open = customers(problem);
  Tour tour{0, problem.end_depot()};
  while (!open.empty()) {
    const std::size_t idx = rng.below(open.size());
    const NodeId v = open[idx];
    open.erase(open.begin() + idx);
    int best_e = 0;
    double best_ic = std::numeric_limits<double>::infinity();
    for (int e = 0; e + 1 < static_cast<int>(tour.size()); ++e) {
      const NodeId a = tour[e], b = tour[e + 1];
      double ic = insertion_cost(problem.truck_dist(a, v), problem.truck_dist(v, b), problem.truck_dist(a, b));
      if (ic < best_ic) {
        best_ic = ic;
        best_e = e;
      }
    }
    tour.insert(tour.begin() + best_e + 1, v);
  }
  return tour;
}

Tour construct(const Problem& problem, Constructor c, int k, Rng& rng) {
  switch (c) {
    case Constructor::NearestNeighbour: return k_nearest_neighbour(problem, k, rng);
    case Constructor::CheapestInsertion: return k_cheapest_insertion(problem, k, rng);
    case Constructor::RandomInsertion: return random_insertion(problem, rng);
  }
  throw std::logic_error("unknown constructor");
}

double tour_length(const Problem& problem, const Tour& tour) {
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < tour.size(); ++p) s += problem.truck_dist(tour[p], tour[p + 1]);
  return s;
}

double tour_time(const Problem& problem, const Tour& tour) {
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < tour.size(); ++p) s += problem.truck_time(tour[p], tour[p + 1]);
  return s;
}

Tour exact_tsp(const Problem& problem) {
  const int n = problem.n();
  if (n > kExactTspLimit)
    throw std::invalid_argument("exact_tsp handles at most " + std::to_string(kExactTspLimit) + " customers");
  const std::uint32_t full = (1u << n) - 1;
  const double inf = std::numeric_limits<double>::infinity();
  // Customer c (1-based) is bit c-1; cost[mask * n + c-1] ends the path at c.
  std::vector<double> cost(static_cast<std::size_t>(full + 1) * n, inf);
  std::vector<std::int8_t> parent(cost.size(), -1);
  for (int c = 0; c < n; ++c) cost[(1u << c) * n + c] = problem.truck_dist(0, c + 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int last = 0; last < n; ++last) {
      if (!(mask & (1u << last))) continue;
      const double base = cost[mask * n + last];
      if (base == inf) continue;
      for (int next = 0; next < n; ++next) {
        if (mask & (1u << next)) continue;
        const std::uint32_t m2 = mask | (1u << next);
        const double v = base + problem.truck_dist(last + 1, next + 1);
        if (v < cost[m2 * n + next]) {
          cost[m2 * n + next] = v;
          parent[m2 * n + next] = static_cast<std::int8_t>(last);
        }
      }
    }
  }
  int best_last = 0;
  double best = inf;
  for (int last = 0; last < n; ++last) {
    const double v = cost[full * n + last] + problem.truck_dist(last + 1, n + 1);
    if (v < best) {
      best = v;
      best_last = last;
    }
  }
  Tour rev{n + 1};
  std::uint32_t mask = full;
  int cur = best_last;
  while (cur >= 0) {
    rev.push_back(cur + 1);
    const int prev = parent[mask * n + cur];
    mask &= ~(1u << cur);
    cur = prev;
  }
  rev.push_back(0);
  return Tour(rev.rbegin(), rev.rend());
}

Tour polish(const Problem& problem, Tour tour) {
  auto d = [&](NodeId a, NodeId b) { return problem.truck_dist(a, b); };
  const int len = static_cast<int>(tour.size());
  const double eps = 1e-10;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i + 2 < len; ++i) {
      for (int j = i + 2; j + 1 < len; ++j) {
        double delta = d(tour[i], tour[j]) + d(tour[i + 1], tour[j + 1]) - d(tour[i], tour[i + 1]) -
                       d(tour[j], tour[j + 1]);
        if (delta < -eps) {
          std::reverse(tour.begin() + i + 1, tour.begin() + j + 1);
          improved = true;
        }
      }
    }
    // Move a segment of 1-3 customers to another gap.
    for (int seg = 1; seg <= 3; ++seg) {
      for (int s = 1; s + seg < len; ++s) {
        const int e = s + seg - 1;
        const NodeId prev = tour[s - 1], next = tour[e + 1];
        const double removal = d(prev, tour[s]) + d(tour[e], next) - d(prev, next);
        for (int g = 0; g + 1 < len; ++g) {
          if (g >= s - 1 && g <= e) continue;
          const NodeId a = tour[g], b = tour[g + 1];
          const double add = d(a, tour[s]) + d(tour[e], b) - d(a, b);
          if (add - removal < -eps) {
            Tour moved(tour.begin() + s, tour.begin() + e + 1);
            tour.erase(tour.begin() + s, tour.begin() + e + 1);
            const int at = g < s ? g + 1 : g + 1 - seg;
            tour.insert(tour.begin() + at, moved.begin(), moved.end());
            improved = true;
            break;
          }
        }
      }
    }
  }
  return tour;
}

Tour best_known_tour(const Problem& problem, std::uint64_t seed, int restarts) {
  Tour best;
  double best_len = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    Tour t = polish(problem, k_nearest_neighbour(problem, r == 0 ? 1 : 3, rng));
    const double len = tour_length(problem, t);
    if (len < best_len) {
      best_len = len;
      best = std::move(t);
    }
  }
  return best;
}

Tour reference_tour(const Problem& problem, std::uint64_t seed) {
  if (problem.n() <= kExactTspLimit) return exact_tsp(problem);
  return best_known_tour(problem, seed);
}

}  // namespace tspd
