#include <doctest.h>

#include "support/fixtures.hpp"
#include "tspd/construct.hpp"
#include "tspd/eval.hpp"

#include <algorithm>
#include <limits>
#include <set>

using namespace tspd;

TEST_CASE("insertion cost arithmetic") { CHECK(insertion_cost(1.0, 1.0, 2.0) == 0.0); }

TEST_CASE("greedy nearest neighbour on a line") {
  Problem pb(fixtures::collinear());
  Rng rng(1);
  CHECK(k_nearest_neighbour(pb, 1, rng) == Tour{0, 1, 2, 3, 4});
}

TEST_CASE("k equal to n reaches every order") {
  Problem pb(fixtures::make_instance({{0, 0}, {1, 0}, {2, 1}, {0, 3}, {4, 4}}, {}));
  std::set<Tour> seen;
  Rng rng(2024);
  for (int r = 0; r < 2000; ++r) seen.insert(k_nearest_neighbour(pb, 4, rng));
  CHECK(seen.size() == 24);
}

TEST_CASE("constructors are deterministic under a seed and yield giant tours") {
  Problem pb(fixtures::random_instance(30, 8));
  for (Constructor c : {Constructor::NearestNeighbour, Constructor::CheapestInsertion, Constructor::RandomInsertion}) {
    for (int k : {1, 2, 3}) {
      Rng a(77), b(77);
      Tour t1 = construct(pb, c, k, a);
      Tour t2 = construct(pb, c, k, b);
      CHECK(t1 == t2);
      CHECK(is_giant_tour(pb, t1));
      CHECK(validate(pb, {t1, {}}).empty());
    }
  }
}

TEST_CASE("k=1 constructors do not depend on the seed") {
  Problem pb(fixtures::random_instance(20, 4));
  Rng a(1), b(999);
  CHECK(k_nearest_neighbour(pb, 1, a) == k_nearest_neighbour(pb, 1, b));
  CHECK(k_cheapest_insertion(pb, 1, a) == k_cheapest_insertion(pb, 1, b));
}

namespace {

// Cheapest insertion written out as a plain nested search.
Tour trace_cheapest_insertion(const Problem& pb) {
  Tour tour{0, pb.end_depot()};
  std::vector<bool> used(pb.n() + 2, false);
  for (int step = 0; step < pb.n(); ++step) {
    double best = std::numeric_limits<double>::infinity();
    NodeId bv = -1;
    int be = -1;
    for (NodeId v = 1; v <= pb.n(); ++v) {
      if (used[v]) continue;
      for (int e = 0; e + 1 < static_cast<int>(tour.size()); ++e) {
        double ic = pb.truck_dist(tour[e], v) + pb.truck_dist(v, tour[e + 1]) - pb.truck_dist(tour[e], tour[e + 1]);
        if (ic < best) {
          best = ic;
          bv = v;
          be = e;
        }
      }
    }
    used[bv] = true;
    tour.insert(tour.begin() + be + 1, bv);
  }
  return tour;
}

}  // namespace

TEST_CASE("k=1 cheapest insertion matches a plain trace") {
  Problem four(fixtures::four_node());
  Rng rng(3);
  // By hand: 1 goes first (IC 2); 3 ties at IC 4 on both edges and takes the
  // earlier one; 2 ties at IC 4 on (0,3) and (3,1) and again takes the earlier.
  CHECK(k_cheapest_insertion(four, 1, rng) == Tour{0, 2, 3, 1, 4});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Problem pb(fixtures::random_instance(9, seed));
    CHECK(k_cheapest_insertion(pb, 1, rng) == trace_cheapest_insertion(pb));
  }
}

TEST_CASE("random insertion with one customer") {
  Problem pb(fixtures::make_instance({{0, 0}, {2, 3}}, {1}));
  Rng rng(1);
  CHECK(random_insertion(pb, rng) == Tour{0, 1, 2});
}

TEST_CASE("exact tsp agrees with enumeration") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Problem pb(fixtures::random_instance(3 + static_cast<int>(seed % 5), seed));
    Tour perm;
    for (NodeId v = 0; v <= pb.n() + 1; ++v) perm.push_back(v);
    double best = std::numeric_limits<double>::infinity();
    do best = std::min(best, tour_length(pb, perm));
    while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
    Tour t = exact_tsp(pb);
    CHECK(is_giant_tour(pb, t));
    CHECK(tour_length(pb, t) == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("exact tsp on a square and a single customer") {
  Problem square(fixtures::make_instance({{0, 0}, {0, 1}, {0, 2}, {2, 2}, {2, 0}}, {}));
  CHECK(tour_length(square, exact_tsp(square)) == doctest::Approx(8.0));
  Problem one(fixtures::make_instance({{0, 0}, {2, 3}}, {1}));
  CHECK(exact_tsp(one) == Tour{0, 1, 2});
  CHECK_THROWS_AS(exact_tsp(Problem(fixtures::random_instance(16, 1))), std::invalid_argument);
}

TEST_CASE("polishing never lengthens a tour") {
  Problem pb(fixtures::random_instance(40, 6));
  Rng rng(1);
  for (int r = 0; r < 5; ++r) {
    Tour t = random_insertion(pb, rng);
    Tour p = polish(pb, t);
    CHECK(is_giant_tour(pb, p));
    CHECK(tour_length(pb, p) <= tour_length(pb, t) + 1e-9);
  }
  Problem small(fixtures::random_instance(12, 6));
  CHECK(tour_length(small, best_known_tour(small, 1, 20)) >= tour_length(small, exact_tsp(small)) - 1e-9);
}
