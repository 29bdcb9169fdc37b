#include <doctest.h>

#include "support/fixtures.hpp"
#include "tspd/oracle.hpp"

#include <algorithm>

using namespace tspd;

TEST_CASE("nothing to fly: the oracle returns the bare tour") {
  Problem pb(fixtures::four_node(fixtures::no_service(), {}));
  OracleResult r = exact_split(pb, {0, 1, 2, 3, 4}, Objective::MinCost);
  CHECK(r.solution == Solution{{0, 1, 2, 3, 4}, {}});
  CHECK(r.candidates == 1);
}

TEST_CASE("oracle counts order-respecting sortie sets") {
  // Every triple on the collinear instance is feasible except depot to depot.
  Problem pb(fixtures::collinear());
  OracleResult r = exact_split(pb, {0, 1, 2, 3, 4}, Objective::MinCost);
  // span 2: (0,2),(1,3),(2,4) -> 3 sorties; span 3: (0,3),(1,4) -> 2x2 = 4;
  // span 4 is depot to depot -> 0; two sorties: (0,2)+(2,4) -> 1.
  CHECK(r.candidates == 1 + 3 + 4 + 1);
}

TEST_CASE("single customer: no sortie is possible") {
  Problem pb(fixtures::make_instance({{0, 0}, {1, 1}}, {1}));
  OracleResult r = exact_tspd(pb, Objective::MinCost);
  CHECK(r.solution == Solution{{0, 1, 2}, {}});
}

TEST_CASE("two customers, one eligible: both branches") {
  for (double drone_cost : {1.0, 400.0}) {
    CostParams p = fixtures::no_service();
    p.drone_cost = drone_cost;
    p.drone_speed = 80.0;
    Problem pb(fixtures::make_instance({{0, 0}, {4, 0}, {1, 1}}, {2}, p));
    std::vector<Solution> all{{{0, 1, 2, 3}, {}}, {{0, 2, 1, 3}, {}}, {{0, 1, 3}, {{0, 2, 1}}},
                              {{0, 1, 3}, {{1, 2, 3}}}};
    double best = 1e300;
    for (const auto& s : all) best = std::min(best, evaluate(pb, s).total_cost);
    OracleResult r = exact_tspd(pb, Objective::MinCost);
    CHECK(r.value == doctest::Approx(best).epsilon(1e-12));
    CHECK(r.solution.deliveries.empty() == (drone_cost == 400.0));
  }
}

TEST_CASE("four-node optimum over all orders") {
  Problem pb(fixtures::four_node());
  OracleResult r = exact_tspd(pb, Objective::MinCost);
  CHECK(r.value == doctest::Approx(161.13826062067636).epsilon(1e-12));
  CHECK(validate(pb, r.solution).empty());
}

TEST_CASE("order freedom can only help") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Problem pb(fixtures::random_instance(5 + seed % 2, seed, 500.0));
    for (Objective obj : {Objective::MinCost, Objective::MinTime}) {
      OracleResult all = exact_tspd(pb, obj);
      CHECK(validate(pb, all.solution).empty());
      CHECK(all.value <= exact_split(pb, exact_tsp(pb), obj).value + 1e-9);
    }
  }
}

TEST_CASE("wall-clock guard") {
  Problem pb(fixtures::random_instance(7, 2));
  CHECK_THROWS_AS(exact_tspd(pb, Objective::MinCost, std::chrono::seconds(0)), OracleTimeout);
  CHECK_THROWS_AS(exact_tspd(Problem(fixtures::random_instance(8, 2)), Objective::MinCost), std::invalid_argument);
}
