#include <doctest.h>

#include "support/fixtures.hpp"
#include "tspd/construct.hpp"
#include "tspd/localsearch.hpp"
#include "tspd/oracle.hpp"
#include "tspd/split.hpp"

#include <cmath>
#include <set>
#include <tuple>

using namespace tspd;

namespace {

using Key = std::tuple<int, NodeId, NodeId, NodeId>;

Key key(const Move& m) { return {static_cast<int>(m.kind), m.a, m.b, m.c}; }

// A valid solution with a mix of sorties and truck nodes, sometimes perturbed
// off the split optimum by a few random applicable moves.
Solution sample_solution(const Problem& pb, Objective obj, Rng& rng) {
  Tour tour = k_nearest_neighbour(pb, pb.n(), rng);
  Solution s = split(pb, tour, obj);
  const int shakes = static_cast<int>(rng.below(4));
  for (int i = 0; i < shakes; ++i) {
    auto moves = neighbourhood(pb, s, obj);
    if (moves.empty()) break;
    s = *apply_move(pb, s, moves[rng.below(moves.size())]);
  }
  return s;
}

}  // namespace

TEST_CASE("operators on the four-node instance") {
  Problem pb(fixtures::four_node());
  Solution bare{{0, 1, 2, 3, 4}, {}};
  auto flown = relocate_drone(pb, bare, 2, 1, 3);
  REQUIRE(flown);
  CHECK(*flown == Solution{{0, 1, 3, 4}, {{1, 2, 3}}});
  CHECK(evaluate(pb, *flown).total_cost == doctest::Approx(192.98484500494).epsilon(1e-11));
  auto back = remove_drone(pb, *flown, 2, 3);
  REQUIRE(back);
  CHECK(*back == bare);
  CHECK(evaluate(pb, *back).total_cost == 250.0);

  CHECK_FALSE(relocate_drone(pb, *flown, 2, 0, 4));  // depot to depot
  CHECK_FALSE(relocate_drone(pb, *flown, 1, 0, 3));  // launch node
  CHECK_FALSE(relocate_truck(pb, *flown, 3, 1));     // rendezvous node
  CHECK_FALSE(relocate_truck(pb, bare, 2, 0));
  CHECK_FALSE(remove_drone(pb, bare, 2, 3));  // no sortie serves 2
  CHECK_FALSE(two_exchange(pb, bare, 2, 2));

  auto swapped = two_exchange(pb, *flown, 2, 3);
  REQUIRE(swapped);
  CHECK(*swapped == Solution{{0, 1, 2, 4}, {{1, 3, 2}}});
  auto moved = relocate_truck(pb, bare, 1, 4);
  REQUIRE(moved);
  CHECK(*moved == Solution{{0, 2, 3, 1, 4}, {}});
}

TEST_CASE("an ineligible customer cannot be flown") {
  Problem pb(fixtures::four_node(fixtures::no_service(), {1, 3}));
  CHECK_FALSE(relocate_drone(pb, {{0, 1, 2, 3, 4}, {}}, 2, 1, 3));
  for (const Move& m : neighbourhood(pb, {{0, 1, 2, 3, 4}, {}}, Objective::MinCost))
    if (m.kind == MoveKind::RelocateDrone) CHECK(m.a != 2);
}

TEST_CASE("incremental deltas equal full re-evaluation") {
  long checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 8;
    Problem pb(fixtures::random_instance(n, 700 + trial, trial % 3 == 0 ? 500.0 : 100.0));
    Rng rng(trial);
    for (Objective obj : {Objective::MinCost, Objective::MinTime}) {
      Solution s = sample_solution(pb, obj, rng);
      const double f = evaluate(pb, s).value(obj);
      for (const Move& m : neighbourhood(pb, s, obj)) {
        auto next = apply_move(pb, s, m);
        REQUIRE_MESSAGE(next, to_string(m.kind), " ", m.a, " ", m.b, " ", m.c);
        const double g = evaluate(pb, *next).value(obj);
        CHECK(std::abs(f + m.delta - g) <= 1e-9 * std::max(1.0, std::abs(f)));
        ++checked;
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("the scanned neighbourhood is exactly the set of applicable moves") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 5;
    Problem pb(fixtures::random_instance(n, 900 + trial, trial % 2 ? 500.0 : 100.0));
    Rng rng(trial);
    const Objective obj = trial % 2 ? Objective::MinTime : Objective::MinCost;
    Solution s = sample_solution(pb, obj, rng);

    std::set<Key> scanned;
    for (const Move& m : neighbourhood(pb, s, obj)) CHECK(scanned.insert(key(m)).second);

    std::set<Key> brute;
    const int last = n + 1;
    for (NodeId a = 0; a <= last; ++a)
      for (NodeId b = 0; b <= last; ++b) {
        if (auto r = relocate_truck(pb, s, a, b); r && !(*r == s)) brute.insert({0, a, b, -1});
        if (remove_drone(pb, s, a, b)) brute.insert({2, a, b, -1});
        if (a < b && two_exchange(pb, s, a, b)) brute.insert({3, a, b, -1});
        for (NodeId c = 0; c <= last; ++c)
          if (relocate_drone(pb, s, a, b, c)) brute.insert({1, a, b, c});
      }
    CHECK(scanned == brute);
  }
}

TEST_CASE("improve reaches a valid local optimum without worsening") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 20;
    Problem pb(fixtures::random_instance(n, 300 + trial, trial % 2 ? 500.0 : 100.0));
    Rng rng(trial);
    for (Objective obj : {Objective::MinCost, Objective::MinTime}) {
      Solution start = split(pb, k_nearest_neighbour(pb, 2, rng), obj);
      ImproveStats stats;
      Solution best = improve(pb, start, obj, &stats);
      REQUIRE(validate(pb, best).empty());
      const double f0 = evaluate(pb, start).value(obj), f1 = evaluate(pb, best).value(obj);
      CHECK(f1 <= f0 + 1e-9);
      CHECK(stats.scans == stats.moves + 1);
      if (stats.moves > 0) CHECK(f1 < f0);
      for (const Move& m : neighbourhood(pb, best, obj)) CHECK(m.delta >= -1e-9 * std::max(1.0, f1));
    }
  }
}

TEST_CASE("improved heuristic never beats the exact optimum") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 4;
    Problem pb(fixtures::random_instance(n, 40 + trial, trial % 2 ? 500.0 : 100.0));
    for (Objective obj : {Objective::MinCost, Objective::MinTime}) {
      const double opt = exact_tspd(pb, obj).value;
      const double heur = evaluate(pb, improve(pb, split(pb, exact_tsp(pb), obj), obj)).value(obj);
      CHECK(heur >= opt - 1e-9 * std::max(1.0, opt));
    }
  }
}

TEST_CASE("invalid input is refused") {
  Problem pb(fixtures::four_node());
  CHECK_THROWS_AS(improve(pb, {{0, 1, 3, 4}, {}}, Objective::MinCost), InvalidSolution);
}
