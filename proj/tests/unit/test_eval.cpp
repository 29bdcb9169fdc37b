#include <doctest.h>

#include "support/fixtures.hpp"
#include "tspd/construct.hpp"
#include "tspd/eval.hpp"

#include <cmath>

using namespace tspd;

namespace {

bool has_clause(const std::vector<Violation>& v, Clause c) {
  for (const auto& x : v)
    if (x.clause == c) return true;
  return false;
}

}  // namespace

TEST_CASE("sortie on the four-node instance") {
  Problem pb(fixtures::four_node());
  Solution s{{0, 1, 3, 4}, {{1, 2, 3}}};
  Evaluation ev = evaluate_min_cost(pb, s);
  const double drone_km = std::sqrt(4.25) + std::sqrt(6.25);
  CHECK(ev.truck_transport_cost == doctest::Approx(150.0).epsilon(1e-12));
  CHECK(ev.drone_transport_cost == doctest::Approx(drone_km).epsilon(1e-12));
  CHECK(ev.truck_waiting_cost == doctest::Approx(10.0 * (drone_km * 1.5 - 3.0)).epsilon(1e-12));
  CHECK(ev.drone_waiting_cost == 0.0);
  CHECK(ev.total_cost == doctest::Approx(192.98484500494).epsilon(1e-12));
  CHECK(ev.total_cost ==
        doctest::Approx(ev.truck_transport_cost + ev.drone_transport_cost + ev.truck_waiting_cost +
                        ev.drone_waiting_cost)
            .epsilon(1e-15));
  REQUIRE(ev.timeline.sorties.size() == 1);
  CHECK(ev.timeline.sorties[0].truck_wait == doctest::Approx(3.84232921921).epsilon(1e-10));
}

TEST_CASE("pure truck tour costs truck distance only") {
  Problem pb(fixtures::four_node());
  Solution s{{0, 1, 2, 3, 4}, {}};
  Evaluation ev = evaluate(pb, s);
  CHECK(ev.total_cost == 250.0);
  CHECK(ev.completion_time == doctest::Approx(15.0).epsilon(1e-15));
  CHECK(ev.total_cost == 25.0 * tour_length(pb, s.truck_tour));
}

TEST_CASE("completion time with service times") {
  CostParams p = fixtures::no_service();
  p.launch_time = 1.0;
  p.retrieve_time = 1.0;
  Problem pb(fixtures::four_node(p));
  Evaluation ev = evaluate_min_time(pb, {{0, 1, 3, 4}, {{1, 2, 3}}});
  const double drone = (std::sqrt(4.25) + std::sqrt(6.25)) * 1.5;
  CHECK(ev.completion_time == doctest::Approx(1.5 + std::max(3.0, drone) + 2.0 + 4.5).epsilon(1e-12));
  CHECK(ev.completion_time == doctest::Approx(14.8423292192).epsilon(1e-10));
  // Service delays both vehicles alike, so waiting and cost are unchanged.
  CHECK(ev.total_cost == doctest::Approx(192.98484500494).epsilon(1e-12));
  const auto& tl = ev.timeline;
  for (std::size_t p2 = 0; p2 < tl.arrival.size(); ++p2) CHECK(tl.departure[p2] >= tl.arrival[p2]);
  CHECK(tl.sorties[0].launch == doctest::Approx(2.5));
}

TEST_CASE("validate accepts a plain tour") {
  Problem pb(fixtures::random_instance(8, 1));
  Rng rng(5);
  CHECK(validate(pb, {k_nearest_neighbour(pb, 3, rng), {}}).empty());
}

TEST_CASE("validate reports each clause") {
  Problem pb(fixtures::make_instance({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}}, {1, 2, 3, 4, 5, 6},
                                     fixtures::no_service()));
  // n = 6, end depot 7
  SUBCASE("customer on the truck tour and in a sortie") {
    auto v = validate(pb, {{0, 1, 2, 3, 4, 5, 6, 7}, {{1, 2, 3}}});
    CHECK(has_clause(v, Clause::Compatible));
  }
  SUBCASE("nested launch") {
    auto v = validate(pb, {{0, 1, 2, 4, 7}, {{1, 3, 4}, {2, 5, 4}, {0, 6, 1}}});
    CHECK(has_clause(v, Clause::Interference));
    auto w = validate(pb, {{0, 1, 2, 4, 5, 7}, {{1, 3, 5}, {2, 6, 4}}});
    CHECK(has_clause(w, Clause::Interference));
  }
  SUBCASE("back-to-back sorties are fine") {
    CHECK(validate(pb, {{0, 1, 3, 5, 7}, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}}}).empty());
  }
  SUBCASE("missing customer") {
    auto v = validate(pb, {{0, 1, 2, 3, 4, 5, 7}, {}});
    CHECK(has_clause(v, Clause::Coverage));
  }
  SUBCASE("drone serves twice") {
    auto v = validate(pb, {{0, 1, 3, 4, 5, 6, 7}, {{1, 2, 3}, {4, 2, 5}}});
    CHECK(has_clause(v, Clause::DroneTwice));
  }
  SUBCASE("rendezvous before launch") {
    auto v = validate(pb, {{0, 1, 3, 4, 5, 6, 7}, {{3, 2, 1}}});
    CHECK(has_clause(v, Clause::Compatible));
  }
  SUBCASE("launch off the tour") {
    auto v = validate(pb, {{0, 1, 4, 5, 6, 7}, {{3, 2, 4}}});
    CHECK(has_clause(v, Clause::Compatible));
  }
  SUBCASE("depot to depot") {
    auto v = validate(pb, {{0, 1, 3, 4, 5, 6, 7}, {{0, 2, 7}}});
    CHECK(has_clause(v, Clause::Compatible));
  }
  SUBCASE("tour endpoints and repeats") {
    CHECK(has_clause(validate(pb, {{1, 0, 2, 3, 4, 5, 6, 7}, {}}), Clause::Structure));
    CHECK(has_clause(validate(pb, {{0, 1, 2, 3, 4, 5, 6}, {}}), Clause::Structure));
    CHECK(has_clause(validate(pb, {{0, 1, 2, 2, 3, 4, 5, 6, 7}, {}}), Clause::Structure));
    CHECK(has_clause(validate(pb, {{0, 1, 9, 7}, {}}), Clause::Structure));
  }
}

TEST_CASE("validate checks eligibility and endurance") {
  CostParams p = fixtures::no_service();
  p.endurance = 3.0;  // 2 km of flight
  Problem pb(fixtures::make_instance({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {2}, p));
  CHECK(validate(pb, {{0, 1, 3, 4}, {{1, 2, 3}}}).empty());
  CHECK(has_clause(validate(pb, {{0, 2, 3, 4}, {{0, 1, 2}}}), Clause::Eligibility));
  CHECK(has_clause(validate(pb, {{0, 1, 3, 4}, {{0, 2, 3}}}), Clause::Endurance));
}

TEST_CASE("evaluation refuses invalid solutions") {
  Problem pb(fixtures::four_node());
  try {
    evaluate(pb, {{0, 1, 2, 3, 4}, {{1, 2, 3}}});
    FAIL("expected InvalidSolution");
  } catch (const InvalidSolution& e) {
    CHECK(has_clause(e.violations(), Clause::Compatible));
  }
}

TEST_CASE("waiting is complementary at every rendezvous") {
  Problem pb(fixtures::random_instance(8, 11));
  Solution s{{0, 1, 3, 5, 6, 8, 9}, {}};
  // Build sorties only from feasible triples along the tour.
  std::vector<NodeId> drone{2, 4, 7};
  std::vector<std::pair<NodeId, NodeId>> ends{{1, 3}, {3, 5}, {6, 8}};
  for (std::size_t q = 0; q < drone.size(); ++q)
    if (pb.feasible_delivery(ends[q].first, drone[q], ends[q].second))
      s.deliveries.push_back({ends[q].first, drone[q], ends[q].second});
    else
      s.truck_tour.insert(s.truck_tour.end() - 1, drone[q]);
  Evaluation ev = evaluate(pb, s);
  for (const auto& st : ev.timeline.sorties) CHECK(st.truck_wait * st.drone_wait == 0.0);
}

TEST_CASE("reinserting drone customers on the truck keeps coverage") {
  Problem pb(fixtures::four_node());
  Solution s{{0, 1, 3, 4}, {{1, 2, 4}}};
  CHECK_FALSE(has_clause(validate(pb, s), Clause::Coverage));
  Solution truck{{0, 1, 2, 3, 4}, {}};
  CHECK_FALSE(has_clause(validate(pb, truck), Clause::Coverage));
}
