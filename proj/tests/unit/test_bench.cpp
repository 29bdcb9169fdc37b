#include <doctest.h>

#include "support/fixtures.hpp"
#include "tspd/bench.hpp"
#include "tspd/metrics.hpp"
#include "tspd/oracle.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

using namespace tspd;
namespace fs = std::filesystem;

namespace {

RunRecord record(const std::string& inst, Algorithm a, double value, int run = 0, double seconds = 1.0) {
  RunRecord r;
  r.instance = inst;
  r.cls = class_of(inst);
  r.algorithm = a;
  if (uses_constructor(a)) r.constructor = Constructor::NearestNeighbour;
  r.cost_ratio = 25;
  r.drone_speed = 40;
  r.run = run;
  r.value = value;
  r.seconds = seconds;
  return r;
}

std::map<std::string, std::string> table_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const char* f : {"instances.csv", "classes.csv", "cost_ratio.csv", "drone_usage.csv", "tables.json"})
    out[f] = read_text(dir / f);
  return out;
}

std::vector<fs::path> tiny_instances(const fs::path& dir) {
  std::vector<fs::path> paths;
  for (int i = 1; i <= 3; ++i) {
    Instance inst = fixtures::random_instance(6, 70 + i, i == 2 ? 500.0 : 100.0);
    inst.id = "T" + std::to_string(i);
    paths.push_back(dir / (inst.id + ".json"));
    save_instance(inst, paths.back());
  }
  return paths;
}

}  // namespace

TEST_CASE("instance classes") {
  const auto b = generate_class("B", 10, 7);
  REQUIRE(b.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(b[i].id == "B" + std::to_string(i + 1));
    CHECK(b[i].n == 50);
    CHECK(b[i].area == 100.0);
    CHECK(std::count(b[i].drone_eligible.begin(), b[i].drone_eligible.end(), true) == 40);
  }
  CHECK(instance_to_text(generate_class("B", 10, 7)[3]) == instance_to_text(b[3]));
  CHECK(instance_to_text(generate_class("B", 10, 8)[3]) != instance_to_text(b[3]));
  CHECK(b[0].points != b[1].points);
  CHECK(instance_class("G").n == 100);
  CHECK(instance_class("G").area == 1000.0);
  CHECK(instance_classes().size() == 7);
  CHECK_THROWS_AS(instance_class("H"), std::invalid_argument);
  CHECK(class_of("B10") == "B");
  CHECK(class_of("grid7x") == "grid7x");
  CHECK(class_of("12") == "12");
}

TEST_CASE("cost ratio keeps the truck price") {
  const CostParams p = with_cost_ratio(CostParams{}, 10);
  CHECK(p.truck_cost == 25.0);
  CHECK(p.drone_cost == 2.5);
  CHECK(cost_ratio(p) == 10.0);
  CHECK(cost_ratio(CostParams{}) == 25.0);
  CHECK_THROWS_AS(with_cost_ratio(CostParams{}, 0.0), std::invalid_argument);
}

TEST_CASE("algorithm names round-trip") {
  for (Algorithm a : {Algorithm::Tsp, Algorithm::Exact, Algorithm::Grasp, Algorithm::GraspPlus, Algorithm::SplitOnly,
                      Algorithm::TspLs})
    CHECK(algorithm_from_string(to_string(a)) == a);
  CHECK(algorithm_from_string("split-only") == Algorithm::SplitOnly);
  CHECK_THROWS_AS(algorithm_from_string("ga"), std::invalid_argument);
}

TEST_CASE("aggregation arithmetic") {
  std::vector<RunRecord> runs{record("X1", Algorithm::Tsp, 200), record("X1", Algorithm::Grasp, 200, 0, 4.0),
                              record("X1", Algorithm::Grasp, 50, 1, 1.0), record("X2", Algorithm::Tsp, 100),
                              record("X2", Algorithm::Grasp, 81)};
  runs[1].truck_wait = 3;
  runs[2].truck_wait = 5;
  runs[2].drone_deliveries = 4;
  const BenchTables t = aggregate(runs, Algorithm::Tsp);
  REQUIRE(t.instances.size() == 4);
  const InstanceRow& g = t.instances[1];
  CHECK(g.algorithm == "grasp-knn");
  CHECK(g.runs == 2);
  CHECK(g.reference == 200);
  CHECK(g.best == 50);
  CHECK(g.gamma_avg == doctest::Approx(100).epsilon(1e-14));
  CHECK(g.rho_avg == doctest::Approx(50).epsilon(1e-14));
  CHECK(g.rho_best == 25);
  CHECK(g.reference_hits == 1);
  CHECK(g.sigma == doctest::Approx(100.0 * std::sqrt(150.0 * 150.0 / 2.0) / 125.0).epsilon(1e-14));
  CHECK(g.seconds_avg == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(g.truck_wait_avg == 4.0);
  CHECK(g.deliveries_avg == 2.0);
  CHECK(t.instances[0].rho_avg == 100.0);
  CHECK(t.instances[3].rho_avg == doctest::Approx(81.0).epsilon(1e-14));

  // Classes X then "all", each with tsp and grasp.
  REQUIRE(t.groups.size() == 4);
  CHECK(t.groups[1].cls == "X");
  CHECK(t.groups[1].algorithm == "grasp-knn");
  CHECK(t.groups[1].instances == 2);
  CHECK(t.groups[1].rho_mean == doctest::Approx(std::sqrt(50.0 * 81.0)).epsilon(1e-14));
  CHECK(t.groups[3].cls == "all");
  CHECK(t.groups[3].rho_mean == t.groups[1].rho_mean);

  runs.erase(runs.begin() + 3);
  CHECK_THROWS_AS(aggregate(runs, Algorithm::Tsp), std::runtime_error);
}

TEST_CASE("solve dispatches to every algorithm") {
  const Problem pb(fixtures::random_instance(6, 5));
  for (Algorithm a : {Algorithm::Tsp, Algorithm::Exact, Algorithm::Grasp, Algorithm::GraspPlus, Algorithm::SplitOnly,
                      Algorithm::TspLs})
    for (Objective obj : {Objective::MinCost, Objective::MinTime}) {
      SolveSpec spec;
      spec.algorithm = a;
      spec.objective = obj;
      spec.n_tsp = 20;
      const SolveOutcome o = solve(pb, spec);
      REQUIRE(is_valid(pb, o.solution));
      const double opt = exact_tspd(pb, obj).value;
      CHECK(o.evaluation.value(obj) >= opt - 1e-9);
      if (a == Algorithm::Exact) CHECK(o.evaluation.value(obj) == doctest::Approx(opt).epsilon(1e-12));
      if (a == Algorithm::Tsp) CHECK(o.solution == Solution{reference_tour(pb), {}});
    }
  SolveSpec big;
  big.algorithm = Algorithm::Exact;
  CHECK_THROWS_AS(solve(Problem(fixtures::random_instance(8, 1)), big), std::invalid_argument);
}

TEST_CASE("benchmark files: sweeps, reference, re-aggregation, workers") {
  const fs::path dir = fixtures::scratch_dir("bench");
  BenchConfig cfg;
  cfg.instances = tiny_instances(dir);
  cfg.algorithms = {Algorithm::Grasp, Algorithm::TspLs, Algorithm::SplitOnly, Algorithm::GraspPlus};
  cfg.objectives = {Objective::MinCost, Objective::MinTime};
  cfg.cost_ratios = {10, 50};
  cfg.drone_speeds = {25, 55};
  cfg.reference = Algorithm::Exact;
  cfg.runs = 2;
  cfg.n_tsp = 30;
  cfg.out_dir = dir / "one";
  const BenchResult res = run_bench(cfg);
  // Four settings per instance; exact once, the others twice.
  CHECK(res.runs.size() == 3 * 4 * (1 + 4 * 2));

  for (const RunRecord& r : res.runs) {
    Instance inst = load_instance(r.instance_file);
    if (r.objective == Objective::MinCost) {
      CHECK((r.cost_ratio == 10 || r.cost_ratio == 50));
      CHECK(r.drone_speed == 40);
    } else {
      CHECK(r.cost_ratio == 25);
      CHECK((r.drone_speed == 25 || r.drone_speed == 55));
    }
    inst.params = with_cost_ratio(inst.params, r.cost_ratio);
    inst.params.drone_speed = r.drone_speed;
    const Problem pb(inst);
    const SolutionFile sf = load_solution(cfg.out_dir / r.solution_file);
    CHECK(evaluate(pb, sf.solution).value(r.objective) == r.value);
    if (r.algorithm == Algorithm::Exact) CHECK(r.value == doctest::Approx(exact_tspd(pb, r.objective).value).epsilon(1e-12));
    CHECK(r.seed == cfg.seed + static_cast<std::uint64_t>(r.run));
  }
  for (const InstanceRow& row : res.tables.instances) {
    CHECK(row.rho_best >= 100.0 - 1e-9);
    if (row.algorithm == "exact") {
      CHECK(row.rho_avg == 100.0);
      CHECK(row.reference_hits == 1);
    }
  }
  bool ratio_rows = false;
  for (const GroupRow& g : res.tables.groups) ratio_rows |= g.cls == "all" && g.cost_ratio == 10;
  CHECK(ratio_rows);

  const auto first = table_files(cfg.out_dir);
  const std::string runs_csv = read_text(cfg.out_dir / "runs.csv");
  const BenchTables again = report(cfg.out_dir);
  CHECK(table_files(cfg.out_dir) == first);
  CHECK(again.instances.size() == res.tables.instances.size());
  const auto loaded = load_runs(cfg.out_dir);
  REQUIRE(loaded.size() == res.runs.size());
  for (std::size_t q = 0; q < loaded.size(); ++q) {
    CHECK(loaded[q].value == res.runs[q].value);
    CHECK(loaded[q].truck_wait == res.runs[q].truck_wait);
    CHECK(loaded[q].drone_deliveries == res.runs[q].drone_deliveries);
    CHECK(loaded[q].seconds == res.runs[q].seconds);
  }

  // Same work with three concurrent runs.
  cfg.workers = 3;
  cfg.out_dir = dir / "three";
  const BenchResult par = run_bench(cfg);
  REQUIRE(par.runs.size() == res.runs.size());
  for (std::size_t q = 0; q < par.runs.size(); ++q) {
    CHECK(par.runs[q].solution_file == res.runs[q].solution_file);
    CHECK(read_text(cfg.out_dir / par.runs[q].solution_file) == read_text(dir / "one" / res.runs[q].solution_file));
  }

  // A stored value that no longer matches its solution file is caught.
  std::string tampered = runs_csv;
  const auto line = tampered.find('\n') + 1;
  const auto field = [&](int k) {
    std::size_t p = line;
    for (int c = 0; c < k; ++c) p = tampered.find(',', p) + 1;
    return p;
  };
  tampered.replace(field(10), field(11) - 1 - field(10), "1");
  write_text(dir / "one" / "runs.csv", tampered);
  CHECK_THROWS_AS(load_runs(dir / "one"), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("benchmark configuration checks") {
  BenchConfig cfg;
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
  cfg.instances = {"x.json"};
  CHECK_NOTHROW(cfg.check());
  cfg.runs = 0;
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
  cfg.runs = 1;
  cfg.cost_ratios = {-1};
  CHECK_THROWS_AS(cfg.check(), std::invalid_argument);

  const fs::path dir = fixtures::scratch_dir("bench_exact");
  Instance inst = fixtures::random_instance(9, 3);
  inst.id = "N9";
  save_instance(inst, dir / "N9.json");
  BenchConfig big;
  big.instances = {dir / "N9.json"};
  big.reference = Algorithm::Exact;
  CHECK_THROWS_AS(run_bench(big), std::invalid_argument);
  fs::remove_all(dir);
}
