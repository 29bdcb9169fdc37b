#pragma once

#include "tspd/construct.hpp"
#include "tspd/eval.hpp"
#include "tspd/model.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tspd {

// tsp is the reference tour driven by the truck alone; split_only is GRASP
// without local search.
enum class Algorithm { Tsp, Exact, Grasp, GraspPlus, SplitOnly, TspLs };

const char* to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);
bool uses_constructor(Algorithm a);
// Algorithms whose result does not change from run to run.
bool single_run(Algorithm a);

struct InstanceClass {
  std::string name;
  int n = 0;
  double area = 0.0;
};

const std::vector<InstanceClass>& instance_classes();
const InstanceClass& instance_class(const std::string& name);

// Instance i (1-based) of a class is named <class><i>.
std::uint64_t class_instance_seed(const std::string& name, int index, std::uint64_t seed);
std::vector<Instance> generate_class(const std::string& name, int count, std::uint64_t seed,
                                     double drone_eligible_fraction = 0.8, const CostParams& params = {});

// Id with its trailing digits removed.
std::string class_of(const std::string& instance_id);

// Drone cost becomes truck cost / ratio.
CostParams with_cost_ratio(CostParams p, double ratio);
double cost_ratio(const CostParams& p);

struct SolveSpec {
  Algorithm algorithm = Algorithm::Grasp;
  Objective objective = Objective::MinCost;
  Constructor constructor = Constructor::NearestNeighbour;
  int n_tsp = 2000;
  std::vector<int> k_choices{2, 3};
  std::uint64_t seed = 1;
  int workers = 1;
};

struct SolveOutcome {
  Solution solution;
  Evaluation evaluation;
  double seconds = 0.0;
  int iterations = 0;
};

SolveOutcome solve(const Problem& problem, const SolveSpec& spec);

// One row of runs.csv. Everything except the bookkeeping fields and seconds is
// re-derived from the solution file on load.
struct RunRecord {
  std::string instance;
  std::string cls;
  std::string instance_file;
  Algorithm algorithm = Algorithm::Grasp;
  std::optional<Constructor> constructor;
  Objective objective = Objective::MinCost;
  double cost_ratio = 0.0;
  double drone_speed = 0.0;
  int run = 0;
  std::uint64_t seed = 0;
  double value = 0.0;
  double seconds = 0.0;
  int iterations = 0;
  double truck_wait = 0.0;       // minutes, summed over sorties
  double drone_wait = 0.0;
  double completion_time = 0.0;  // minutes
  int drone_deliveries = 0;
  std::string solution_file;     // relative to the output directory

  std::string label() const;  // algorithm, plus -constructor when it has one
};

struct BenchConfig {
  std::vector<std::filesystem::path> instances;
  std::vector<Algorithm> algorithms{Algorithm::Grasp, Algorithm::TspLs};
  std::vector<Constructor> constructors{Constructor::NearestNeighbour};
  std::vector<Objective> objectives{Objective::MinCost};
  // Swept for min-cost runs; min-time runs keep the instance's costs.
  std::vector<double> cost_ratios{25.0};
  // Swept for min-time runs; min-cost runs keep the instance's speed.
  std::vector<double> drone_speeds{40.0};
  Algorithm reference = Algorithm::Tsp;
  int runs = 1;
  int n_tsp = 2000;
  std::vector<int> k_choices{2, 3};
  std::uint64_t seed = 1;  // run r uses seed + r
  int workers = 1;         // concurrent runs
  std::filesystem::path out_dir;
  void check() const;
};

struct InstanceRow {
  std::string instance;
  std::string cls;
  std::string algorithm;  // label
  Objective objective = Objective::MinCost;
  double cost_ratio = 0.0;
  double drone_speed = 0.0;
  int runs = 0;
  double reference = 0.0;
  double best = 0.0;
  double gamma_avg = 0.0;  // geometric mean over runs
  double sigma = 0.0;      // relative standard deviation, percent
  double rho_avg = 0.0;
  double rho_best = 0.0;
  int reference_hits = 0;  // runs matching the reference within 1e-9 relative
  double seconds_avg = 0.0;  // geometric mean
  double truck_wait_avg = 0.0;
  double drone_wait_avg = 0.0;
  double completion_avg = 0.0;
  double deliveries_avg = 0.0;
};

// Per class, plus class "all" over every instance.
struct GroupRow {
  std::string cls;
  std::string algorithm;
  Objective objective = Objective::MinCost;
  double cost_ratio = 0.0;
  double drone_speed = 0.0;
  int instances = 0;
  double rho_mean = 0.0;      // geometric mean of the instances' rho_avg
  double seconds_mean = 0.0;  // geometric mean
  double truck_wait_avg = 0.0;
  double drone_wait_avg = 0.0;
  double completion_avg = 0.0;
  double deliveries_avg = 0.0;
};

struct BenchTables {
  std::vector<InstanceRow> instances;
  std::vector<GroupRow> groups;
};

struct BenchResult {
  std::vector<RunRecord> runs;
  BenchTables tables;
};

// Writes solutions/, runs.csv, bench.json and the tables when out_dir is set.
BenchResult run_bench(const BenchConfig& config);

BenchTables aggregate(const std::vector<RunRecord>& runs, Algorithm reference);

// Reads runs.csv and re-derives each record from its instance and solution
// file; throws std::runtime_error when a stored value disagrees.
std::vector<RunRecord> load_runs(const std::filesystem::path& out_dir);
void write_runs(const std::vector<RunRecord>& runs, const std::filesystem::path& out_dir);

// instances.csv, classes.csv, cost_ratio.csv, drone_usage.csv and tables.json.
void write_tables(const BenchTables& tables, const std::filesystem::path& out_dir);

// load_runs + aggregate + write_tables. The reference defaults to the one in
// bench.json.
BenchTables report(const std::filesystem::path& out_dir, std::optional<Algorithm> reference = std::nullopt);

std::string solution_file_name(const RunRecord& r);

}  // namespace tspd
