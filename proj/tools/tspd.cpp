#include "tspd/bench.hpp"
#include "tspd/instance_io.hpp"
#include "tspd/metrics.hpp"
#include "tspd/milp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace tspd;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path default_output_dir() {
  const char* env = std::getenv("TSPD_OUTPUT_DIR");
  return env && *env ? fs::path(env) : fs::path("tspd_out");
}

std::string f3(double v) { return fixed(v, 3); }

template <class T, class F>
std::vector<T> parse_list(const std::vector<std::string>& items, F convert) {
  std::vector<T> out;
  for (const std::string& s : items) out.push_back(convert(s));
  return out;
}

// B2 before B10.
bool natural_less(const fs::path& a, const fs::path& b) {
  const std::string x = a.stem().string(), y = b.stem().string();
  const std::string cx = class_of(x), cy = class_of(y);
  if (cx != cy || cx == x || cy == y) return x < y;
  return std::stoll(x.substr(cx.size())) < std::stoll(y.substr(cy.size()));
}

std::vector<fs::path> expand_instances(const std::vector<std::string>& args) {
  std::vector<fs::path> out;
  for (const std::string& a : args) {
    if (!fs::is_directory(a)) {
      out.emplace_back(a);
      continue;
    }
    std::vector<fs::path> found;
    for (const auto& e : fs::directory_iterator(a))
      if (e.is_regular_file() && e.path().extension() == ".json" && e.path().filename() != "manifest.json")
        found.push_back(e.path());
    std::sort(found.begin(), found.end(), natural_less);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

Instance apply_overrides(Instance inst, const std::optional<double>& ratio, const std::optional<double>& speed) {
  if (ratio) inst.params = with_cost_ratio(inst.params, *ratio);
  if (speed) inst.params.drone_speed = *speed;
  inst.check();
  return inst;
}

int cmd_generate(const std::vector<std::string>& classes, int count, std::uint64_t seed, double fraction,
                 const fs::path& out) {
  if (count < 1) throw UsageError("--count must be at least 1");
  fs::create_directories(out);
  std::ostringstream csv;
  csv << "id,class,n,area,density,seed,drone_eligible,feasible_deliveries,file\n";
  nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
  for (const std::string& c : classes) {
    const auto instances = generate_class(c, count, seed, fraction);
    for (int i = 0; i < count; ++i) {
      const Instance& inst = instances[i];
      const fs::path file = out / (inst.id + ".json");
      save_instance(inst, file);
      const auto eligible = std::count(inst.drone_eligible.begin(), inst.drone_eligible.end(), true);
      const auto feasible = enumerate_feasible_deliveries(inst).size();
      const double density = inst.n / inst.area;
      const std::uint64_t s = class_instance_seed(c, i + 1, seed);
      csv << inst.id << ',' << c << ',' << inst.n << ',' << inst.area << ',' << density << ',' << s << ',' << eligible
          << ',' << feasible << ',' << file.filename().string() << '\n';
      manifest.push_back({{"id", inst.id},
                          {"class", c},
                          {"n", inst.n},
                          {"area", inst.area},
                          {"density", density},
                          {"seed", s},
                          {"drone_eligible", eligible},
                          {"feasible_deliveries", feasible},
                          {"file", file.filename().string()}});
    }
    std::cout << "class " << c << ": " << count << " instances, n = " << instance_class(c).n
              << ", area = " << instance_class(c).area << '\n';
  }
  write_text(out / "manifest.csv", csv.str());
  write_text(out / "manifest.json", manifest.dump(1) + "\n");
  std::cout << "wrote " << out.string() << "/manifest.csv\n";
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string algo = "grasp";
  std::string objective = "cost";
  std::uint64_t seed = 1;
  int runs = 1;
  int n_tsp = 2000;
  std::vector<int> k{2, 3};
  std::string constructor = "knn";
  int workers = 1;
  std::optional<double> ratio, speed;
  std::string out;
};

int cmd_solve(const SolveArgs& a, const CLI::App& sub) {
  const Algorithm algo = algorithm_from_string(a.algo);
  const bool grasp_like = algo == Algorithm::Grasp || algo == Algorithm::SplitOnly || algo == Algorithm::GraspPlus;
  if (sub.count("--constructor") && !uses_constructor(algo))
    throw UsageError("--constructor applies to grasp and split_only only");
  if ((sub.count("--n-tsp") || sub.count("--k")) && !(algo == Algorithm::Grasp || algo == Algorithm::SplitOnly))
    throw UsageError("--n-tsp and --k apply to grasp and split_only only");
  if (sub.count("--workers") && !grasp_like) throw UsageError("--workers applies to the GRASP variants only");
  if (a.runs > 1 && single_run(algo)) throw UsageError(std::string(to_string(algo)) + " is deterministic; use --runs 1");
  if (a.runs < 1) throw UsageError("--runs must be at least 1");

  const Instance inst = apply_overrides(load_instance(a.instance), a.ratio, a.speed);
  const Problem pb(inst);
  const fs::path out_dir = default_output_dir();
  std::vector<double> values, seconds, tw, dw, ct;
  for (int run = 0; run < a.runs; ++run) {
    SolveSpec spec;
    spec.algorithm = algo;
    spec.objective = objective_from_string(a.objective);
    spec.constructor = constructor_from_string(a.constructor);
    spec.n_tsp = a.n_tsp;
    spec.k_choices = a.k;
    spec.seed = a.seed + static_cast<std::uint64_t>(run);
    spec.workers = a.workers;
    const SolveOutcome o = solve(pb, spec);

    RunRecord r;
    r.instance = inst.id;
    r.algorithm = algo;
    if (uses_constructor(algo)) r.constructor = spec.constructor;
    r.objective = spec.objective;
    r.cost_ratio = cost_ratio(inst.params);
    r.drone_speed = inst.params.drone_speed;
    r.run = run;
    fs::path file;
    if (a.out.empty()) {
      file = out_dir / solution_file_name(r);
    } else {
      file = a.out;
      if (a.runs > 1) file.replace_filename(file.stem().string() + "_run" + std::to_string(run) + file.extension().string());
    }
    save_solution(file, inst.id, spec.objective, o.solution, &o.evaluation);

    const Evaluation& e = o.evaluation;
    values.push_back(e.value(spec.objective));
    seconds.push_back(std::max(o.seconds, 1e-9));
    tw.push_back(e.total_truck_wait());
    dw.push_back(e.total_drone_wait());
    ct.push_back(e.completion_time);
    std::cout << inst.id << ' ' << r.label() << ' ' << to_string(spec.objective) << " run " << run << " seed "
              << spec.seed << ": gamma " << f3(values.back()) << "  T " << fixed(o.seconds, 4) << " s  w " << f3(tw.back())
              << "  w' " << f3(dw.back()) << "  t " << f3(ct.back()) << "  drone " << o.solution.deliveries.size()
              << "  -> " << file.string() << '\n';
  }
  if (a.runs > 1)
    std::cout << "summary over " << a.runs << " runs: best " << f3(*std::min_element(values.begin(), values.end()))
              << "  gamma_avg " << f3(geometric_mean(values)) << "  sigma " << f3(relative_std(values)) << "%  T_avg "
              << fixed(geometric_mean(seconds), 4) << " s  w_avg " << f3(arithmetic_mean(tw)) << "  w'_avg "
              << f3(arithmetic_mean(dw)) << "  t_avg " << f3(arithmetic_mean(ct)) << '\n';
  return 0;
}

void print_groups(const BenchTables& t) {
  std::printf("%-6s %-16s %-9s %6s %6s %5s %9s %10s %9s %9s %10s %7s\n", "class", "algorithm", "objective", "ratio",
              "speed", "inst", "rho_mean", "T_mean[s]", "w_avg", "w'_avg", "t_avg", "drone");
  for (const GroupRow& g : t.groups)
    std::printf("%-6s %-16s %-9s %6g %6g %5d %9s %10s %9s %9s %10s %7s\n", g.cls.c_str(), g.algorithm.c_str(),
                to_string(g.objective), g.cost_ratio, g.drone_speed, g.instances, fixed(g.rho_mean).c_str(),
                fixed(g.seconds_mean, 4).c_str(), f3(g.truck_wait_avg).c_str(), f3(g.drone_wait_avg).c_str(),
                f3(g.completion_avg).c_str(), fixed(g.deliveries_avg).c_str());
}

int cmd_export_lp(const std::string& instance, const std::string& out, bool flight_endurance, int cap) {
  MilpOptions opt;
  opt.literal_endurance = !flight_endurance;
  opt.max_lp_customers = cap;
  const Problem pb(load_instance(instance));
  try {
    write_lp(pb, out, opt);
  } catch (const MilpTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cout << "wrote " << out << " (" << milp_variable_count(pb) << " variables)\n";
  return 0;
}

int cmd_validate(const std::string& instance, const std::string& solution, const std::optional<double>& ratio,
                 const std::optional<double>& speed) {
  const Problem pb(apply_overrides(load_instance(instance), ratio, speed));
  const SolutionFile sf = load_solution(solution);
  if (sf.instance_id != pb.instance().id)
    std::cerr << "warning: solution names instance " << sf.instance_id << ", not " << pb.instance().id << '\n';
  const auto violations = validate(pb, sf.solution);
  if (!violations.empty()) {
    for (const Violation& v : violations) std::cout << "violation (" << to_string(v.clause) << "): " << v.message << '\n';
    return 1;
  }
  const Evaluation e = evaluate(pb, sf.solution);
  std::cout << "valid; cost " << f3(e.total_cost) << " (truck " << f3(e.truck_transport_cost) << ", drone "
            << f3(e.drone_transport_cost) << ", truck waiting " << f3(e.truck_waiting_cost) << ", drone waiting "
            << f3(e.drone_waiting_cost) << "), completion " << f3(e.completion_time) << " min, "
            << sf.solution.deliveries.size() << " drone deliveries\n";
  if (sf.costs && std::abs(sf.costs->value(sf.objective) - e.value(sf.objective)) >
                      1e-9 * std::max(1.0, std::abs(e.value(sf.objective))))
    std::cout << "note: stored costs differ from the re-evaluation\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truck and drone delivery solvers and benchmark harness"};
  app.require_subcommand(1);
  app.footer("Default output directory: $TSPD_OUTPUT_DIR, else ./tspd_out");

  auto* gen = app.add_subcommand("generate", "Write benchmark instance classes A-G");
  std::vector<std::string> classes{"A", "B", "C", "D", "E", "F", "G"};
  int count = 10;
  std::uint64_t gen_seed = 1;
  double fraction = 0.8;
  std::string gen_out;
  gen->add_option("--classes", classes, "Classes to generate")->delimiter(',')->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  gen->add_option("--count", count, "Instances per class")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Base seed")->capture_default_str();
  gen->add_option("--fraction", fraction, "Share of drone-eligible customers")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--out", gen_out, "Directory (default <output dir>/instances)");

  auto* sol = app.add_subcommand("solve", "Solve one instance");
  SolveArgs sa;
  sol->add_option("--instance", sa.instance, "Instance file")->required()->check(CLI::ExistingFile);
  sol->add_option("--algo", sa.algo, "grasp, grasp_plus, tspls, exact, split_only or tsp")
      ->check(CLI::IsMember({"grasp", "grasp_plus", "tspls", "exact", "split_only", "split-only", "tsp"}))
      ->capture_default_str();
  sol->add_option("--objective", sa.objective, "cost or time")->check(CLI::IsMember({"cost", "time", "min_cost", "min_time"}))->capture_default_str();
  sol->add_option("--seed", sa.seed, "Seed of run 0; run r uses seed + r")->capture_default_str();
  sol->add_option("--runs", sa.runs, "Independent runs")->capture_default_str();
  sol->add_option("--n-tsp", sa.n_tsp, "GRASP iterations")->check(CLI::PositiveNumber)->capture_default_str();
  sol->add_option("--k", sa.k, "Candidate list sizes drawn per iteration")->delimiter(',')->check(CLI::PositiveNumber);
  sol->add_option("--constructor", sa.constructor, "knn, kci or ri")->check(CLI::IsMember({"knn", "kci", "ri"}))->capture_default_str();
  sol->add_option("--workers", sa.workers, "Threads for GRASP iterations")->check(CLI::PositiveNumber)->capture_default_str();
  sol->add_option("--cost-ratio", sa.ratio, "Truck to drone cost per km")->check(CLI::PositiveNumber);
  sol->add_option("--drone-speed", sa.speed, "Drone speed in km/h")->check(CLI::PositiveNumber);
  sol->add_option("--out", sa.out, "Solution file (default under the output directory)");

  auto* bench = app.add_subcommand("bench", "Run the benchmark protocol and write tables");
  std::vector<std::string> b_instances, b_algos{"grasp", "tspls"}, b_cons{"knn"}, b_objs{"cost"};
  std::vector<double> b_ratios{25.0}, b_speeds{40.0};
  std::string b_ref = "tsp", b_out;
  BenchConfig bc;
  bench->add_option("--instances", b_instances, "Instance files or directories")->required();
  bench->add_option("--algos", b_algos, "Algorithms")->delimiter(',')->capture_default_str();
  bench->add_option("--constructors", b_cons, "Constructors for grasp and split_only")->delimiter(',')->check(CLI::IsMember({"knn", "kci", "ri"}))->capture_default_str();
  bench->add_option("--objectives", b_objs, "cost, time or both")->delimiter(',')->check(CLI::IsMember({"cost", "time", "min_cost", "min_time"}))->capture_default_str();
  bench->add_option("--ratios", b_ratios, "Cost ratios swept by min-cost runs")->delimiter(',')->capture_default_str();
  bench->add_option("--speeds", b_speeds, "Drone speeds swept by min-time runs")->delimiter(',')->capture_default_str();
  bench->add_option("--reference", b_ref, "Algorithm giving the reference value")->capture_default_str();
  bench->add_option("--runs", bc.runs, "Runs per instance and algorithm")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--n-tsp", bc.n_tsp, "GRASP iterations")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--k", bc.k_choices, "Candidate list sizes")->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--seed", bc.seed, "Seed of run 0")->capture_default_str();
  bench->add_option("--workers", bc.workers, "Concurrent runs")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--out", b_out, "Directory (default <output dir>/bench)");

  auto* rep = app.add_subcommand("report", "Rebuild the tables from a benchmark directory");
  std::string r_dir, r_ref;
  rep->add_option("--dir", r_dir, "Benchmark directory")->required()->check(CLI::ExistingDirectory);
  rep->add_option("--reference", r_ref, "Override the reference algorithm");

  auto* lp = app.add_subcommand("export-lp", "Write the MILP model in LP format");
  std::string lp_instance, lp_out;
  bool flight = false;
  int cap = MilpOptions{}.max_lp_customers;
  lp->add_option("--instance", lp_instance, "Instance file")->required()->check(CLI::ExistingFile);
  lp->add_option("--out", lp_out, "LP file")->required();
  lp->add_flag("--flight-endurance", flight, "Bound only the two flight legs by the endurance");
  lp->add_option("--max-customers", cap, "Refuse larger instances")->capture_default_str();

  auto* val = app.add_subcommand("validate", "Check a solution file and print its costs");
  std::string v_instance, v_solution;
  std::optional<double> v_ratio, v_speed;
  val->add_option("--instance", v_instance, "Instance file")->required()->check(CLI::ExistingFile);
  val->add_option("--solution", v_solution, "Solution file")->required()->check(CLI::ExistingFile);
  val->add_option("--cost-ratio", v_ratio, "Truck to drone cost per km")->check(CLI::PositiveNumber);
  val->add_option("--drone-speed", v_speed, "Drone speed in km/h")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_generate(classes, count, gen_seed, fraction, gen_out.empty() ? default_output_dir() / "instances" : fs::path(gen_out));
    if (*sol) return cmd_solve(sa, *sol);
    if (*bench) {
      bc.instances = expand_instances(b_instances);
      bc.algorithms = parse_list<Algorithm>(b_algos, algorithm_from_string);
      bc.constructors = parse_list<Constructor>(b_cons, constructor_from_string);
      bc.objectives = parse_list<Objective>(b_objs, objective_from_string);
      bc.cost_ratios = b_ratios;
      bc.drone_speeds = b_speeds;
      bc.reference = algorithm_from_string(b_ref);
      bc.out_dir = b_out.empty() ? default_output_dir() / "bench" : fs::path(b_out);
      try {
        bc.check();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const BenchResult res = run_bench(bc);
      print_groups(res.tables);
      std::cout << res.runs.size() << " runs; tables in " << bc.out_dir.string() << '\n';
      return 0;
    }
    if (*rep) {
      std::optional<Algorithm> ref;
      if (!r_ref.empty()) ref = algorithm_from_string(r_ref);
      print_groups(report(r_dir, ref));
      return 0;
    }
    if (*lp) return cmd_export_lp(lp_instance, lp_out, flight, cap);
    if (*val) return cmd_validate(v_instance, v_solution, v_ratio, v_speed);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for the options.\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
