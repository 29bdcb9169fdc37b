#include "tspd/bench.hpp"

#include "tspd/grasp.hpp"
#include "tspd/instance_io.hpp"
#include "tspd/metrics.hpp"
#include "tspd/oracle.hpp"
#include "tspd/rng.hpp"
#include "tspd/tspls.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tspd {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kRunsHeader =
    "instance,class,instance_file,algorithm,constructor,objective,cost_ratio,drone_speed,run,seed,value,seconds,"
    "iterations,truck_wait,drone_wait,completion_time,drone_deliveries,solution_file";

std::string num(double v, const char* fmt = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("bad number in runs.csv: " + s);
  return v;
}

void fill_from_evaluation(RunRecord& r, const Solution& s, const Evaluation& e) {
  r.value = e.value(r.objective);
  r.truck_wait = e.total_truck_wait();
  r.drone_wait = e.total_drone_wait();
  r.completion_time = e.completion_time;
  r.drone_deliveries = static_cast<int>(s.deliveries.size());
}

Instance with_setting(Instance inst, double ratio, double speed) {
  inst.params = with_cost_ratio(inst.params, ratio);
  inst.params.drone_speed = speed;
  return inst;
}

struct Job {
  std::size_t instance = 0;
  RunRecord record;
  SolveSpec spec;
};

// Keeps first-appearance order.
template <class Row>
Row& slot(std::vector<Row>& rows, std::map<std::string, std::size_t>& index, const std::string& key) {
  auto [it, fresh] = index.emplace(key, rows.size());
  if (fresh) rows.emplace_back();
  return rows[it->second];
}

std::string setting_key(const RunRecord& r) {
  return r.instance + '|' + to_string(r.objective) + '|' + num(r.cost_ratio) + '|' + num(r.drone_speed);
}

double positive(double seconds) { return std::max(seconds, 1e-9); }

}  // namespace

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Tsp: return "tsp";
    case Algorithm::Exact: return "exact";
    case Algorithm::Grasp: return "grasp";
    case Algorithm::GraspPlus: return "grasp_plus";
    case Algorithm::SplitOnly: return "split_only";
    case Algorithm::TspLs: return "tspls";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
  for (Algorithm a : {Algorithm::Tsp, Algorithm::Exact, Algorithm::Grasp, Algorithm::GraspPlus, Algorithm::SplitOnly,
                      Algorithm::TspLs})
    if (s == to_string(a)) return a;
  if (s == "split-only") return Algorithm::SplitOnly;
  if (s == "grasp+" || s == "grasp-plus") return Algorithm::GraspPlus;
  throw std::invalid_argument("unknown algorithm: " + s);
}

bool uses_constructor(Algorithm a) { return a == Algorithm::Grasp || a == Algorithm::SplitOnly; }

bool single_run(Algorithm a) { return a == Algorithm::Tsp || a == Algorithm::Exact; }

const std::vector<InstanceClass>& instance_classes() {
  static const std::vector<InstanceClass> classes{{"A", 10, 100},  {"B", 50, 100},   {"C", 50, 500}, {"D", 50, 1000},
                                                  {"E", 100, 100}, {"F", 100, 500}, {"G", 100, 1000}};
  return classes;
}

const InstanceClass& instance_class(const std::string& name) {
  for (const InstanceClass& c : instance_classes())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown instance class: " + name);
}

std::uint64_t class_instance_seed(const std::string& name, int index, std::uint64_t seed) {
  const InstanceClass& c = instance_class(name);
  const auto ci = static_cast<std::uint64_t>(&c - instance_classes().data());
  return derive_seed(seed, ci * 1000 + static_cast<std::uint64_t>(index));
}

std::vector<Instance> generate_class(const std::string& name, int count, std::uint64_t seed, double fraction,
                                     const CostParams& params) {
  const InstanceClass& c = instance_class(name);
  std::vector<Instance> out;
  for (int i = 1; i <= count; ++i)
    out.push_back(generate(c.n, c.area, fraction, class_instance_seed(name, i, seed), params, c.name + std::to_string(i)));
  return out;
}

std::string class_of(const std::string& id) {
  std::size_t end = id.size();
  while (end > 0 && id[end - 1] >= '0' && id[end - 1] <= '9') --end;
  return end == 0 ? id : id.substr(0, end);
}

CostParams with_cost_ratio(CostParams p, double ratio) {
  if (!(ratio > 0.0)) throw std::invalid_argument("cost ratio must be positive");
  p.drone_cost = p.truck_cost / ratio;
  return p;
}

double cost_ratio(const CostParams& p) { return p.truck_cost / p.drone_cost; }

SolveOutcome solve(const Problem& pb, const SolveSpec& spec) {
  SolveOutcome out;
  const auto start = std::chrono::steady_clock::now();
  GraspConfig cfg;
  cfg.n_tsp = spec.n_tsp;
  cfg.constructor = spec.constructor;
  cfg.k_choices = spec.k_choices;
  cfg.objective = spec.objective;
  cfg.seed = spec.seed;
  cfg.parallel_workers = spec.workers;
  switch (spec.algorithm) {
    case Algorithm::Tsp:
      out.solution = Solution{reference_tour(pb, spec.seed), {}};
      break;
    case Algorithm::Exact:
      if (pb.n() > kExactTspdLimit)
        throw std::invalid_argument("exact handles at most " + std::to_string(kExactTspdLimit) + " customers");
      out.solution = exact_tspd(pb, spec.objective).solution;
      break;
    case Algorithm::Grasp:
    case Algorithm::SplitOnly: {
      cfg.local_search = spec.algorithm == Algorithm::Grasp;
      GraspResult r = run_grasp(pb, cfg);
      out.solution = std::move(r.best);
      out.iterations = r.iterations;
      break;
    }
    case Algorithm::GraspPlus: {
      GraspResult r = run_grasp_plus(pb, cfg);
      out.solution = std::move(r.best);
      out.iterations = r.iterations;
      break;
    }
    case Algorithm::TspLs: {
      TspLsResult r = run_tspls(pb, spec.objective, std::nullopt, spec.seed);
      out.solution = std::move(r.solution);
      out.iterations = r.iterations;
      break;
    }
  }
  canonicalize(out.solution);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.evaluation = evaluate(pb, out.solution);
  return out;
}

std::string RunRecord::label() const {
  std::string s = to_string(algorithm);
  if (constructor) s += std::string("-") + to_string(*constructor);
  return s;
}

std::string solution_file_name(const RunRecord& r) {
  return "solutions/" + r.instance + "__" + r.label() + "__" + to_string(r.objective) + "__r" + num(r.cost_ratio, "%g") +
         "__s" + num(r.drone_speed, "%g") + "__run" + std::to_string(r.run) + ".json";
}

void BenchConfig::check() const {
  if (instances.empty()) throw std::invalid_argument("no instances to benchmark");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms to benchmark");
  if (constructors.empty()) throw std::invalid_argument("no constructors given");
  if (objectives.empty()) throw std::invalid_argument("no objectives given");
  if (cost_ratios.empty() || drone_speeds.empty()) throw std::invalid_argument("empty sweep");
  for (double r : cost_ratios)
    if (!(r > 0.0)) throw std::invalid_argument("cost ratios must be positive");
  for (double s : drone_speeds)
    if (!(s > 0.0)) throw std::invalid_argument("drone speeds must be positive");
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (n_tsp < 1) throw std::invalid_argument("n_tsp must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (k_choices.empty()) throw std::invalid_argument("k_choices must not be empty");
}

BenchResult run_bench(const BenchConfig& cfg) {
  cfg.check();
  std::vector<Instance> instances;
  for (const fs::path& p : cfg.instances) {
    instances.push_back(load_instance(p));
    if (instances.back().id.find_first_of(",/\\") != std::string::npos)
      throw std::invalid_argument("instance id must not contain ',' or path separators: " + instances.back().id);
    if (cfg.reference == Algorithm::Exact || std::count(cfg.algorithms.begin(), cfg.algorithms.end(), Algorithm::Exact))
      if (instances.back().n > kExactTspdLimit)
        throw std::invalid_argument("exact cannot solve " + instances.back().id + " (n = " +
                                    std::to_string(instances.back().n) + ")");
  }
  std::vector<Algorithm> algos{cfg.reference};
  for (Algorithm a : cfg.algorithms)
    if (std::find(algos.begin(), algos.end(), a) == algos.end()) algos.push_back(a);

  std::vector<Job> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    for (Objective obj : cfg.objectives) {
      std::vector<std::pair<double, double>> settings;
      if (obj == Objective::MinCost)
        for (double r : cfg.cost_ratios) settings.emplace_back(r, inst.params.drone_speed);
      else
        for (double s : cfg.drone_speeds) settings.emplace_back(cost_ratio(inst.params), s);
      for (auto [ratio, speed] : settings)
        for (Algorithm a : algos) {
          std::vector<std::optional<Constructor>> cons{std::nullopt};
          if (uses_constructor(a)) cons.assign(cfg.constructors.begin(), cfg.constructors.end());
          for (const auto& c : cons)
            for (int run = 0; run < (single_run(a) ? 1 : cfg.runs); ++run) {
              Job job;
              job.instance = i;
              RunRecord& r = job.record;
              r.instance = inst.id;
              r.cls = class_of(inst.id);
              r.instance_file = cfg.instances[i].string();
              r.algorithm = a;
              r.constructor = c;
              r.objective = obj;
              r.cost_ratio = ratio;
              r.drone_speed = speed;
              r.run = run;
              r.seed = cfg.seed + static_cast<std::uint64_t>(run);
              r.solution_file = solution_file_name(r);
              job.spec = {a, obj, c.value_or(Constructor::NearestNeighbour), cfg.n_tsp, cfg.k_choices, r.seed, 1};
              jobs.push_back(std::move(job));
            }
        }
    }
  }

  // With one worker the GRASP iterations may still use several threads.
  const int pool = std::min<int>(cfg.workers, static_cast<int>(jobs.size()));
  if (pool == 1)
    for (Job& j : jobs) j.spec.workers = cfg.workers;
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t q; (q = next.fetch_add(1)) < jobs.size();) {
      Job& job = jobs[q];
      try {
        RunRecord& r = job.record;
        const Problem pb(with_setting(instances[job.instance], r.cost_ratio, r.drone_speed));
        const SolveOutcome out = solve(pb, job.spec);
        fill_from_evaluation(r, out.solution, out.evaluation);
        r.seconds = out.seconds;
        r.iterations = out.iterations;
        if (!cfg.out_dir.empty())
          save_solution(cfg.out_dir / r.solution_file, r.instance, r.objective, out.solution, &out.evaluation);
      } catch (...) {
        errors[q] = std::current_exception();
      }
    }
  };
  if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir / "solutions");
  if (pool <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < pool; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  BenchResult res;
  for (Job& j : jobs) res.runs.push_back(std::move(j.record));
  res.tables = aggregate(res.runs, cfg.reference);
  if (!cfg.out_dir.empty()) {
    write_runs(res.runs, cfg.out_dir);
    ordered_json meta;
    meta["reference"] = to_string(cfg.reference);
    meta["runs"] = cfg.runs;
    meta["n_tsp"] = cfg.n_tsp;
    meta["seed"] = cfg.seed;
    write_text(cfg.out_dir / "bench.json", meta.dump(1) + "\n");
    write_tables(res.tables, cfg.out_dir);
  }
  return res;
}

BenchTables aggregate(const std::vector<RunRecord>& runs, Algorithm reference) {
  std::map<std::string, double> ref;
  for (const RunRecord& r : runs)
    if (r.algorithm == reference) {
      auto [it, fresh] = ref.emplace(setting_key(r), r.value);
      if (!fresh) it->second = std::min(it->second, r.value);
    }

  struct Acc {
    std::vector<const RunRecord*> runs;
  };
  std::vector<Acc> per_instance;
  std::map<std::string, std::size_t> index;
  for (const RunRecord& r : runs)
    slot(per_instance, index, setting_key(r) + '|' + r.label()).runs.push_back(&r);

  BenchTables t;
  for (const Acc& acc : per_instance) {
    const RunRecord& f = *acc.runs.front();
    const auto it = ref.find(setting_key(f));
    if (it == ref.end())
      throw std::runtime_error(std::string("no ") + to_string(reference) + " run for " + f.instance + " (" +
                               to_string(f.objective) + ", ratio " + num(f.cost_ratio, "%g") + ", drone speed " +
                               num(f.drone_speed, "%g") + ")");
    InstanceRow row;
    row.instance = f.instance;
    row.cls = f.cls;
    row.algorithm = f.label();
    row.objective = f.objective;
    row.cost_ratio = f.cost_ratio;
    row.drone_speed = f.drone_speed;
    row.runs = static_cast<int>(acc.runs.size());
    row.reference = it->second;
    std::vector<double> values, seconds, tw, dw, ct, dd;
    for (const RunRecord* r : acc.runs) {
      values.push_back(r->value);
      seconds.push_back(positive(r->seconds));
      tw.push_back(r->truck_wait);
      dw.push_back(r->drone_wait);
      ct.push_back(r->completion_time);
      dd.push_back(r->drone_deliveries);
      if (std::abs(r->value - row.reference) <= 1e-9 * std::max(1.0, std::abs(row.reference))) ++row.reference_hits;
    }
    row.best = *std::min_element(values.begin(), values.end());
    row.gamma_avg = geometric_mean(values);
    row.sigma = relative_std(values);
    row.rho_avg = rho(row.gamma_avg, row.reference);
    row.rho_best = rho(row.best, row.reference);
    row.seconds_avg = geometric_mean(seconds);
    row.truck_wait_avg = arithmetic_mean(tw);
    row.drone_wait_avg = arithmetic_mean(dw);
    row.completion_avg = arithmetic_mean(ct);
    row.deliveries_avg = arithmetic_mean(dd);
    t.instances.push_back(std::move(row));
  }

  struct GroupAcc {
    const InstanceRow* first = nullptr;
    std::string cls;
    std::vector<double> rho, seconds, tw, dw, ct, dd;
  };
  std::vector<GroupAcc> groups;
  std::map<std::string, std::size_t> gindex;
  for (const InstanceRow& row : t.instances)
    for (const std::string& cls : {row.cls, std::string("all")}) {
      GroupAcc& g = slot(groups, gindex,
                         cls + '|' + row.algorithm + '|' + to_string(row.objective) + '|' + num(row.cost_ratio) + '|' +
                             num(row.drone_speed));
      if (!g.first) {
        g.first = &row;
        g.cls = cls;
      }
      g.rho.push_back(row.rho_avg);
      g.seconds.push_back(row.seconds_avg);
      g.tw.push_back(row.truck_wait_avg);
      g.dw.push_back(row.drone_wait_avg);
      g.ct.push_back(row.completion_avg);
      g.dd.push_back(row.deliveries_avg);
    }
  // Class rows first, then the "all" rows.
  std::stable_partition(groups.begin(), groups.end(), [](const GroupAcc& g) { return g.cls != "all"; });
  for (const GroupAcc& g : groups) {
    GroupRow row;
    row.cls = g.cls;
    row.algorithm = g.first->algorithm;
    row.objective = g.first->objective;
    row.cost_ratio = g.first->cost_ratio;
    row.drone_speed = g.first->drone_speed;
    row.instances = static_cast<int>(g.rho.size());
    row.rho_mean = geometric_mean(g.rho);
    row.seconds_mean = geometric_mean(g.seconds);
    row.truck_wait_avg = arithmetic_mean(g.tw);
    row.drone_wait_avg = arithmetic_mean(g.dw);
    row.completion_avg = arithmetic_mean(g.ct);
    row.deliveries_avg = arithmetic_mean(g.dd);
    t.groups.push_back(std::move(row));
  }
  return t;
}

void write_runs(const std::vector<RunRecord>& runs, const fs::path& out_dir) {
  std::ostringstream os;
  os << kRunsHeader << '\n';
  for (const RunRecord& r : runs)
    os << r.instance << ',' << r.cls << ',' << r.instance_file << ',' << to_string(r.algorithm) << ','
       << (r.constructor ? to_string(*r.constructor) : "-") << ',' << to_string(r.objective) << ','
       << num(r.cost_ratio) << ',' << num(r.drone_speed) << ',' << r.run << ',' << r.seed << ',' << num(r.value)
       << ',' << num(r.seconds) << ',' << r.iterations << ',' << num(r.truck_wait) << ',' << num(r.drone_wait) << ','
       << num(r.completion_time) << ',' << r.drone_deliveries << ',' << r.solution_file << '\n';
  write_text(out_dir / "runs.csv", os.str());
}

std::vector<RunRecord> load_runs(const fs::path& out_dir) {
  std::istringstream is(read_text(out_dir / "runs.csv"));
  std::string line;
  if (!std::getline(is, line) || line != kRunsHeader) throw std::runtime_error("runs.csv: unexpected header");
  std::map<std::string, Instance> cache;
  std::vector<RunRecord> runs;
  for (int lineno = 2; std::getline(is, line); ++lineno) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 18) throw std::runtime_error("runs.csv line " + std::to_string(lineno) + ": expected 18 fields");
    RunRecord r;
    r.instance = f[0];
    r.cls = f[1];
    r.instance_file = f[2];
    r.algorithm = algorithm_from_string(f[3]);
    if (f[4] != "-") r.constructor = constructor_from_string(f[4]);
    r.objective = objective_from_string(f[5]);
    r.cost_ratio = parse_double(f[6]);
    r.drone_speed = parse_double(f[7]);
    r.run = std::stoi(f[8]);
    r.seed = std::stoull(f[9]);
    r.seconds = parse_double(f[11]);
    r.iterations = std::stoi(f[12]);
    r.solution_file = f[17];

    auto it = cache.find(r.instance_file);
    if (it == cache.end()) it = cache.emplace(r.instance_file, load_instance(r.instance_file)).first;
    if (it->second.id != r.instance)
      throw std::runtime_error("runs.csv line " + std::to_string(lineno) + ": " + r.instance_file + " holds " +
                               it->second.id + ", not " + r.instance);
    const Problem pb(with_setting(it->second, r.cost_ratio, r.drone_speed));
    const SolutionFile sf = load_solution(out_dir / r.solution_file);
    if (sf.instance_id != r.instance || sf.objective != r.objective)
      throw std::runtime_error(r.solution_file + " does not belong to this run");
    fill_from_evaluation(r, sf.solution, evaluate(pb, sf.solution));
    const double stored = parse_double(f[10]);
    if (std::abs(stored - r.value) > 1e-9 * std::max(1.0, std::abs(r.value)))
      throw std::runtime_error("runs.csv line " + std::to_string(lineno) + ": stored value " + f[10] +
                               " disagrees with " + r.solution_file + " (" + num(r.value) + ")");
    runs.push_back(std::move(r));
  }
  return runs;
}

void write_tables(const BenchTables& t, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  auto f2 = [](double v) { return fixed(v, 2); };
  auto f3 = [](double v) { return fixed(v, 3); };
  auto f4 = [](double v) { return fixed(v, 4); };

  std::ostringstream inst;
  inst << "instance,class,algorithm,objective,cost_ratio,drone_speed,runs,reference,best,gamma_avg,sigma,rho_avg,"
          "rho_best,reference_hits,seconds_avg,truck_wait_avg,drone_wait_avg,completion_avg,deliveries_avg\n";
  ordered_json jinst = ordered_json::array();
  for (const InstanceRow& r : t.instances) {
    inst << r.instance << ',' << r.cls << ',' << r.algorithm << ',' << to_string(r.objective) << ','
         << num(r.cost_ratio, "%g") << ',' << num(r.drone_speed, "%g") << ',' << r.runs << ',' << f3(r.reference)
         << ',' << f3(r.best) << ',' << f3(r.gamma_avg) << ',' << f3(r.sigma) << ',' << f2(r.rho_avg) << ','
         << f2(r.rho_best) << ',' << r.reference_hits << ',' << f4(r.seconds_avg) << ',' << f3(r.truck_wait_avg)
         << ',' << f3(r.drone_wait_avg) << ',' << f3(r.completion_avg) << ',' << f2(r.deliveries_avg) << '\n';
    jinst.push_back({{"instance", r.instance},
                     {"class", r.cls},
                     {"algorithm", r.algorithm},
                     {"objective", to_string(r.objective)},
                     {"cost_ratio", r.cost_ratio},
                     {"drone_speed", r.drone_speed},
                     {"runs", r.runs},
                     {"reference", r.reference},
                     {"best", r.best},
                     {"gamma_avg", r.gamma_avg},
                     {"sigma", r.sigma},
                     {"rho_avg", r.rho_avg},
                     {"rho_best", r.rho_best},
                     {"reference_hits", r.reference_hits},
                     {"seconds_avg", r.seconds_avg},
                     {"truck_wait_avg", r.truck_wait_avg},
                     {"drone_wait_avg", r.drone_wait_avg},
                     {"completion_avg", r.completion_avg},
                     {"deliveries_avg", r.deliveries_avg}});
  }

  std::ostringstream cls, ratio, usage;
  cls << "class,algorithm,objective,cost_ratio,drone_speed,instances,rho_mean,seconds_mean,truck_wait_avg,"
         "drone_wait_avg,completion_avg,deliveries_avg\n";
  ratio << "algorithm,cost_ratio,instances,rho_mean\n";
  usage << "class,algorithm,objective,cost_ratio,drone_speed,instances,deliveries_avg\n";
  ordered_json jcls = ordered_json::array(), jratio = ordered_json::array(), jusage = ordered_json::array();
  for (const GroupRow& g : t.groups) {
    cls << g.cls << ',' << g.algorithm << ',' << to_string(g.objective) << ',' << num(g.cost_ratio, "%g") << ','
        << num(g.drone_speed, "%g") << ',' << g.instances << ',' << f2(g.rho_mean) << ',' << f4(g.seconds_mean) << ','
        << f3(g.truck_wait_avg) << ',' << f3(g.drone_wait_avg) << ',' << f3(g.completion_avg) << ','
        << f2(g.deliveries_avg) << '\n';
    usage << g.cls << ',' << g.algorithm << ',' << to_string(g.objective) << ',' << num(g.cost_ratio, "%g") << ','
          << num(g.drone_speed, "%g") << ',' << g.instances << ',' << f2(g.deliveries_avg) << '\n';
    ordered_json j{{"class", g.cls},
                   {"algorithm", g.algorithm},
                   {"objective", to_string(g.objective)},
                   {"cost_ratio", g.cost_ratio},
                   {"drone_speed", g.drone_speed},
                   {"instances", g.instances},
                   {"rho_mean", g.rho_mean},
                   {"seconds_mean", g.seconds_mean},
                   {"truck_wait_avg", g.truck_wait_avg},
                   {"drone_wait_avg", g.drone_wait_avg},
                   {"completion_avg", g.completion_avg},
                   {"deliveries_avg", g.deliveries_avg}};
    jusage.push_back({{"class", g.cls},
                      {"algorithm", g.algorithm},
                      {"objective", to_string(g.objective)},
                      {"cost_ratio", g.cost_ratio},
                      {"drone_speed", g.drone_speed},
                      {"instances", g.instances},
                      {"deliveries_avg", g.deliveries_avg}});
    if (g.cls == "all" && g.objective == Objective::MinCost) {
      ratio << g.algorithm << ',' << num(g.cost_ratio, "%g") << ',' << g.instances << ',' << f2(g.rho_mean) << '\n';
      jratio.push_back({{"algorithm", g.algorithm},
                        {"cost_ratio", g.cost_ratio},
                        {"instances", g.instances},
                        {"rho_mean", g.rho_mean}});
    }
    jcls.push_back(std::move(j));
  }
  write_text(out_dir / "instances.csv", inst.str());
  write_text(out_dir / "classes.csv", cls.str());
  write_text(out_dir / "cost_ratio.csv", ratio.str());
  write_text(out_dir / "drone_usage.csv", usage.str());
  ordered_json all{{"instances", jinst}, {"classes", jcls}, {"cost_ratio", jratio}, {"drone_usage", jusage}};
  write_text(out_dir / "tables.json", all.dump(1) + "\n");
}

BenchTables report(const fs::path& out_dir, std::optional<Algorithm> reference) {
  if (!reference) {
    const auto meta = nlohmann::json::parse(read_text(out_dir / "bench.json"));
    reference = algorithm_from_string(meta.at("reference").get<std::string>());
  }
  BenchTables t = aggregate(load_runs(out_dir), *reference);
  write_tables(t, out_dir);
  return t;
}

}  // namespace tspd
