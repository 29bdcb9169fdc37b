#include "tspd/grasp.hpp"

#include "tspd/localsearch.hpp"
#include "tspd/rng.hpp"
#include "tspd/split.hpp"

#include <chrono>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace tspd {

void GraspConfig::check() const {
  if (n_tsp < 1) throw std::invalid_argument("n_tsp must be at least 1");
  if (parallel_workers < 1) throw std::invalid_argument("parallel_workers must be at least 1");
  if (k_choices.empty()) throw std::invalid_argument("k_choices must not be empty");
  for (int k : k_choices)
    if (k < 1) throw std::invalid_argument("every k choice must be at least 1");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  Solution solution;
  double value = std::numeric_limits<double>::infinity();
  int iteration = -1;
};

Solution finish(const Problem& pb, const Tour& tour, const GraspConfig& cfg) {
  Solution s = split(pb, tour, cfg.objective);
  if (cfg.local_search) s = improve(pb, std::move(s), cfg.objective);
  return s;
}

GraspResult package(const Problem& pb, Candidate best, std::vector<double> values, Clock::time_point start) {
  GraspResult r;
  r.evaluation = evaluate(pb, best.solution);
  r.best = std::move(best.solution);
  r.iterations = static_cast<int>(values.size());
  r.best_iteration = best.iteration;
  r.iteration_values = std::move(values);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

GraspResult run_grasp(const Problem& pb, const GraspConfig& cfg) {
  cfg.check();
  const auto start = Clock::now();
  const int workers = std::min(cfg.parallel_workers, cfg.n_tsp);
  std::vector<double> values(cfg.n_tsp);
  std::vector<Candidate> bests(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](int w) {
    try {
      for (int it = w; it < cfg.n_tsp; it += workers) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(it)));
        const int k = cfg.k_choices[rng.below(cfg.k_choices.size())];
        Solution s = finish(pb, construct(pb, cfg.constructor, k, rng), cfg);
        values[it] = evaluate_unchecked(pb, s).value(cfg.objective);
        if (values[it] < bests[w].value) bests[w] = {std::move(s), values[it], it};
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Candidate best;
  for (auto& c : bests)
    if (c.value < best.value || (c.value == best.value && c.iteration < best.iteration)) best = std::move(c);
  return package(pb, std::move(best), std::move(values), start);
}

GraspResult run_grasp_plus(const Problem& pb, const GraspConfig& cfg, const std::optional<Tour>& tour) {
  cfg.check();
  const auto start = Clock::now();
  const Tour t = tour ? *tour : reference_tour(pb, cfg.seed);
  if (!is_giant_tour(pb, t)) throw std::invalid_argument("supplied tour does not visit every customer once");
  Candidate c;
  c.solution = finish(pb, t, cfg);
  c.value = evaluate_unchecked(pb, c.solution).value(cfg.objective);
  c.iteration = 0;
  std::vector<double> values{c.value};
  return package(pb, std::move(c), std::move(values), start);
}

}  // namespace tspd
