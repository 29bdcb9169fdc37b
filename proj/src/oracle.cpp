#include "tspd/oracle.hpp"

#include <algorithm>
#include <limits>

namespace tspd {

namespace {

class Enumerator {
 public:
  Enumerator(const Problem& problem, Objective objective, std::chrono::steady_clock::time_point deadline,
             OracleResult& best)
      : pb_(problem), obj_(objective), deadline_(deadline), best_(best) {}

  void run(const Tour& tour) {
    tour_ = &tour;
    current_.truck_tour.assign(1, tour[0]);
    current_.deliveries.clear();
    step(0);
  }

 private:
  // The truck stands at tour position a; extend by one arc.
  void step(int a) {
    const Tour& s = *tour_;
    const int last = static_cast<int>(s.size()) - 1;
    if (a == last) {
      score();
      return;
    }
    current_.truck_tour.push_back(s[a + 1]);
    step(a + 1);
    current_.truck_tour.pop_back();
    for (int c = a + 2; c <= last; ++c) {
      for (int b = a + 1; b < c; ++b) {
        if (!pb_.feasible_delivery(s[a], s[b], s[c])) continue;
        const std::size_t mark = current_.truck_tour.size();
        for (int q = a + 1; q <= c; ++q)
          if (q != b) current_.truck_tour.push_back(s[q]);
        current_.deliveries.push_back({s[a], s[b], s[c]});
        step(c);
        current_.deliveries.pop_back();
        current_.truck_tour.resize(mark);
      }
    }
  }

  void score() {
    if ((++best_.candidates & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw OracleTimeout("exact oracle exceeded its time limit");
    const double v = evaluate(pb_, current_).value(obj_);
    if (v < best_.value) {
      best_.value = v;
      best_.solution = current_;
    }
  }

  const Problem& pb_;
  Objective obj_;
  std::chrono::steady_clock::time_point deadline_;
  OracleResult& best_;
  const Tour* tour_ = nullptr;
  Solution current_;
};

}  // namespace

OracleResult exact_split(const Problem& problem, const Tour& tour, Objective objective,
                         std::chrono::seconds limit) {
  if (!is_giant_tour(problem, tour)) throw std::invalid_argument("exact_split needs a giant tour");
  OracleResult best;
  best.value = std::numeric_limits<double>::infinity();
  Enumerator e(problem, objective, std::chrono::steady_clock::now() + limit, best);
  e.run(tour);
  return best;
}

OracleResult exact_tspd(const Problem& problem, Objective objective, std::chrono::seconds limit) {
  if (problem.n() > kExactTspdLimit)
    throw std::invalid_argument("exact_tspd handles at most " + std::to_string(kExactTspdLimit) + " customers");
  OracleResult best;
  best.value = std::numeric_limits<double>::infinity();
  Enumerator e(problem, objective, std::chrono::steady_clock::now() + limit, best);
  Tour tour;
  for (NodeId v = 0; v <= problem.n() + 1; ++v) tour.push_back(v);
  do {
    e.run(tour);
  } while (std::next_permutation(tour.begin() + 1, tour.end() - 1));
  return best;
}

}  // namespace tspd
