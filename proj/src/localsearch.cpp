#include "tspd/localsearch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tspd {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::RelocateTruck: return "relocate_truck";
    case MoveKind::RelocateDrone: return "relocate_drone";
    case MoveKind::RemoveDrone: return "remove_drone";
    case MoveKind::TwoExchange: return "two_exchange";
  }
  return "?";
}

namespace {

int find(const std::vector<NodeId>& v, NodeId x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

bool is_customer(const Problem& pb, NodeId v) { return v >= 1 && v <= pb.n(); }

bool touches_sortie_end(const Solution& s, NodeId v) {
  for (const auto& d : s.deliveries)
    if (d.launch == v || d.rendezvous == v) return true;
  return false;
}

int sortie_of(const Solution& s, NodeId j) {
  for (std::size_t d = 0; d < s.deliveries.size(); ++d)
    if (s.deliveries[d].customer == j) return static_cast<int>(d);
  return -1;
}

std::optional<Solution> checked(const Problem& pb, Solution s) {
  if (!validate(pb, s).empty()) return std::nullopt;
  return s;
}

}  // namespace

std::optional<Solution> relocate_truck(const Problem& pb, const Solution& s, NodeId a, NodeId b) {
  if (!is_customer(pb, a) || a == b || b == 0) return std::nullopt;
  if (find(s.truck_tour, a) < 0 || find(s.truck_tour, b) < 0 || touches_sortie_end(s, a)) return std::nullopt;
  Solution out = s;
  out.truck_tour.erase(out.truck_tour.begin() + find(out.truck_tour, a));
  out.truck_tour.insert(out.truck_tour.begin() + find(out.truck_tour, b), a);
  return checked(pb, std::move(out));
}

std::optional<Solution> relocate_drone(const Problem& pb, const Solution& s, NodeId a, NodeId i, NodeId k) {
  if (!is_customer(pb, a) || i == a || k == a) return std::nullopt;
  Solution out = s;
  const int pa = find(s.truck_tour, a);
  if (pa >= 0) {
    if (touches_sortie_end(s, a)) return std::nullopt;
    out.truck_tour.erase(out.truck_tour.begin() + pa);
  } else {
    const int d = sortie_of(s, a);
    if (d < 0) return std::nullopt;
    out.deliveries.erase(out.deliveries.begin() + d);
  }
  const int pi = find(out.truck_tour, i), pk = find(out.truck_tour, k);
  if (pi < 0 || pk < 0 || pi >= pk || !pb.feasible_delivery(i, a, k)) return std::nullopt;
  out.deliveries.push_back({i, a, k});
  return checked(pb, std::move(out));
}

std::optional<Solution> remove_drone(const Problem& pb, const Solution& s, NodeId j, NodeId k) {
  const int d = sortie_of(s, j);
  if (d < 0 || k == 0 || find(s.truck_tour, k) < 0) return std::nullopt;
  Solution out = s;
  out.deliveries.erase(out.deliveries.begin() + d);
  out.truck_tour.insert(out.truck_tour.begin() + find(out.truck_tour, k), j);
  return checked(pb, std::move(out));
}

std::optional<Solution> two_exchange(const Problem& pb, const Solution& s, NodeId a, NodeId b) {
  if (!is_customer(pb, a) || !is_customer(pb, b) || a == b) return std::nullopt;
  auto swap = [&](NodeId v) { return v == a ? b : v == b ? a : v; };
  Solution out = s;
  for (NodeId& v : out.truck_tour) v = swap(v);
  for (DroneDelivery& d : out.deliveries) d = {swap(d.launch), swap(d.customer), swap(d.rendezvous)};
  return checked(pb, std::move(out));
}

std::optional<Solution> apply_move(const Problem& pb, const Solution& s, const Move& m) {
  switch (m.kind) {
    case MoveKind::RelocateTruck: return relocate_truck(pb, s, m.a, m.b);
    case MoveKind::RelocateDrone: return relocate_drone(pb, s, m.a, m.b, m.c);
    case MoveKind::RemoveDrone: return remove_drone(pb, s, m.a, m.b);
    case MoveKind::TwoExchange: return two_exchange(pb, s, m.a, m.b);
  }
  return std::nullopt;
}

namespace {

struct Sortie {
  NodeId i, j, k;
  int l, r;  // tour positions of launch and rendezvous
  double tt, extra;
};

// Tour-position bookkeeping for O(1) move deltas. The objective is the sum
// of a per-arc truck term and a per-sortie extra that depends only on the
// sortie's triple and the truck time between its ends.
class Scanner {
 public:
  Scanner(const Problem& pb, const Solution& s, Objective obj) : pb_(pb), prm_(pb.params()), obj_(obj), td_(s.truck_tour) {
    const int len = static_cast<int>(td_.size());
    pos_.assign(pb.n() + 2, -1);
    for (int p = 0; p < len; ++p) pos_[td_[p]] = p;
    pt_.assign(len, 0.0);
    for (int p = 1; p < len; ++p) {
      pt_[p] = pt_[p - 1] + pb.truck_time(td_[p - 1], td_[p]);
      f_ += arc(td_[p - 1], td_[p]);
    }
    launch_at_.assign(len, -1);
    rend_at_.assign(len, -1);
    inside_.assign(len, -1);
    cover_.assign(len, -1);
    sortie_of_.assign(pb.n() + 2, -1);
    for (const DroneDelivery& d : s.deliveries) {
      Sortie so{d.launch, d.customer, d.rendezvous, pos_[d.launch], pos_[d.rendezvous], 0.0, 0.0};
      so.tt = pt_[so.r] - pt_[so.l];
      so.extra = extra(so.i, so.j, so.k, so.tt);
      const int id = static_cast<int>(sorties_.size());
      launch_at_[so.l] = id;
      rend_at_[so.r] = id;
      for (int q = so.l; q < so.r; ++q) cover_[q] = id;
      for (int p = so.l + 1; p < so.r; ++p) inside_[p] = id;
      sortie_of_[so.j] = id;
      f_ += so.extra;
      sorties_.push_back(so);
    }
  }

  double objective() const { return f_; }

  // visit(Move) for every applicable move. With a bound, moves whose delta
  // provably cannot fall below *bound may be skipped.
  template <class Visit>
  void scan(Visit&& visit, const double* bound) const {
    scan_relocate_truck(visit);
    scan_relocate_drone(visit, bound);
    scan_remove_drone(visit);
    scan_two_exchange(visit);
  }

 private:
  double arc(NodeId u, NodeId v) const {
    return obj_ == Objective::MinCost ? prm_.truck_cost * pb_.truck_dist(u, v) : pb_.truck_time(u, v);
  }

  double extra(NodeId i, NodeId j, NodeId k, double tt) const {
    const double dt = pb_.drone_time(i, j) + pb_.drone_time(j, k);
    if (obj_ == Objective::MinCost)
      return prm_.drone_cost * (pb_.drone_dist(i, j) + pb_.drone_dist(j, k)) +
             prm_.truck_wait_fee * std::max(0.0, dt - tt) + prm_.drone_wait_fee * std::max(0.0, tt - dt);
    return std::max(0.0, dt - tt) + prm_.launch_time + prm_.retrieve_time;
  }

  double reextra(int s, double tt) const {
    const Sortie& so = sorties_[s];
    return extra(so.i, so.j, so.k, tt) - so.extra;
  }

  template <class Visit>
  void scan_relocate_truck(Visit& visit) const {
    const int len = static_cast<int>(td_.size());
    for (int pa = 1; pa + 1 < len; ++pa) {
      if (launch_at_[pa] >= 0 || rend_at_[pa] >= 0) continue;
      const NodeId a = td_[pa], p = td_[pa - 1], nx = td_[pa + 1];
      const double rem = arc(p, nx) - arc(p, a) - arc(a, nx);
      const double rem_t = pb_.truck_time(p, nx) - pb_.truck_time(p, a) - pb_.truck_time(a, nx);
      const int s1 = cover_[pa];
      for (int pb = 1; pb < len; ++pb) {
        if (pb == pa || pb == pa + 1) continue;
        const NodeId q = td_[pb - 1], b = td_[pb];
        const int s2 = cover_[pb - 1];
        const double ins_t = pb_.truck_time(q, a) + pb_.truck_time(a, b) - pb_.truck_time(q, b);
        double delta = rem + arc(q, a) + arc(a, b) - arc(q, b);
        if (s1 >= 0) delta += reextra(s1, sorties_[s1].tt + rem_t + (s2 == s1 ? ins_t : 0.0));
        if (s2 >= 0 && s2 != s1) delta += reextra(s2, sorties_[s2].tt + ins_t);
        visit(Move{MoveKind::RelocateTruck, a, b, -1, delta});
      }
    }
  }

  template <class Visit>
  void scan_relocate_drone(Visit& visit, const double* bound) const {
    const int len = static_cast<int>(td_.size());
    const double service = prm_.launch_time + prm_.retrieve_time;
    for (NodeId a = 1; a <= pb_.n(); ++a) {
      if (!pb_.eligible(a)) continue;
      const int sa = sortie_of_[a];
      const int pa = pos_[a];
      double rem = 0.0, rem_t = 0.0;
      if (sa >= 0) {
        rem = -sorties_[sa].extra;
      } else {
        if (pa < 0 || launch_at_[pa] >= 0 || rend_at_[pa] >= 0) continue;
        const NodeId p = td_[pa - 1], nx = td_[pa + 1];
        rem = arc(p, nx) - arc(p, a) - arc(a, nx);
        rem_t = pb_.truck_time(p, nx) - pb_.truck_time(p, a) - pb_.truck_time(a, nx);
        const int s1 = cover_[pa];
        if (s1 >= 0) rem += reextra(s1, sorties_[s1].tt + rem_t);
      }
      if (bound && obj_ == Objective::MinTime && rem + service >= *bound) continue;
      for (int pi = 0; pi + 1 < len; ++pi) {
        if (pi == pa) continue;
        if (inside_[pi] >= 0 && inside_[pi] != sa) continue;
        if (launch_at_[pi] >= 0 && launch_at_[pi] != sa) continue;
        const NodeId i = td_[pi];
        const double leg = pb_.drone_time(i, a);
        if (leg > prm_.endurance) continue;
        double floor_i = rem + (obj_ == Objective::MinCost ? prm_.drone_cost * pb_.drone_dist(i, a) : service);
        if (bound && floor_i >= *bound) continue;
        for (int pk = pi + 1; pk < len; ++pk) {
          if (pk - 1 > pi && launch_at_[pk - 1] >= 0 && launch_at_[pk - 1] != sa) break;
          const double span = pt_[pk] - pt_[pi];
          if (bound && obj_ == Objective::MinCost &&
              floor_i + prm_.drone_wait_fee * std::max(0.0, span + std::min(0.0, rem_t) - prm_.endurance) >= *bound)
            break;
          if (pk == pa) continue;
          const NodeId k = td_[pk];
          if (!pb_.feasible_delivery(i, a, k)) continue;
          const double tt = span + (sa < 0 && pi < pa && pa < pk ? rem_t : 0.0);
          visit(Move{MoveKind::RelocateDrone, a, i, k, rem + extra(i, a, k, tt)});
        }
      }
    }
  }

  template <class Visit>
  void scan_remove_drone(Visit& visit) const {
    const int len = static_cast<int>(td_.size());
    for (NodeId j = 1; j <= pb_.n(); ++j) {
      const int s = sortie_of_[j];
      if (s < 0) continue;
      for (int pk = 1; pk < len; ++pk) {
        const NodeId q = td_[pk - 1], k = td_[pk];
        const int s2 = cover_[pk - 1];
        double delta = -sorties_[s].extra + arc(q, j) + arc(j, k) - arc(q, k);
        if (s2 >= 0 && s2 != s)
          delta += reextra(s2, sorties_[s2].tt + pb_.truck_time(q, j) + pb_.truck_time(j, k) - pb_.truck_time(q, k));
        visit(Move{MoveKind::RemoveDrone, j, k, -1, delta});
      }
    }
  }

  template <class Visit>
  void scan_two_exchange(Visit& visit) const {
    const int n = pb_.n();
    int arcs[4], touched[10];
    double arc_dt[4];
    for (NodeId a = 1; a <= n; ++a) {
      for (NodeId b = a + 1; b <= n; ++b) {
        auto sw = [&](NodeId v) { return v == a ? b : v == b ? a : v; };
        int na = 0, ns = 0;
        double delta = 0.0;
        for (NodeId x : {a, b}) {
          const int px = pos_[x];
          if (px < 0) {
            touched[ns++] = sortie_of_[x];
            continue;
          }
          for (int q : {px - 1, px}) {
            if (std::find(arcs, arcs + na, q) != arcs + na) continue;
            const NodeId u = td_[q], v = td_[q + 1];
            delta += arc(sw(u), sw(v)) - arc(u, v);
            arc_dt[na] = pb_.truck_time(sw(u), sw(v)) - pb_.truck_time(u, v);
            arcs[na++] = q;
            if (cover_[q] >= 0) touched[ns++] = cover_[q];
          }
          if (launch_at_[px] >= 0) touched[ns++] = launch_at_[px];
          if (rend_at_[px] >= 0) touched[ns++] = rend_at_[px];
        }
        std::sort(touched, touched + ns);
        ns = static_cast<int>(std::unique(touched, touched + ns) - touched);
        bool ok = true;
        for (int t = 0; t < ns && ok; ++t) {
          const Sortie& so = sorties_[touched[t]];
          const NodeId i = sw(so.i), j = sw(so.j), k = sw(so.k);
          if (!pb_.feasible_delivery(i, j, k)) {
            ok = false;
            break;
          }
          double tt = so.tt;
          for (int q = 0; q < na; ++q)
            if (arcs[q] >= so.l && arcs[q] < so.r) tt += arc_dt[q];
          delta += extra(i, j, k, tt) - so.extra;
        }
        if (ok) visit(Move{MoveKind::TwoExchange, a, b, -1, delta});
      }
    }
  }

  const Problem& pb_;
  const CostParams& prm_;
  Objective obj_;
  std::vector<NodeId> td_;
  std::vector<int> pos_;
  std::vector<double> pt_;
  std::vector<int> launch_at_, rend_at_, inside_, cover_, sortie_of_;
  std::vector<Sortie> sorties_;
  double f_ = 0.0;
};

}  // namespace

std::vector<Move> neighbourhood(const Problem& problem, const Solution& s, Objective objective) {
  Scanner sc(problem, s, objective);
  std::vector<Move> out;
  sc.scan([&](const Move& m) { out.push_back(m); }, nullptr);
  return out;
}

Solution improve(const Problem& problem, Solution s, Objective objective, ImproveStats* stats) {
  if (auto v = validate(problem, s); !v.empty()) throw InvalidSolution(std::move(v));
  ImproveStats local;
  ImproveStats& st = stats ? *stats : local;
  for (;;) {
    Scanner sc(problem, s, objective);
    const double f = sc.objective();
    Move best;
    best.delta = -1e-9 * std::max(1.0, std::abs(f));
    bool found = false;
    sc.scan(
        [&](const Move& m) {
          if (m.delta < best.delta) {
            best = m;
            found = true;
          }
        },
        &best.delta);
    ++st.scans;
    if (!found) break;
    std::optional<Solution> next = apply_move(problem, s, best);
    if (!next) throw std::logic_error(std::string("local search produced an invalid ") + to_string(best.kind));
    const double after = Scanner(problem, *next, objective).objective();
    if (std::abs(after - (f + best.delta)) > 1e-6 * std::max(1.0, std::abs(f)))
      throw std::logic_error(std::string("local search delta mismatch in ") + to_string(best.kind));
    s = std::move(*next);
    ++st.moves;
    ++st.by_kind[static_cast<int>(best.kind)];
  }
  canonicalize(s);
  return s;
}

}  // namespace tspd
