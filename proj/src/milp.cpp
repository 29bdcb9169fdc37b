#include "tspd/milp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "tspd/instance_io.hpp"

namespace tspd {

MilpTooLarge::MilpTooLarge(int customers, std::int64_t variables, int cap)
    : std::runtime_error("model with " + std::to_string(customers) + " customers would have " +
                         std::to_string(variables) + " variables; export is limited to " + std::to_string(cap) +
                         " customers"),
      variables_(variables) {}

std::int64_t milp_variable_count(const Problem& pb) {
  const std::int64_t n = pb.n();
  const auto deliveries = static_cast<std::int64_t>(enumerate_feasible_deliveries(pb).size());
  return (n + 1) * (n + 1) - n + deliveries + (n + 1) + n * n + 7 * (n + 2);
}

namespace {

std::string nm(const char* stem, std::initializer_list<NodeId> ids) {
  std::string s = stem;
  for (NodeId v : ids) s += "_" + std::to_string(v);
  return s;
}

}  // namespace

MilpModel::MilpModel(const Problem& pb, MilpOptions options) : problem_(&pb), options_(options) {
  const auto& m = pb.matrices();
  const double tau_max = std::max(m.truck_time.maxCoeff(), m.drone_time.maxCoeff());
  const CostParams& prm = pb.params();
  const int n = pb.n();
  big_m_ = (n + 2) * (tau_max + prm.endurance + prm.launch_time + prm.retrieve_time) + n + 2;
  build_variables();
  build_rows();
}

int MilpModel::add_var(std::string name, VarKind kind, double lower, double upper, int domain) {
  by_name_.emplace(name, static_cast<int>(vars_.size()));
  vars_.push_back({std::move(name), kind, lower, upper, domain});
  return static_cast<int>(vars_.size()) - 1;
}

int MilpModel::index(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int MilpModel::x(NodeId i, NodeId j) const {
  const int size = problem_->n() + 2;
  if (i < 0 || j < 0 || i >= size || j >= size) return -1;
  return x_index_[i * size + j];
}

int MilpModel::p(NodeId i, NodeId j) const {
  const int size = problem_->n() + 2;
  if (i < 0 || j < 0 || i >= size || j >= size) return -1;
  return p_index_[i * size + j];
}

int MilpModel::y(NodeId i, NodeId j, NodeId k) const {
  auto it = y_index_.find({i, j, k});
  return it == y_index_.end() ? -1 : it->second;
}

void MilpModel::build_variables() {
  const Problem& pb = *problem_;
  const int n = pb.n(), size = n + 2;
  const double inf = std::numeric_limits<double>::infinity();
  x_index_.assign(size * size, -1);
  p_index_.assign(size * size, -1);
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId j = 1; j <= n + 1; ++j)
      if (i != j) x_index_[i * size + j] = add_var(nm("x", {i, j}), VarKind::Binary, 0, 1, 39);
  for (const DroneDelivery& d : enumerate_feasible_deliveries(pb))
    y_index_[{d.launch, d.customer, d.rendezvous}] =
        add_var(nm("y", {d.launch, d.customer, d.rendezvous}), VarKind::Binary, 0, 1, 40);
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId j = 1; j <= n + 1; ++j) {
      if (i == j) continue;
      p_index_[i * size + j] = i == 0 ? add_var(nm("p", {i, j}), VarKind::Binary, 1, 1, 42)
                                      : add_var(nm("p", {i, j}), VarKind::Binary, 0, 1, 41);
    }
  node_base_ = static_cast<int>(vars_.size());
  for (NodeId i = 0; i < size; ++i) {
    add_var(nm("u", {i}), VarKind::Continuous, 0, n + 1, 43);
    add_var(nm("t", {i}), VarKind::Continuous, 0, inf, 44);
    add_var(nm("tp", {i}), VarKind::Continuous, 0, inf, 45);
    add_var(nm("r", {i}), VarKind::Continuous, 0, inf, 46);
    add_var(nm("rp", {i}), VarKind::Continuous, 0, inf, 47);
    add_var(nm("w", {i}), VarKind::Continuous, -inf, inf, 0);
    add_var(nm("wp", {i}), VarKind::Continuous, -inf, inf, 0);
  }
}

void MilpModel::build_rows() {
  const Problem& pb = *problem_;
  const CostParams& prm = pb.params();
  const int n = pb.n(), last = n + 1;
  const double M = big_m_, N2 = n + 2;
  const auto deliveries = enumerate_feasible_deliveries(pb);

  std::vector<std::vector<DroneDelivery>> by_launch(n + 2), by_rendezvous(n + 2), by_customer(n + 2);
  for (const DroneDelivery& d : deliveries) {
    by_launch[d.launch].push_back(d);
    by_rendezvous[d.rendezvous].push_back(d);
    by_customer[d.customer].push_back(d);
  }
  auto yv = [&](const DroneDelivery& d) { return y(d.launch, d.customer, d.rendezvous); };

  auto add = [&](int id, std::string name, std::vector<MilpTerm> terms, Sense sense, double rhs) {
    std::sort(terms.begin(), terms.end(), [](const MilpTerm& a, const MilpTerm& b) { return a.var < b.var; });
    std::vector<MilpTerm> merged;
    for (const MilpTerm& t : terms) {
      if (!merged.empty() && merged.back().var == t.var)
        merged.back().coef += t.coef;
      else
        merged.push_back(t);
    }
    std::erase_if(merged, [](const MilpTerm& t) { return t.coef == 0.0; });
    rows_.push_back({std::move(name), id, std::move(merged), sense, rhs});
  };
  auto in_arcs = [&](NodeId j, double c, std::vector<MilpTerm>& out, bool customers_only, NodeId skip = -1) {
    for (NodeId h = customers_only ? 1 : 0; h <= n; ++h)
      if (h != j && h != skip) out.push_back({x(h, j), c});
  };
  auto y_sum = [&](const std::vector<DroneDelivery>& list, double c, std::vector<MilpTerm>& out) {
    for (const DroneDelivery& d : list) out.push_back({yv(d), c});
  };

  // Objective.
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId j = 1; j <= last; ++j)
      if (i != j) objective_.push_back({x(i, j), prm.truck_cost * pb.truck_dist(i, j)});
  for (const DroneDelivery& d : deliveries)
    objective_.push_back(
        {yv(d), prm.drone_cost * (pb.drone_dist(d.launch, d.customer) + pb.drone_dist(d.customer, d.rendezvous))});
  for (NodeId i = 0; i <= last; ++i) {
    objective_.push_back({w(i), prm.truck_wait_fee});
    objective_.push_back({wp(i), prm.drone_wait_fee});
  }

  for (NodeId j = 1; j <= n; ++j) {
    std::vector<MilpTerm> t;
    in_arcs(j, 1.0, t, false);
    y_sum(by_customer[j], 1.0, t);
    add(2, nm("c2", {j}), t, Sense::Equal, 1.0);
  }
  {
    std::vector<MilpTerm> t;
    for (NodeId j = 1; j <= last; ++j) t.push_back({x(0, j), 1.0});
    add(3, "c3", t, Sense::Equal, 1.0);
    t.clear();
    in_arcs(last, 1.0, t, false);
    add(4, "c4", t, Sense::Equal, 1.0);
  }
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId j = 1; j <= last; ++j)
      if (i != j) add(5, nm("c5", {i, j}), {{u(i), 1.0}, {u(j), -1.0}, {x(i, j), N2}}, Sense::LessEqual, N2 - 1.0);
  for (NodeId j = 1; j <= n; ++j) {
    std::vector<MilpTerm> t;
    in_arcs(j, 1.0, t, false);
    for (NodeId k = 1; k <= last; ++k)
      if (k != j) t.push_back({x(j, k), -1.0});
    add(6, nm("c6", {j}), t, Sense::Equal, 0.0);
  }
  for (const DroneDelivery& d : deliveries) {
    std::vector<MilpTerm> t;
    if (d.launch != 0) {
      t.push_back({yv(d), 2.0});
      in_arcs(d.launch, -1.0, t, false);
      in_arcs(d.rendezvous, -1.0, t, true);
      add(7, nm("c7", {d.launch, d.customer, d.rendezvous}), t, Sense::LessEqual, 0.0);
    } else {
      t.push_back({yv(d), 1.0});
      in_arcs(d.rendezvous, -1.0, t, false, d.customer);
      add(8, nm("c8", {d.customer, d.rendezvous}), t, Sense::LessEqual, 0.0);
    }
  }
  // Sorties grouped by (launch, rendezvous).
  auto pair_sum = [&](NodeId i, NodeId k, NodeId skip_j, double c, std::vector<MilpTerm>& out) {
    for (const DroneDelivery& d : by_launch[i])
      if (d.rendezvous == k && d.customer != skip_j) out.push_back({yv(d), c});
  };
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId k = 1; k <= last; ++k) {
      if (i == k) continue;
      std::vector<MilpTerm> t{{u(k), 1.0}, {u(i), -1.0}};
      pair_sum(i, k, -1, -N2, t);
      add(9, nm("c9", {i, k}), t, Sense::GreaterEqual, 1.0 - N2);
    }
  for (NodeId i = 0; i <= n; ++i) {
    std::vector<MilpTerm> t;
    y_sum(by_launch[i], 1.0, t);
    add(10, nm("c10", {i}), t, Sense::LessEqual, 1.0);
  }
  for (NodeId k = 1; k <= last; ++k) {
    std::vector<MilpTerm> t;
    y_sum(by_rendezvous[k], 1.0, t);
    add(11, nm("c11", {k}), t, Sense::LessEqual, 1.0);
  }
  for (NodeId i = 1; i <= n; ++i)
    for (NodeId j = 1; j <= last; ++j) {
      if (i == j) continue;
      std::vector<MilpTerm> lo{{u(i), 1.0}, {u(j), -1.0}, {p(i, j), N2}}, hi = lo;
      in_arcs(i, -M, lo, false);
      in_arcs(j, -M, lo, true);
      in_arcs(i, M, hi, false);
      in_arcs(j, M, hi, true);
      add(12, nm("c12", {i, j}), lo, Sense::GreaterEqual, 1.0 - 2.0 * M);
      add(13, nm("c13", {i, j}), hi, Sense::LessEqual, N2 - 1.0 + 2.0 * M);
    }
  for (NodeId j = 1; j <= last; ++j) {
    std::vector<MilpTerm> lo{{u(0), 1.0}, {u(j), -1.0}, {p(0, j), N2}}, hi = lo;
    in_arcs(j, -M, lo, false);
    in_arcs(j, M, hi, false);
    add(14, nm("c14", {j}), lo, Sense::GreaterEqual, 1.0 - M);
    add(15, nm("c15", {j}), hi, Sense::LessEqual, N2 - 1.0 + M);
  }
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId k = 1; k <= last; ++k) {
      if (k == i) continue;
      for (NodeId l = 1; l <= n; ++l) {
        if (l == i || l == k) continue;
        std::vector<MilpTerm> t{{u(l), 1.0}, {u(k), -1.0}, {p(i, l), -M}};
        pair_sum(i, k, l, -M, t);
        for (const DroneDelivery& d : by_launch[l])
          if (d.customer != i && d.customer != k && d.rendezvous != i && d.rendezvous != k) t.push_back({yv(d), -M});
        add(16, nm("c16", {i, k, l}), t, Sense::GreaterEqual, -3.0 * M);
      }
    }
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId k = 1; k <= last; ++k) {
      if (i == k) continue;
      const double tau = pb.truck_time(i, k);
      add(17, nm("c17", {i, k}), {{t(k), 1.0}, {r(i), -1.0}, {x(i, k), -M}}, Sense::GreaterEqual, tau - M);
      add(18, nm("c18", {i, k}), {{t(k), 1.0}, {r(i), -1.0}, {x(i, k), M}}, Sense::LessEqual, tau + M);
    }
  for (NodeId j = 1; j <= n; ++j) {
    if (!pb.eligible(j)) continue;
    for (NodeId i = 0; i <= n; ++i) {
      if (i == j) continue;
      std::vector<MilpTerm> lo{{tp(j), 1.0}, {r(i), -1.0}}, hi = lo;
      for (const DroneDelivery& d : by_launch[i])
        if (d.customer == j) {
          lo.push_back({yv(d), -M});
          hi.push_back({yv(d), M});
        }
      add(19, nm("c19", {j, i}), lo, Sense::GreaterEqual, pb.drone_time(i, j) - M);
      add(20, nm("c20", {j, i}), hi, Sense::LessEqual, pb.drone_time(i, j) + M);
    }
    for (NodeId k = 1; k <= last; ++k) {
      if (k == j) continue;
      std::vector<MilpTerm> lo{{tp(k), 1.0}, {rp(j), -1.0}}, hi = lo;
      for (const DroneDelivery& d : by_rendezvous[k])
        if (d.customer == j) {
          lo.push_back({yv(d), -M});
          hi.push_back({yv(d), M});
        }
      add(21, nm("c21", {j, k}), lo, Sense::GreaterEqual, pb.drone_time(j, k) - M);
      add(22, nm("c22", {j, k}), hi, Sense::LessEqual, pb.drone_time(j, k) + M);
    }
  }
  for (NodeId j = 1; j <= n; ++j) {
    std::vector<MilpTerm> lo{{tp(j), 1.0}, {rp(j), -1.0}}, hi = lo;
    y_sum(by_customer[j], -M, lo);
    y_sum(by_customer[j], M, hi);
    add(23, nm("c23", {j}), lo, Sense::GreaterEqual, -M);
    add(24, nm("c24", {j}), hi, Sense::LessEqual, M);
  }
  for (NodeId k = 1; k <= last; ++k) {
    for (int id : {25, 26}) {
      std::vector<MilpTerm> row{{id == 25 ? r(k) : rp(k), 1.0}, {id == 25 ? t(k) : tp(k), -1.0}};
      if (k <= n) y_sum(by_launch[k], -prm.launch_time, row);
      y_sum(by_rendezvous[k], -prm.retrieve_time - M, row);
      add(id, nm(id == 25 ? "c25" : "c26", {k}), row, Sense::GreaterEqual, -M);
    }
  }
  for (const DroneDelivery& d : deliveries) {
    const NodeId i = d.launch, j = d.customer, k = d.rendezvous;
    std::vector<MilpTerm> t;
    if (options_.literal_endurance) {
      t = {{rp(k), 1.0}, {rp(j), -1.0}, {yv(d), M}};
      if (k <= n)
        for (const DroneDelivery& e : by_launch[k])
          if (e.customer != i && e.customer != j && e.customer != k && e.rendezvous != i) t.push_back({yv(e), -prm.launch_time});
    } else {
      t = {{tp(k), 1.0}, {rp(j), -1.0}, {yv(d), M}};
    }
    add(27, nm("c27", {i, j, k}), t, Sense::LessEqual, prm.endurance + M - pb.drone_time(i, j));
  }
  for (NodeId k = 1; k <= last; ++k) {
    add(28, nm("c28", {k}), {{w(k), 1.0}}, Sense::GreaterEqual, 0.0);
    add(29, nm("c29", {k}), {{wp(k), 1.0}}, Sense::GreaterEqual, 0.0);
  }
  for (NodeId k = 1; k <= last; ++k) {
    add(30, nm("c30", {k}), {{w(k), 1.0}, {tp(k), -1.0}, {t(k), 1.0}}, Sense::GreaterEqual, 0.0);
    add(31, nm("c31", {k}), {{wp(k), 1.0}, {t(k), -1.0}, {tp(k), 1.0}}, Sense::GreaterEqual, 0.0);
  }
  add(32, "c32", {{w(0), 1.0}}, Sense::Equal, 0.0);
  add(33, "c33", {{wp(0), 1.0}}, Sense::Equal, 0.0);
  for (NodeId i = 0; i <= last; ++i) add(34, nm("c34", {i}), {{r(i), 1.0}, {rp(i), -1.0}}, Sense::Equal, 0.0);
  add(35, "c35", {{t(0), 1.0}}, Sense::Equal, 0.0);
  add(36, "c36", {{tp(0), 1.0}}, Sense::Equal, 0.0);
  add(37, "c37", {{r(0), 1.0}}, Sense::Equal, 0.0);
  add(38, "c38", {{rp(0), 1.0}}, Sense::Equal, 0.0);
}

MilpAssignment assign_variables(const MilpModel& model, const Solution& s) {
  const Problem& pb = model.problem();
  const CostParams& prm = pb.params();
  const int n = pb.n(), size = n + 2;
  auto in_range = [&](NodeId v) { return v >= 0 && v < size; };
  for (NodeId v : s.truck_tour)
    if (!in_range(v)) throw std::invalid_argument("node id " + std::to_string(v) + " out of range");
  for (const DroneDelivery& d : s.deliveries)
    if (!in_range(d.launch) || !in_range(d.customer) || !in_range(d.rendezvous))
      throw std::invalid_argument("delivery node out of range");

  MilpAssignment a;
  a.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(model.variables().size()));
  auto& v = a.values;
  const auto& td = s.truck_tour;
  for (std::size_t q = 1; q < td.size(); ++q) {
    const int id = model.x(td[q - 1], td[q]);
    if (id >= 0)
      v[id] += 1.0;
    else
      a.stray.push_back({nm("x", {td[q - 1], td[q]}), 1.0, 39});
  }
  for (const DroneDelivery& d : s.deliveries) {
    const int id = model.y(d.launch, d.customer, d.rendezvous);
    if (id >= 0)
      v[id] += 1.0;
    else
      a.stray.push_back({nm("y", {d.launch, d.customer, d.rendezvous}), 1.0, 40});
  }
  std::vector<int> pos(size, -1);
  for (std::size_t q = 0; q < td.size(); ++q) pos[td[q]] = static_cast<int>(q);
  for (NodeId i = 0; i < size; ++i) v[model.u(i)] = std::max(pos[i], 0);
  for (NodeId i = 0; i <= n; ++i)
    for (NodeId j = 1; j < size; ++j) {
      const int id = model.p(i, j);
      if (id < 0) continue;
      v[id] = i == 0 ? 1.0 : (pos[i] >= 0 && pos[j] >= 0 && pos[i] < pos[j]) ? 1.0 : 0.0;
    }

  // Timeline: the truck leaves the start depot at time 0; a launch adds s_L,
  // a rendezvous waits for the later vehicle then adds s_R.
  std::vector<double> t(size, 0.0), tp(size, 0.0), r(size, 0.0);
  std::vector<char> timed(s.deliveries.size(), 0);
  auto fly_out = [&](std::size_t d) {
    const DroneDelivery& dd = s.deliveries[d];
    const double at = r[dd.launch] + pb.drone_time(dd.launch, dd.customer);
    t[dd.customer] = tp[dd.customer] = r[dd.customer] = at;
    timed[d] = 1;
  };
  for (std::size_t q = 0; q < td.size(); ++q) {
    const NodeId k = td[q];
    t[k] = q == 0 ? 0.0 : r[td[q - 1]] + pb.truck_time(td[q - 1], k);
    tp[k] = t[k];
    bool rendezvous = false, launch = false;
    for (std::size_t d = 0; d < s.deliveries.size(); ++d) {
      const DroneDelivery& dd = s.deliveries[d];
      launch |= dd.launch == k;
      if (dd.rendezvous == k && !rendezvous) {
        rendezvous = true;
        fly_out(d);
        tp[k] = r[dd.customer] + pb.drone_time(dd.customer, k);
      }
    }
    if (q == 0)
      r[k] = 0.0;
    else if (rendezvous)
      r[k] = std::max(t[k], tp[k]) + prm.retrieve_time + (launch ? prm.launch_time : 0.0);
    else
      r[k] = t[k] + (launch ? prm.launch_time : 0.0);
  }
  for (std::size_t d = 0; d < s.deliveries.size(); ++d)
    if (!timed[d]) fly_out(d);
  for (NodeId i = 0; i < size; ++i) {
    v[model.t(i)] = t[i];
    v[model.tp(i)] = tp[i];
    v[model.r(i)] = v[model.rp(i)] = r[i];
    v[model.w(i)] = std::max(0.0, tp[i] - t[i]);
    v[model.wp(i)] = std::max(0.0, t[i] - tp[i]);
  }
  return a;
}

std::vector<ConstraintViolation> check_constraints(const MilpModel& model, const MilpAssignment& a) {
  std::vector<ConstraintViolation> out;
  const auto& v = a.values;
  for (const MilpRow& row : model.rows()) {
    double lhs = 0.0;
    for (const MilpTerm& t : row.terms) lhs += t.coef * v[t.var];
    double excess = 0.0;
    switch (row.sense) {
      case Sense::LessEqual: excess = lhs - row.rhs; break;
      case Sense::GreaterEqual: excess = row.rhs - lhs; break;
      case Sense::Equal: excess = std::abs(lhs - row.rhs); break;
    }
    if (excess > kMilpTolerance) out.push_back({row.id, row.name, excess});
  }
  const auto& vars = model.variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const MilpVariable& var = vars[i];
    if (var.domain == 0) continue;
    const double x = v[static_cast<Eigen::Index>(i)];
    double excess = std::max(var.lower - x, x - var.upper);
    if (var.kind == VarKind::Binary) excess = std::max(excess, std::abs(x - std::round(x)));
    if (excess > kMilpTolerance) out.push_back({var.domain, var.name, excess});
  }
  for (const StrayDecision& sd : a.stray) out.push_back({sd.domain, sd.name, sd.value});
  return out;
}

std::vector<int> violated_ids(const std::vector<ConstraintViolation>& violations) {
  std::vector<int> ids;
  for (const auto& cv : violations) ids.push_back(cv.id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

double objective_value(const MilpModel& model, const MilpAssignment& a) {
  double f = 0.0;
  for (const MilpTerm& t : model.objective()) f += t.coef * a.values[t.var];
  return f;
}

namespace {

void write_terms(std::ostream& out, const MilpModel& model, const std::vector<MilpTerm>& terms) {
  const auto& vars = model.variables();
  if (terms.empty()) {
    out << " 0 " << vars.front().name;
    return;
  }
  int on_line = 0;
  for (std::size_t q = 0; q < terms.size(); ++q) {
    const MilpTerm& t = terms[q];
    if (on_line == 8) {
      out << "\n   ";
      on_line = 0;
    }
    const double c = std::abs(t.coef);
    out << (t.coef < 0 ? " - " : q == 0 ? " " : " + ");
    if (c != 1.0) out << c << ' ';
    out << vars[t.var].name;
    ++on_line;
  }
}

}  // namespace

void write_lp(const MilpModel& model, std::ostream& out) {
  const Problem& pb = model.problem();
  out << std::setprecision(17);
  out << "\\ TSP-D min-cost model, " << pb.n() << " customers, instance " << pb.instance().id << "\n";
  out << "\\ big M = " << model.big_m() << "\n";
  out << "Minimize\n obj:";
  write_terms(out, model, model.objective());
  out << "\nSubject To\n";
  for (const MilpRow& row : model.rows()) {
    out << ' ' << row.name << ':';
    write_terms(out, model, row.terms);
    out << (row.sense == Sense::LessEqual ? " <= " : row.sense == Sense::GreaterEqual ? " >= " : " = ") << row.rhs
        << '\n';
  }
  out << "Bounds\n";
  for (const MilpVariable& var : model.variables()) {
    if (var.kind == VarKind::Binary) {
      if (var.lower == var.upper) out << ' ' << var.name << " = " << var.lower << '\n';
      continue;
    }
    if (std::isinf(var.lower) && std::isinf(var.upper))
      out << ' ' << var.name << " free\n";
    else if (std::isfinite(var.upper))
      out << ' ' << var.lower << " <= " << var.name << " <= " << var.upper << '\n';
  }
  out << "Binaries\n";
  int on_line = 0;
  for (const MilpVariable& var : model.variables()) {
    if (var.kind != VarKind::Binary) continue;
    out << ' ' << var.name;
    if (++on_line == 10) {
      out << '\n';
      on_line = 0;
    }
  }
  out << "\nEnd\n";
}

void write_lp(const Problem& pb, const std::string& path, MilpOptions options) {
  if (pb.n() > options.max_lp_customers)
    throw MilpTooLarge(pb.n(), milp_variable_count(pb), options.max_lp_customers);
  MilpModel model(pb, options);
  std::ostringstream text;
  write_lp(model, text);
  write_text(path, text.str());
}

}  // namespace tspd
