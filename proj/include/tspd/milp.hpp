#pragma once

#include "tspd/model.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tspd {

// Constraint ids follow the printed formulation: the objective is 1, rows are
// 2 to 38 and variable domains 39 to 47.
struct MilpOptions {
  // Row 27 as printed (elapsed time from launch to the truck leaving the
  // rendezvous). When false, row 27 bounds the two flight legs only.
  bool literal_endurance = true;
  int max_lp_customers = 12;
};

enum class VarKind { Binary, Continuous };
enum class Sense { LessEqual, GreaterEqual, Equal };

struct MilpVariable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  double lower = 0.0;
  double upper = 0.0;
  int domain = 0;  // id of the domain constraint, 0 when unrestricted
};

struct MilpTerm {
  int var = 0;
  double coef = 0.0;
};

struct MilpRow {
  std::string name;
  int id = 0;
  std::vector<MilpTerm> terms;
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;
};

class MilpTooLarge : public std::runtime_error {
 public:
  MilpTooLarge(int customers, std::int64_t variables, int cap);
  std::int64_t variables() const { return variables_; }

 private:
  std::int64_t variables_;
};

// x, y, p, u and the per-node times t, t', r, r', w, w' as variables.
std::int64_t milp_variable_count(const Problem& problem);

class MilpModel {
 public:
  explicit MilpModel(const Problem& problem, MilpOptions options = {});

  const Problem& problem() const { return *problem_; }
  const MilpOptions& options() const { return options_; }
  double big_m() const { return big_m_; }
  const std::vector<MilpVariable>& variables() const { return vars_; }
  const std::vector<MilpRow>& rows() const { return rows_; }
  const std::vector<MilpTerm>& objective() const { return objective_; }

  // Variable index, or -1 when the model has no such variable.
  int index(const std::string& name) const;
  int x(NodeId i, NodeId j) const;
  int y(NodeId i, NodeId j, NodeId k) const;
  int p(NodeId i, NodeId j) const;
  int u(NodeId i) const { return node_base_ + 7 * i; }
  int t(NodeId i) const { return node_base_ + 7 * i + 1; }
  int tp(NodeId i) const { return node_base_ + 7 * i + 2; }
  int r(NodeId i) const { return node_base_ + 7 * i + 3; }
  int rp(NodeId i) const { return node_base_ + 7 * i + 4; }
  int w(NodeId i) const { return node_base_ + 7 * i + 5; }
  int wp(NodeId i) const { return node_base_ + 7 * i + 6; }

 private:
  int add_var(std::string name, VarKind kind, double lower, double upper, int domain);
  void build_variables();
  void build_rows();

  const Problem* problem_;
  MilpOptions options_;
  double big_m_ = 0.0;
  std::vector<MilpVariable> vars_;
  std::vector<MilpRow> rows_;
  std::vector<MilpTerm> objective_;
  std::vector<int> x_index_, p_index_;
  std::map<std::tuple<NodeId, NodeId, NodeId>, int> y_index_;
  std::map<std::string, int> by_name_;
  int node_base_ = 0;
};

// A decision the solution takes that has no variable in the model, e.g. a
// truck arc from a node to itself or a sortie outside the feasible set.
struct StrayDecision {
  std::string name;
  double value = 0.0;
  int domain = 0;
};

struct MilpAssignment {
  Eigen::VectorXd values;
  std::vector<StrayDecision> stray;
};

// Node ids must lie in 0..n+1; anything else about the solution may be wrong.
MilpAssignment assign_variables(const MilpModel& model, const Solution& solution);

struct ConstraintViolation {
  int id = 0;
  std::string name;
  double amount = 0.0;
};

inline constexpr double kMilpTolerance = 1e-6;

std::vector<ConstraintViolation> check_constraints(const MilpModel& model, const MilpAssignment& a);
// Sorted distinct ids of the violated constraints.
std::vector<int> violated_ids(const std::vector<ConstraintViolation>& violations);

double objective_value(const MilpModel& model, const MilpAssignment& a);

// CPLEX LP format.
void write_lp(const MilpModel& model, std::ostream& out);
// Refuses (MilpTooLarge) above options.max_lp_customers before building anything.
void write_lp(const Problem& problem, const std::string& path, MilpOptions options = {});

}  // namespace tspd
