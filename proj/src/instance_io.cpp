#include "tspd/instance_io.hpp"

#include "tspd/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace tspd {

using nlohmann::json;
using nlohmann::ordered_json;

Instance generate(int n, double area, double fraction, std::uint64_t seed, const CostParams& params,
                  std::string id) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(area > 0.0)) throw std::invalid_argument("area must be positive");
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw std::invalid_argument("drone-eligible fraction must lie in [0, 1]");
  Rng rng(seed);
  const double side = std::sqrt(area);
  Instance inst;
  inst.n = n;
  inst.area = area;
  inst.params = params;
  inst.points.push_back({0.0, 0.0});
  for (int v = 1; v <= n; ++v) {
    double x = rng.uniform() * side;
    double y = rng.uniform() * side;
    inst.points.push_back({x, y});
  }
  inst.drone_eligible.assign(n + 2, false);
  const int eligible = static_cast<int>(std::lround(fraction * n));
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), 1);
  for (int i = 0; i < eligible; ++i) {
    std::size_t j = i + rng.below(n - i);
    std::swap(ids[i], ids[j]);
    inst.drone_eligible[ids[i]] = true;
  }
  if (id.empty()) {
    std::ostringstream os;
    os << "n" << n << "-a" << area << "-s" << seed;
    id = os.str();
  }
  inst.id = std::move(id);
  inst.check();
  return inst;
}

namespace {

// Field access that reports what is wrong with the file.
class Reader {
 public:
  Reader(const json& obj, std::string where) : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) throw FormatError("expected an object for " + where_);
  }

  const json& get(const std::string& key) {
    seen_.insert(key);
    auto it = obj_.find(key);
    if (it == obj_.end()) throw FormatError("missing field: " + key);
    return *it;
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  double number(const std::string& key) {
    const json& v = get(key);
    if (!v.is_number()) throw FormatError("field " + key + " must be a number");
    return v.get<double>();
  }

  std::int64_t integer(const std::string& key) {
    const json& v = get(key);
    if (!v.is_number_integer()) throw FormatError("field " + key + " must be an integer");
    return v.get<std::int64_t>();
  }

  std::string text(const std::string& key) {
    const json& v = get(key);
    if (!v.is_string()) throw FormatError("field " + key + " must be a string");
    return v.get<std::string>();
  }

  bool boolean(const std::string& key) {
    const json& v = get(key);
    if (!v.is_boolean()) throw FormatError("field " + key + " must be a boolean");
    return v.get<bool>();
  }

  const json& array(const std::string& key) {
    const json& v = get(key);
    if (!v.is_array()) throw FormatError("field " + key + " must be an array");
    return v;
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it)
      if (!seen_.count(it.key())) throw FormatError("unknown field: " + it.key() + " in " + where_);
  }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> seen_;
};

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed file: ") + e.what());
  }
}

ordered_json params_to_json(const CostParams& p) {
  ordered_json j;
  j["truck_cost"] = p.truck_cost;
  j["drone_cost"] = p.drone_cost;
  j["truck_wait_fee"] = p.truck_wait_fee;
  j["drone_wait_fee"] = p.drone_wait_fee;
  j["launch_time"] = p.launch_time;
  j["retrieve_time"] = p.retrieve_time;
  j["endurance"] = p.endurance;
  j["truck_speed"] = p.truck_speed;
  j["drone_speed"] = p.drone_speed;
  j["truck_metric"] = to_string(p.truck_metric);
  j["drone_metric"] = to_string(p.drone_metric);
  return j;
}

CostParams params_from_json(const json& obj) {
  Reader r(obj, "params");
  CostParams p;
  p.truck_cost = r.number("truck_cost");
  p.drone_cost = r.number("drone_cost");
  p.truck_wait_fee = r.number("truck_wait_fee");
  p.drone_wait_fee = r.number("drone_wait_fee");
  p.launch_time = r.number("launch_time");
  p.retrieve_time = r.number("retrieve_time");
  p.endurance = r.number("endurance");
  p.truck_speed = r.number("truck_speed");
  p.drone_speed = r.number("drone_speed");
  try {
    p.truck_metric = metric_from_string(r.text("truck_metric"));
    p.drone_metric = metric_from_string(r.text("drone_metric"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  r.finish();
  return p;
}

Point point_from_json(const json& obj, const std::string& where) {
  Reader r(obj, where);
  Point p{r.number("x"), r.number("y")};
  r.finish();
  return p;
}

}  // namespace

std::string instance_to_text(const Instance& inst) {
  ordered_json j;
  j["id"] = inst.id;
  j["n"] = inst.n;
  j["area"] = inst.area;
  j["params"] = params_to_json(inst.params);
  j["depot"] = {{"x", inst.points[0].x}, {"y", inst.points[0].y}};
  ordered_json customers = ordered_json::array();
  for (int v = 1; v <= inst.n; ++v) {
    ordered_json c;
    c["x"] = inst.points[v].x;
    c["y"] = inst.points[v].y;
    c["drone_eligible"] = static_cast<bool>(inst.drone_eligible[v]);
    customers.push_back(c);
  }
  j["customers"] = customers;
  return j.dump(1) + "\n";
}

Instance instance_from_text(const std::string& text) {
  json doc = parse(text);
  Reader r(doc, "instance");
  Instance inst;
  inst.id = r.text("id");
  inst.n = static_cast<int>(r.integer("n"));
  inst.area = r.number("area");
  inst.params = params_from_json(r.get("params"));
  inst.points.push_back(point_from_json(r.get("depot"), "depot"));
  const json& customers = r.array("customers");
  inst.drone_eligible.assign(customers.size() + 2, false);
  for (std::size_t c = 0; c < customers.size(); ++c) {
    Reader cr(customers[c], "customer");
    inst.points.push_back({cr.number("x"), cr.number("y")});
    inst.drone_eligible[c + 1] = cr.boolean("drone_eligible");
    cr.finish();
  }
  r.finish();
  if (static_cast<std::size_t>(inst.n) != customers.size())
    throw FormatError("field n does not match the number of customers");
  try {
    inst.check();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return inst;
}

std::string solution_to_text(const std::string& instance_id, Objective objective, const Solution& solution,
                             const Evaluation* evaluation) {
  ordered_json j;
  j["instance_id"] = instance_id;
  j["objective_kind"] = to_string(objective);
  j["truck_tour"] = solution.truck_tour;
  ordered_json dd = ordered_json::array();
  for (const DroneDelivery& d : solution.deliveries) dd.push_back({d.launch, d.customer, d.rendezvous});
  j["deliveries"] = dd;
  if (evaluation) {
    ordered_json c;
    c["truck_transport"] = evaluation->truck_transport_cost;
    c["drone_transport"] = evaluation->drone_transport_cost;
    c["truck_waiting"] = evaluation->truck_waiting_cost;
    c["drone_waiting"] = evaluation->drone_waiting_cost;
    c["total"] = evaluation->total_cost;
    c["completion_time"] = evaluation->completion_time;
    j["costs"] = c;
  } else {
    j["costs"] = nullptr;
  }
  return j.dump(1) + "\n";
}

SolutionFile solution_from_text(const std::string& text) {
  json doc = parse(text);
  Reader r(doc, "solution");
  SolutionFile out;
  out.instance_id = r.text("instance_id");
  try {
    out.objective = objective_from_string(r.text("objective_kind"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  for (const json& v : r.array("truck_tour")) {
    if (!v.is_number_integer()) throw FormatError("field truck_tour must hold integers");
    out.solution.truck_tour.push_back(v.get<int>());
  }
  for (const json& d : r.array("deliveries")) {
    if (!d.is_array() || d.size() != 3) throw FormatError("field deliveries must hold [launch, customer, rendezvous]");
    for (const json& v : d)
      if (!v.is_number_integer()) throw FormatError("field deliveries must hold integers");
    out.solution.deliveries.push_back({d[0].get<int>(), d[1].get<int>(), d[2].get<int>()});
  }
  const json& costs = r.get("costs");
  if (!costs.is_null()) {
    Reader cr(costs, "costs");
    Evaluation ev;
    ev.truck_transport_cost = cr.number("truck_transport");
    ev.drone_transport_cost = cr.number("drone_transport");
    ev.truck_waiting_cost = cr.number("truck_waiting");
    ev.drone_waiting_cost = cr.number("drone_waiting");
    ev.total_cost = cr.number("total");
    ev.completion_time = cr.number("completion_time");
    cr.finish();
    out.costs = ev;
  }
  r.finish();
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  write_text(path, instance_to_text(instance));
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_text(read_text(path)); }

void save_solution(const std::filesystem::path& path, const std::string& instance_id, Objective objective,
                   const Solution& solution, const Evaluation* evaluation) {
  write_text(path, solution_to_text(instance_id, objective, solution, evaluation));
}

SolutionFile load_solution(const std::filesystem::path& path) { return solution_from_text(read_text(path)); }

}  // namespace tspd
