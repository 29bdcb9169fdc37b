#pragma once

#include "tspd/instance_io.hpp"
#include "tspd/model.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

namespace fixtures {

inline tspd::Instance make_instance(const std::vector<tspd::Point>& points, const std::vector<tspd::NodeId>& eligible,
                                    tspd::CostParams params = {}) {
  tspd::Instance inst;
  inst.id = "fixture";
  inst.n = static_cast<int>(points.size()) - 1;
  inst.area = 100.0;
  inst.points = points;
  inst.drone_eligible.assign(inst.n + 2, false);
  for (tspd::NodeId v : eligible) inst.drone_eligible[v] = true;
  inst.params = params;
  return inst;
}

inline tspd::CostParams no_service() {
  tspd::CostParams p;
  p.launch_time = 0.0;
  p.retrieve_time = 0.0;
  return p;
}

// depot (0,0), customers (1,0), (1.5,2), (3,0)
inline tspd::Instance four_node(tspd::CostParams params = no_service(), std::vector<tspd::NodeId> eligible = {1, 2, 3}) {
  return make_instance({{0, 0}, {1, 0}, {1.5, 2}, {3, 0}}, eligible, params);
}

inline tspd::Instance collinear(tspd::CostParams params = no_service()) {
  return make_instance({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {1, 2, 3}, params);
}

inline tspd::Instance random_instance(int n, std::uint64_t seed, double area = 100.0, double fraction = 0.8,
                                      tspd::CostParams params = {}) {
  return tspd::generate(n, area, fraction, seed, params);
}

// Fresh, empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("tspd_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fixtures
