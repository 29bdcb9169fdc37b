#pragma once

#include "tspd/eval.hpp"
#include "tspd/model.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace tspd {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Customers uniform on [0, sqrt(area)]^2, depot at the origin, exactly
// round(fraction * n) customers drone-eligible.
Instance generate(int n, double area, double drone_eligible_fraction, std::uint64_t seed,
                  const CostParams& params = {}, std::string id = {});

std::string instance_to_text(const Instance& instance);
Instance instance_from_text(const std::string& text);
void save_instance(const Instance& instance, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

struct SolutionFile {
  std::string instance_id;
  Objective objective = Objective::MinCost;
  Solution solution;
  std::optional<Evaluation> costs;  // advisory; timeline is not stored
};

std::string solution_to_text(const std::string& instance_id, Objective objective, const Solution& solution,
                             const Evaluation* evaluation = nullptr);
SolutionFile solution_from_text(const std::string& text);
void save_solution(const std::filesystem::path& path, const std::string& instance_id, Objective objective,
                   const Solution& solution, const Evaluation* evaluation = nullptr);
SolutionFile load_solution(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace tspd
