#include "tspd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tspd {

double rho(double value, double reference) {
  if (!(reference > 0.0)) throw std::invalid_argument("reference value must be positive");
  return 100.0 * (value / reference);
}

double geometric_mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("geometric mean of nothing");
  double log_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0)) throw std::invalid_argument("geometric mean needs positive values");
    log_sum += std::log(v);
  }
  if (std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); })) return values.front();
  return std::exp(log_sum / static_cast<double>(values.size()));
}

double arithmetic_mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean of nothing");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double relative_std(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double mean = arithmetic_mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return 100.0 * std::sqrt(ss / static_cast<double>(values.size() - 1)) / mean;
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

}  // namespace tspd
