#pragma once

#include <span>
#include <string>

namespace tspd {

// Objective as a percentage of a reference objective.
double rho(double value, double reference);

// Throws std::invalid_argument on an empty input or a non-positive entry.
double geometric_mean(std::span<const double> values);
double arithmetic_mean(std::span<const double> values);

// Sample standard deviation as a percentage of the mean; 0 for one value.
double relative_std(std::span<const double> values);

// Fixed-point text with the given number of decimals.
std::string fixed(double value, int decimals = 2);

}  // namespace tspd
