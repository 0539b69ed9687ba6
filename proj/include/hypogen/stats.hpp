#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace hypogen {

// Quantile function of the standard normal distribution.
// Rational approximation (Acklam) refined with one Halley step against
// erfc, giving relative error near machine epsilon (requirement: 1e-9).
// Throws std::domain_error unless 0 < p < 1.
double inverse_normal_cdf(double p);

double logistic(double x);  // 1 / (1 + exp(-x))

double mean(std::span<const double> xs);

// Population (divide-by-n) standard deviation.
double population_stddev(std::span<const double> xs);

// Pearson correlation coefficient. Throws std::domain_error when either
// series is constant (undefined) or sizes mismatch / < 2.
double pearson(std::span<const double> xs, std::span<const double> ys);

// FNV-1a 64-bit, used for config manifest hashes.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace hypogen
