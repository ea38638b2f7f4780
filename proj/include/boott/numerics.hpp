#pragma once

#include <functional>
#include <span>
#include <vector>

namespace boott {

/// Standard normal distribution function Phi(x). Absolute error below 1e-12.
/// Throws std::invalid_argument on non-finite input.
double normal_cdf(double x);

/// Inverse of normal_cdf on (0, 1). Rational initial guess refined by one
/// Newton step, so |normal_cdf(normal_quantile(p)) - p| <= 1e-10.
/// Throws std::domain_error for p outside (0, 1).
double normal_quantile(double p);

/// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of
/// `sorted_values` (ascending, duplicates allowed) and the reference CDF:
///   D = max_i max( i/n - F(x_(i)), F(x_(i)) - (i-1)/n ).
/// Throws std::invalid_argument on empty input.
double ks_distance(std::span<const double> sorted_values,
                   const std::function<double(double)>& cdf);

/// ks_distance against the standard normal CDF.
double ks_to_standard_normal(std::span<const double> sorted_values);

}  // namespace boott
