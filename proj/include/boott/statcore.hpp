#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace boott {

struct WeightVector;

/// Ordered observations with cached mean and variance (denominator n).
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t n() const { return values_.size(); }
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double sd() const;

 private:
  std::vector<double> values_;
  double mean_ = 0.0;
  double variance_ = 0.0;
};

/// Coefficients a_i = w_i/m_n - 1/n together with their sum of squares and max.
struct CenteredCoefficients {
  std::vector<double> a;
  double v_n_sq = 0.0;   // sum of a_i^2
  double max_a_sq = 0.0;
};

CenteredCoefficients center_weights(const WeightVector& w);

/// Classical Student statistic sqrt(n) * mean / sd.
/// Throws degenerate_sample_error for a constant sample.
double t_statistic(const Sample& s);

/// Weighted bootstrap sample variance sum_i w_i (X_i - Xbar*)^2 / m_n with
/// Xbar* = sum_i w_i X_i / m_n.
double boot_sample_variance(const Sample& s, const WeightVector& w);

/// The three bootstrapped t-statistics computed from one (sample, weights) pair.
/// t_star_star is absent when the bootstrap sub-sample is degenerate (S*^2 = 0).
struct BootTriple {
  double t_star = 0.0;
  std::optional<double> t_star_star;
  double t_star_star_sn = 0.0;
  double boot_var = 0.0;   // S*^2_{m_n}
  double numerator = 0.0;  // sum_i a_i X_i
};

BootTriple boot_t_statistics(const Sample& s, const WeightVector& w);

}  // namespace boott
