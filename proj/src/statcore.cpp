#include "boott/statcore.hpp"

#include <cmath>
#include <stdexcept>

#include "boott/errors.hpp"
#include "boott/sampling.hpp"

namespace boott {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("Sample: need at least two observations");
  }
  // Welford one-pass; stable for n up to the 1e6 range used in studies.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (double x : values_) {
    ++k;
    const double delta = x - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (x - mean);
  }
  mean_ = mean;
  variance_ = m2 / static_cast<double>(values_.size());
  if (variance_ < 0.0) variance_ = 0.0;
}

double Sample::sd() const { return std::sqrt(variance_); }

CenteredCoefficients center_weights(const WeightVector& w) {
  const std::size_t n = w.n();
  if (n < 2) throw std::invalid_argument("center_weights: need n >= 2");
  if (!(w.total_mass > 0.0)) {
    throw degenerate_weights_error("center_weights: zero total mass");
  }
  CenteredCoefficients c;
  c.a.resize(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  const double inv_m = 1.0 / w.total_mass;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = w.weights[i] * inv_m - inv_n;
    c.a[i] = a;
    const double sq = a * a;
    c.v_n_sq += sq;
    if (sq > c.max_a_sq) c.max_a_sq = sq;
  }
  return c;
}

double t_statistic(const Sample& s) {
  const double sd = s.sd();
  if (!(sd > 0.0)) throw degenerate_sample_error("t_statistic: constant sample");
  return std::sqrt(static_cast<double>(s.n())) * s.mean() / sd;
}

double boot_sample_variance(const Sample& s, const WeightVector& w) {
  if (w.n() != s.n()) {
    throw std::invalid_argument("boot_sample_variance: size mismatch");
  }
  if (!(w.total_mass > 0.0)) {
    throw degenerate_weights_error("boot_sample_variance: zero total mass");
  }
  const auto& x = s.values();
  const double inv_m = 1.0 / w.total_mass;
  double boot_mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    boot_mean += w.weights[i] * x[i];
  }
  boot_mean *= inv_m;
  double acc = 0.0;
  double comp = 0.0;  // Kahan compensation
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - boot_mean;
    const double term = w.weights[i] * d * d - comp;
    const double next = acc + term;
    comp = (next - acc) - term;
    acc = next;
  }
  const double v = acc * inv_m;
  return v > 0.0 ? v : 0.0;
}

BootTriple boot_t_statistics(const Sample& s, const WeightVector& w) {
  const double sd = s.sd();
  if (!(sd > 0.0)) {
    throw degenerate_sample_error("boot_t_statistics: constant sample");
  }
  const CenteredCoefficients c = center_weights(w);
  if (!(c.v_n_sq > 0.0)) {
    throw degenerate_weights_error("boot_t_statistics: V_n^2 = 0");
  }
  // Sum a_i (X_i - Xbar) equals sum a_i X_i since sum a_i = 0, with less
  // cancellation for large-mean data.
  const auto& x = s.values();
  const double xbar = s.mean();
  double num = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double term = c.a[i] * (x[i] - xbar) - comp;
    const double next = num + term;
    comp = (next - num) - term;
    num = next;
  }
  BootTriple out;
  out.numerator = num;
  out.boot_var = boot_sample_variance(s, w);
  const double sqrt_m = std::sqrt(w.total_mass);
  out.t_star = num / (sd * std::sqrt(c.v_n_sq));
  out.t_star_star_sn = num * sqrt_m / sd;
  if (out.boot_var > 0.0) {
    out.t_star_star = num * sqrt_m / std::sqrt(out.boot_var);
  }
  return out;
}

}  // namespace boott
