#include "boott/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace boott {

double normal_cdf(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("normal_cdf: non-finite input");
  }
  // erfc is accurate to a few ulp over the whole range, including deep tails.
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace {

// Rational approximation for the inverse normal CDF (relative error ~1e-9
// before refinement). Coefficients due to Acklam.
double inverse_cdf_estimate(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  if (p < p_low) {
    double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  double q = p - 0.5;
  double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  }
  double x = inverse_cdf_estimate(p);
  // One Newton step against normal_cdf pins the result well below 1e-10.
  double err = normal_cdf(x) - p;
  double density = normal_pdf(x);
  if (density > 0.0) {
    x -= err / density;
  }
  return x;
}

double ks_distance(std::span<const double> sorted_values,
                   const std::function<double(double)>& cdf) {
  if (sorted_values.empty()) {
    throw std::invalid_argument("ks_distance: empty sample");
  }
  const double n = static_cast<double>(sorted_values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_values.size(); ++i) {
    const double f = cdf(sorted_values[i]);
    const double upper = (static_cast<double>(i) + 1.0) / n - f;
    const double lower = f - static_cast<double>(i) / n;
    if (upper > d) d = upper;
    if (lower > d) d = lower;
  }
  return d;
}

double ks_to_standard_normal(std::span<const double> sorted_values) {
  return ks_distance(sorted_values, [](double x) { return normal_cdf(x); });
}

}  // namespace boott
