#include "boott/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace boott {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream(Seed seed, std::initializer_list<std::uint64_t> labels) {
  std::uint64_t h = mix64(seed.root);
  for (std::uint64_t label : labels) {
    h = mix64(h ^ mix64(label));
  }
  return h;
}

double Rng::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below: bound must be positive");
  }
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = eng_();
    if (r >= threshold) return r % bound;
  }
}

double Rng::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  // Polar Box-Muller.
  for (;;) {
    const double u = 2.0 * uniform01() - 1.0;
    const double v = 2.0 * uniform01() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      const double factor = std::sqrt(-2.0 * std::log(s) / s);
      spare_normal_ = v * factor;
      has_spare_normal_ = true;
      return u * factor;
    }
  }
}

double Rng::exponential(double rate) {
  if (rate <= 0.0) {
    throw std::invalid_argument("exponential: rate must be positive");
  }
  for (;;) {
    const double u = uniform01();
    if (u > 0.0) return -std::log(u) / rate;
  }
}

double Rng::gamma(double shape, double rate) {
  if (shape <= 0.0 || rate <= 0.0) {
    throw std::invalid_argument("gamma: shape and rate must be positive");
  }
  if (shape < 1.0) {
    // Boost: G(a) = G(a+1) * U^{1/a}.
    const double g = gamma(shape + 1.0, 1.0);
    for (;;) {
      const double u = uniform01();
      if (u > 0.0) return g * std::pow(u, 1.0 / shape) / rate;
    }
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v / rate;
    }
  }
}

double Rng::student_t(double nu) {
  if (nu <= 0.0) {
    throw std::invalid_argument("student_t: nu must be positive");
  }
  const double z = normal();
  const double chi_sq = 2.0 * gamma(nu / 2.0, 1.0);
  return z / std::sqrt(chi_sq / nu);
}

std::int64_t Rng::binomial(std::int64_t trials, double p) {
  if (trials < 0 || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("binomial: invalid parameters");
  }
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (p > 0.5) return trials - binomial(trials, 1.0 - p);
  // Keep trials*p small enough that (1-p)^trials cannot underflow, splitting
  // the count in half otherwise.
  if (static_cast<double>(trials) * p > 64.0) {
    const std::int64_t half = trials / 2;
    return binomial(half, p) + binomial(trials - half, p);
  }
  // BINV inversion.
  const double q = 1.0 - p;
  const double s = p / q;
  const double a = static_cast<double>(trials + 1) * s;
  double f = std::pow(q, static_cast<double>(trials));
  double u = uniform01();
  std::int64_t k = 0;
  while (u > f) {
    u -= f;
    ++k;
    if (k > trials) {
      // Floating-point residue; redraw.
      k = 0;
      f = std::pow(q, static_cast<double>(trials));
      u = uniform01();
      continue;
    }
    f *= a / static_cast<double>(k) - s;
  }
  return k;
}

}  // namespace boott
