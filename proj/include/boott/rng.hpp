#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace boott {

/// Root seed for a whole run. Replicate-level streams are derived from it by
/// hashing label tuples, so the draw sequence of any replicate is independent
/// of worker count and scheduling.
struct Seed {
  std::uint64_t root = 0;
};

/// Purpose tags keep weight, data and probe streams of the same replicate apart.
enum class Purpose : std::uint64_t {
  Weights = 1,
  Data = 2,
  Probe = 3,
  Outer = 4,
};

std::uint64_t mix64(std::uint64_t x);

/// Derives a stream key from (root, labels...). Identical inputs give
/// identical keys on every platform.
std::uint64_t derive_stream(Seed seed, std::initializer_list<std::uint64_t> labels);

/// Deterministic random generator over an mt19937_64 engine. All distributions
/// are implemented here (not via <random> distribution objects) so that a given
/// stream key produces the same sequence on any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t stream_key) : eng_(stream_key) {}
  Rng(Seed seed, std::initializer_list<std::uint64_t> labels)
      : eng_(derive_stream(seed, labels)) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform integer in [0, bound). bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

  double normal();
  double exponential(double rate = 1.0);

  /// Marsaglia-Tsang for shape >= 1; shape-boost for shape < 1. rate > 0.
  double gamma(double shape, double rate = 1.0);

  /// Student t with nu > 0 degrees of freedom.
  double student_t(double nu);

  /// Exact Binomial(trials, p) by inversion with recursive splitting, so the
  /// expected cost is O(trials * p) without tail underflow.
  std::int64_t binomial(std::int64_t trials, double p);

 private:
  std::mt19937_64 eng_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace boott
