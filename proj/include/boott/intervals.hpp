#pragma once

#include <cstdint>
#include <vector>

#include "boott/cltlab.hpp"
#include "boott/rng.hpp"
#include "boott/sampling.hpp"
#include "boott/statcore.hpp"

namespace boott {

/// The four bootstrapped-t replicate kinds used for critical values:
///   1: T* (scheme weights), 2: T**, 3: T**_{m_n,S_n}, 4: T* with i.i.d.
///   positive weights.
enum class StatisticKind : int { TStar = 1, TStarStar = 2, TStarStarSn = 3, TStarIid = 4 };

struct BootstrapQuantile {
  StatisticKind kind = StatisticKind::TStarStar;
  double alpha = 0.95;
  std::uint64_t B = 0;
  std::uint64_t l = 0;      // order-statistic index, 1-based
  double value = 0.0;       // l-th smallest replicate value
  std::uint64_t degenerate_redraws = 0;
};

/// l-th order statistic of the replicate values with l = floor(alpha * (B+1)).
/// Throws config_error naming the minimal feasible B when l is out of [1, B].
BootstrapQuantile bootstrap_quantile(std::vector<double> replicate_values,
                                     double alpha);

/// Draws B independent weight vectors on the fixed sample, computes the kind-s
/// statistic for each, and returns the bootstrap quantile of the B values.
/// Degenerate draws are redrawn up to a cap and counted.
BootstrapQuantile build_bound(const Sample& s, const BootstrapScheme& scheme,
                              StatisticKind kind, std::uint64_t B, double alpha,
                              Seed seed, unsigned threads = 0);

struct CoverageResult {
  double nominal = 0.0;
  double empirical = 0.0;
  std::uint64_t repetitions = 0;
  double mean_quantile = 0.0;
  double z_alpha = 0.0;
  std::uint64_t degenerate_redraws = 0;
};

/// Per repetition: fresh sample, fresh B weight draws, score 1(T_n <= C^{(B)}).
CoverageResult coverage_experiment(const DataGenerator& generator,
                                   const BootstrapScheme& scheme,
                                   StatisticKind kind, std::size_t n,
                                   std::uint64_t B, double alpha,
                                   std::uint64_t repetitions, Seed seed,
                                   unsigned threads = 0);

}  // namespace boott
