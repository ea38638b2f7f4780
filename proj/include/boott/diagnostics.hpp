#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boott/rng.hpp"
#include "boott/sampling.hpp"

namespace boott {

/// Maximal-negligibility ratio M_n = max_i a_i^2 / sum_i a_i^2, in [1/n, 1].
/// Throws degenerate_weights_error when V_n^2 = 0.
double max_negligibility(const WeightVector& w);

struct DecayRow {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double mn_p50 = 0.0;
  double mn_p90 = 0.0;
  double mn_p99 = 0.0;
  double mean_v_n_sq = 0.0;
  std::optional<double> expected_v_n_sq;  // (1-1/n)/m_n, Efron only
  std::uint64_t degenerate_count = 0;
};

/// Quantiles of M_n and the mean of V_n^2 across `reps` weight draws for each n
/// in the grid. Draws with V_n^2 = 0 are excluded and counted.
std::vector<DecayRow> m_n_decay_study(const BootstrapScheme& scheme,
                                      const std::vector<std::uint64_t>& n_grid,
                                      std::uint64_t reps, Seed seed,
                                      unsigned threads = 0);

enum class ProbeMode { TStar, TStarStar };

/// Estimate of max_i P_{X|v}( V_{i,n} / denom > epsilon ) with the weights held
/// fixed, where V_{i,n} = |a_i X_i| and denom is S_n * V_n (TStar) or
/// S*_{m_n} / sqrt(m_n) (TStarStar). R fresh data samples; samples with
/// S_n = 0 are redrawn up to 10 times before the replicate counts as degenerate.
double lindeberg_probe(const WeightVector& w, const DataGenerator& generator,
                       double epsilon, std::uint64_t R, ProbeMode mode, Seed seed,
                       unsigned threads = 0);

struct VarianceRatioResult {
  std::vector<double> deviations;  // |(S*^2/m_n)/(sigma^2 V_n^2) - 1| per replicate
  std::uint64_t degenerate_count = 0;
  double median() const;
};

/// Distribution of the variance-ratio deviation over R fresh data draws with
/// the weights fixed. Requires a generator with finite known variance.
VarianceRatioResult variance_ratio_probe(const WeightVector& w,
                                         const DataGenerator& generator,
                                         std::uint64_t R, Seed seed,
                                         unsigned threads = 0);

}  // namespace boott
