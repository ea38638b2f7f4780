#pragma once

#include <cstdint>
#include <vector>

#include "boott/rng.hpp"
#include "boott/sampling.hpp"
#include "boott/statcore.hpp"

namespace boott {

enum class Statistic { TStar, TStarStar, TStarStarSn, ClassicalT };

/// Sorted replicate values of one statistic plus its KS distance to the
/// standard normal CDF.
struct EmpiricalDistribution {
  std::vector<double> values;  // sorted ascending, degenerate replicates excluded
  double ks_to_normal = 0.0;
  std::uint64_t degenerate_count = 0;
  std::uint64_t replicates = 0;  // requested R
};

/// Conditional-on-weights law: R fresh data samples with the weight vector
/// held fixed. Statistic must be TStar or TStarStar.
EmpiricalDistribution conditional_on_weights(const WeightVector& w,
                                             const DataGenerator& generator,
                                             Statistic statistic, std::uint64_t R,
                                             Seed seed, unsigned threads = 0);

/// Conditional-on-data law: R fresh Efron weight vectors with the sample held
/// fixed. Statistic must be TStarStar or TStarStarSn; the scheme must be Efron.
EmpiricalDistribution conditional_on_data(const Sample& s,
                                          const BootstrapScheme& scheme,
                                          Statistic statistic, std::uint64_t R,
                                          Seed seed, unsigned threads = 0);

/// Both sample and weights fresh on every replicate.
EmpiricalDistribution unconditional_distribution(const DataGenerator& generator,
                                                 const BootstrapScheme& scheme,
                                                 Statistic statistic,
                                                 std::size_t n, std::uint64_t reps,
                                                 Seed seed, unsigned threads = 0);

enum class Paradigm { OnWeights, OnData };

struct StudyConfig {
  Paradigm paradigm = Paradigm::OnWeights;
  BootstrapScheme scheme;
  DataGenerator generator;
  Statistic statistic = Statistic::TStar;
  std::size_t n = 100;
  std::uint64_t outer_reps = 11;
  std::uint64_t inner_reps = 2000;
  double ks_threshold = 0.05;
  Seed seed;
  unsigned threads = 0;
};

struct ConditioningStudy {
  Paradigm paradigm = Paradigm::OnWeights;
  std::vector<double> per_realization_ks;  // one entry per non-degenerate realization
  std::vector<std::uint64_t> degenerate_counts;
  double median_ks = 0.0;
  double frac_above_2x_threshold = 0.0;
};

/// outer_reps fixed realizations (weight vectors or samples, per paradigm),
/// inner_reps conditional replicates each.
ConditioningStudy run_conditioning_study(const StudyConfig& config);

}  // namespace boott
