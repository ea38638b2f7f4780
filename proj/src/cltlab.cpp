#include "boott/cltlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "boott/errors.hpp"
#include "boott/numerics.hpp"
#include "boott/parallel.hpp"

namespace boott {

namespace {

constexpr int kRetryCap = 10;

std::optional<Sample> draw_usable_sample(const DataGenerator& gen, std::size_t n,
                                         Rng& rng) {
  for (int attempt = 0; attempt <= kRetryCap; ++attempt) {
    Sample s = draw_sample(gen, n, rng);
    if (s.variance() > 0.0) return s;
  }
  return std::nullopt;
}

// nullopt when the replicate is degenerate for the requested statistic.
std::optional<double> evaluate(Statistic statistic, const Sample& s,
                               const WeightVector& w) {
  try {
    const BootTriple t = boot_t_statistics(s, w);
    switch (statistic) {
      case Statistic::TStar:
        return t.t_star;
      case Statistic::TStarStar:
        return t.t_star_star;  // nullopt when S*^2 = 0
      case Statistic::TStarStarSn:
        return t.t_star_star_sn;
      case Statistic::ClassicalT:
        return t_statistic(s);
    }
  } catch (const degenerate_weights_error&) {
    return std::nullopt;
  } catch (const degenerate_sample_error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

EmpiricalDistribution finalize(std::vector<double> raw, std::uint64_t R) {
  EmpiricalDistribution out;
  out.replicates = R;
  out.values.reserve(raw.size());
  for (double v : raw) {
    if (std::isfinite(v)) {
      out.values.push_back(v);
    } else {
      ++out.degenerate_count;
    }
  }
  if (out.values.empty()) {
    throw experiment_error("all replicates degenerate");
  }
  std::sort(out.values.begin(), out.values.end());
  out.ks_to_normal = ks_to_standard_normal(out.values);
  return out;
}

constexpr double kDegenerate = std::numeric_limits<double>::quiet_NaN();

}  // namespace

EmpiricalDistribution conditional_on_weights(const WeightVector& w,
                                             const DataGenerator& generator,
                                             Statistic statistic, std::uint64_t R,
                                             Seed seed, unsigned threads) {
  if (statistic != Statistic::TStar && statistic != Statistic::TStarStar) {
    throw config_error("conditional_on_weights: statistic must be T* or T**");
  }
  if (R < 500) throw config_error("conditional_on_weights: R must be >= 500");
  const CenteredCoefficients c = center_weights(w);
  if (!(c.v_n_sq > 0.0)) {
    throw degenerate_weights_error("conditional_on_weights: degenerate weights");
  }
  std::vector<double> raw(R, kDegenerate);
  parallel_for(R, threads, [&](std::size_t r) {
    Rng rng(seed, {r, static_cast<std::uint64_t>(Purpose::Data)});
    auto s = draw_usable_sample(generator, w.n(), rng);
    if (!s) return;
    if (auto v = evaluate(statistic, *s, w)) raw[r] = *v;
  });
  return finalize(std::move(raw), R);
}

EmpiricalDistribution conditional_on_data(const Sample& s,
                                          const BootstrapScheme& scheme,
                                          Statistic statistic, std::uint64_t R,
                                          Seed seed, unsigned threads) {
  if (scheme.kind != SchemeKind::Efron) {
    throw experiment_error(
        "conditional_on_data: only the Efron scheme supports this paradigm");
  }
  if (statistic != Statistic::TStarStar && statistic != Statistic::TStarStarSn) {
    throw config_error("conditional_on_data: statistic must be T** or T**_Sn");
  }
  if (R < 500) throw config_error("conditional_on_data: R must be >= 500");
  if (!(s.variance() > 0.0)) {
    throw degenerate_sample_error("conditional_on_data: constant sample");
  }
  std::vector<double> raw(R, kDegenerate);
  parallel_for(R, threads, [&](std::size_t r) {
    Rng rng(seed, {r, static_cast<std::uint64_t>(Purpose::Weights)});
    WeightVector w = draw_weights(scheme, s.n(), rng);
    if (auto v = evaluate(statistic, s, w)) raw[r] = *v;
  });
  return finalize(std::move(raw), R);
}

EmpiricalDistribution unconditional_distribution(const DataGenerator& generator,
                                                 const BootstrapScheme& scheme,
                                                 Statistic statistic,
                                                 std::size_t n, std::uint64_t reps,
                                                 Seed seed, unsigned threads) {
  if (reps < 500) throw config_error("unconditional_distribution: reps must be >= 500");
  std::vector<double> raw(reps, kDegenerate);
  parallel_for(reps, threads, [&](std::size_t r) {
    Rng data_rng(seed, {r, static_cast<std::uint64_t>(Purpose::Data)});
    auto s = draw_usable_sample(generator, n, data_rng);
    if (!s) return;
    if (statistic == Statistic::ClassicalT) {
      raw[r] = t_statistic(*s);
      return;
    }
    Rng weight_rng(seed, {r, static_cast<std::uint64_t>(Purpose::Weights)});
    WeightVector w = draw_weights(scheme, n, weight_rng);
    if (auto v = evaluate(statistic, *s, w)) raw[r] = *v;
  });
  return finalize(std::move(raw), reps);
}

ConditioningStudy run_conditioning_study(const StudyConfig& config) {
  if (config.outer_reps < 1) {
    throw config_error("run_conditioning_study: outer_reps must be >= 1");
  }
  if (config.paradigm == Paradigm::OnWeights) {
    if (config.statistic != Statistic::TStar &&
        config.statistic != Statistic::TStarStar) {
      throw config_error(
          "run_conditioning_study: on-weights paradigm requires T* or T**");
    }
  } else {
    if (config.scheme.kind != SchemeKind::Efron) {
      throw config_error(
          "run_conditioning_study: on-data paradigm requires the Efron scheme");
    }
    if (config.statistic != Statistic::TStarStar &&
        config.statistic != Statistic::TStarStarSn) {
      throw config_error(
          "run_conditioning_study: on-data paradigm requires T** or T**_Sn");
    }
  }
  ConditioningStudy study;
  study.paradigm = config.paradigm;
  for (std::uint64_t o = 0; o < config.outer_reps; ++o) {
    const Seed inner_seed{derive_stream(
        config.seed, {o, static_cast<std::uint64_t>(Purpose::Outer)})};
    Rng outer_rng(config.seed, {o, static_cast<std::uint64_t>(Purpose::Outer), 1});
    try {
      EmpiricalDistribution dist;
      if (config.paradigm == Paradigm::OnWeights) {
        WeightVector w = draw_weights(config.scheme, config.n, outer_rng);
        dist = conditional_on_weights(w, config.generator, config.statistic,
                                      config.inner_reps, inner_seed, config.threads);
      } else {
        auto s = draw_usable_sample(config.generator, config.n, outer_rng);
        if (!s) continue;
        dist = conditional_on_data(*s, config.scheme, config.statistic,
                                   config.inner_reps, inner_seed, config.threads);
      }
      study.per_realization_ks.push_back(dist.ks_to_normal);
      study.degenerate_counts.push_back(dist.degenerate_count);
    } catch (const degenerate_weights_error&) {
      // Fixed realization unusable; not counted toward the median.
    } catch (const degenerate_sample_error&) {
    }
  }
  if (study.per_realization_ks.empty()) {
    throw experiment_error("run_conditioning_study: every realization degenerate");
  }
  std::vector<double> sorted = study.per_realization_ks;
  std::sort(sorted.begin(), sorted.end());
  study.median_ks = sorted[(sorted.size() - 1) / 2];
  std::size_t above = 0;
  for (double ks : sorted) {
    if (ks > 2.0 * config.ks_threshold) ++above;
  }
  study.frac_above_2x_threshold =
      static_cast<double>(above) / static_cast<double>(sorted.size());
  return study;
}

}  // namespace boott
