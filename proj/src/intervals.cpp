#include "boott/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "boott/errors.hpp"
#include "boott/numerics.hpp"
#include "boott/parallel.hpp"

namespace boott {

namespace {

constexpr int kRedrawCap = 10;

Statistic statistic_for(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::TStar:
    case StatisticKind::TStarIid:
      return Statistic::TStar;
    case StatisticKind::TStarStar:
      return Statistic::TStarStar;
    case StatisticKind::TStarStarSn:
      return Statistic::TStarStarSn;
  }
  throw config_error("unknown statistic kind");
}

std::optional<double> evaluate_kind(StatisticKind kind, const Sample& s,
                                    const WeightVector& w) {
  try {
    const BootTriple t = boot_t_statistics(s, w);
    switch (statistic_for(kind)) {
      case Statistic::TStar:
        return t.t_star;
      case Statistic::TStarStar:
        return t.t_star_star;
      case Statistic::TStarStarSn:
        return t.t_star_star_sn;
      default:
        return std::nullopt;
    }
  } catch (const degenerate_weights_error&) {
    return std::nullopt;
  }
}

}  // namespace

BootstrapQuantile bootstrap_quantile(std::vector<double> replicate_values,
                                     double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw config_error("bootstrap_quantile: alpha must lie in (0, 1)");
  }
  const std::uint64_t B = replicate_values.size();
  if (B < 1) throw config_error("bootstrap_quantile: need at least one replicate");
  const std::uint64_t l = static_cast<std::uint64_t>(
      std::floor(alpha * static_cast<double>(B + 1)));
  if (l < 1 || l > B) {
    const std::uint64_t min_b =
        static_cast<std::uint64_t>(std::ceil(1.0 / alpha - 1.0));
    throw config_error("bootstrap_quantile: l = floor(alpha(B+1)) = " +
                       std::to_string(l) + " infeasible; need B >= " +
                       std::to_string(min_b < 1 ? 1 : min_b));
  }
  std::sort(replicate_values.begin(), replicate_values.end());
  BootstrapQuantile q;
  q.alpha = alpha;
  q.B = B;
  q.l = l;
  q.value = replicate_values[l - 1];
  return q;
}

BootstrapQuantile build_bound(const Sample& s, const BootstrapScheme& scheme,
                              StatisticKind kind, std::uint64_t B, double alpha,
                              Seed seed, unsigned threads) {
  if (B < 19) throw config_error("build_bound: B must be >= 19");
  if (!(s.variance() > 0.0)) {
    throw degenerate_sample_error("build_bound: constant sample");
  }
  if (kind == StatisticKind::TStarIid && scheme.kind != SchemeKind::IidPositive) {
    throw config_error("build_bound: kind 4 requires i.i.d.-positive weights");
  }
  std::vector<double> values(B, 0.0);
  std::vector<std::uint64_t> redraws(B, 0);
  std::vector<char> failed(B, 0);
  parallel_for(B, threads, [&](std::size_t b) {
    for (int attempt = 0;; ++attempt) {
      Rng rng(seed, {b, static_cast<std::uint64_t>(attempt),
                     static_cast<std::uint64_t>(Purpose::Weights)});
      WeightVector w = draw_weights(scheme, s.n(), rng);
      if (auto v = evaluate_kind(kind, s, w)) {
        values[b] = *v;
        return;
      }
      ++redraws[b];
      if (attempt >= kRedrawCap) {
        failed[b] = 1;
        return;
      }
    }
  });
  std::uint64_t total_redraws = 0;
  for (std::uint64_t b = 0; b < B; ++b) {
    total_redraws += redraws[b];
    if (failed[b]) {
      throw experiment_error("build_bound: degenerate-draw cap exceeded");
    }
  }
  BootstrapQuantile q = bootstrap_quantile(std::move(values), alpha);
  q.kind = kind;
  q.degenerate_redraws = total_redraws;
  return q;
}

CoverageResult coverage_experiment(const DataGenerator& generator,
                                   const BootstrapScheme& scheme,
                                   StatisticKind kind, std::size_t n,
                                   std::uint64_t B, double alpha,
                                   std::uint64_t repetitions, Seed seed,
                                   unsigned threads) {
  if (repetitions < 100) {
    throw config_error("coverage_experiment: repetitions must be >= 100");
  }
  std::vector<char> covered(repetitions, 0);
  std::vector<double> quantiles(repetitions, 0.0);
  std::vector<std::uint64_t> redraws(repetitions, 0);
  parallel_for(repetitions, threads, [&](std::size_t r) {
    Rng data_rng(seed, {r, static_cast<std::uint64_t>(Purpose::Data)});
    Sample s = [&] {
      for (int attempt = 0; attempt < kRedrawCap; ++attempt) {
        Sample cand = draw_sample(generator, n, data_rng);
        if (cand.variance() > 0.0) return cand;
      }
      throw experiment_error("coverage_experiment: cannot draw usable sample");
    }();
    const Seed rep_seed{derive_stream(seed, {r, static_cast<std::uint64_t>(
                                                    Purpose::Outer)})};
    const BootstrapQuantile q = build_bound(s, scheme, kind, B, alpha, rep_seed, 1);
    quantiles[r] = q.value;
    redraws[r] = q.degenerate_redraws;
    covered[r] = t_statistic(s) <= q.value ? 1 : 0;
  });
  CoverageResult out;
  out.nominal = alpha;
  out.repetitions = repetitions;
  out.z_alpha = normal_quantile(alpha);
  std::uint64_t hits = 0;
  double sum_q = 0.0;
  for (std::uint64_t r = 0; r < repetitions; ++r) {
    hits += covered[r];
    sum_q += quantiles[r];
    out.degenerate_redraws += redraws[r];
  }
  out.empirical = static_cast<double>(hits) / static_cast<double>(repetitions);
  out.mean_quantile = sum_q / static_cast<double>(repetitions);
  return out;
}

}  // namespace boott
