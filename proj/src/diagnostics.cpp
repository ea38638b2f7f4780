#include "boott/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boott/errors.hpp"
#include "boott/parallel.hpp"
#include "boott/statcore.hpp"

namespace boott {

namespace {

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  // Nearest-rank.
  const double rank = p * static_cast<double>(sorted.size());
  std::size_t idx = static_cast<std::size_t>(std::ceil(rank));
  if (idx == 0) idx = 1;
  if (idx > sorted.size()) idx = sorted.size();
  return sorted[idx - 1];
}

constexpr int kRetryCap = 10;

// Redraws on S_n = 0 up to the cap; returns nullopt when the cap is hit.
std::optional<Sample> draw_usable_sample(const DataGenerator& gen, std::size_t n,
                                         Rng& rng) {
  for (int attempt = 0; attempt <= kRetryCap; ++attempt) {
    Sample s = draw_sample(gen, n, rng);
    if (s.variance() > 0.0) return s;
  }
  return std::nullopt;
}

}  // namespace

double max_negligibility(const WeightVector& w) {
  const CenteredCoefficients c = center_weights(w);
  if (!(c.v_n_sq > 0.0)) {
    throw degenerate_weights_error("max_negligibility: V_n^2 = 0");
  }
  return c.max_a_sq / c.v_n_sq;
}

std::vector<DecayRow> m_n_decay_study(const BootstrapScheme& scheme,
                                      const std::vector<std::uint64_t>& n_grid,
                                      std::uint64_t reps, Seed seed,
                                      unsigned threads) {
  if (reps < 100) throw config_error("m_n_decay_study: reps must be >= 100");
  std::vector<DecayRow> rows;
  rows.reserve(n_grid.size());
  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    const std::uint64_t n = n_grid[gi];
    DecayRow row;
    row.n = n;
    std::vector<double> mn_values(reps, -1.0);
    std::vector<double> vnsq_values(reps, 0.0);
    parallel_for(reps, threads, [&](std::size_t r) {
      Rng rng(seed, {static_cast<std::uint64_t>(gi), r,
                     static_cast<std::uint64_t>(Purpose::Weights)});
      WeightVector w = draw_weights(scheme, n, rng);
      const CenteredCoefficients c = center_weights(w);
      vnsq_values[r] = c.v_n_sq;
      if (c.v_n_sq > 0.0) mn_values[r] = c.max_a_sq / c.v_n_sq;
    });
    std::vector<double> usable;
    usable.reserve(reps);
    double vn_sum = 0.0;
    for (std::uint64_t r = 0; r < reps; ++r) {
      vn_sum += vnsq_values[r];
      if (mn_values[r] >= 0.0) {
        usable.push_back(mn_values[r]);
      } else {
        ++row.degenerate_count;
      }
    }
    std::sort(usable.begin(), usable.end());
    row.mn_p50 = quantile_sorted(usable, 0.50);
    row.mn_p90 = quantile_sorted(usable, 0.90);
    row.mn_p99 = quantile_sorted(usable, 0.99);
    row.mean_v_n_sq = vn_sum / static_cast<double>(reps);
    if (scheme.kind == SchemeKind::Efron) {
      row.m = scheme.m_rule.eval(n);
      row.expected_v_n_sq = (1.0 - 1.0 / static_cast<double>(n)) /
                            static_cast<double>(row.m);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double lindeberg_probe(const WeightVector& w, const DataGenerator& generator,
                       double epsilon, std::uint64_t R, ProbeMode mode, Seed seed,
                       unsigned threads) {
  if (!(epsilon > 0.0)) throw config_error("lindeberg_probe: epsilon must be positive");
  if (R < 100) throw config_error("lindeberg_probe: R must be >= 100");
  const CenteredCoefficients c = center_weights(w);
  if (!(c.v_n_sq > 0.0)) {
    throw degenerate_weights_error("lindeberg_probe: degenerate weights");
  }
  const std::size_t n = w.n();
  // Per-replicate lists of exceeding indices; merged in index order afterwards.
  std::vector<std::vector<std::uint32_t>> exceed(R);
  std::vector<char> usable(R, 0);
  parallel_for(R, threads, [&](std::size_t r) {
    Rng rng(seed, {r, static_cast<std::uint64_t>(Purpose::Probe)});
    auto s = draw_usable_sample(generator, n, rng);
    if (!s) return;
    double denom;
    if (mode == ProbeMode::TStar) {
      denom = s->sd() * std::sqrt(c.v_n_sq);
    } else {
      const double boot_var = boot_sample_variance(*s, w);
      if (!(boot_var > 0.0)) return;
      denom = std::sqrt(boot_var / w.total_mass);
    }
    usable[r] = 1;
    const auto& x = s->values();
    const double bound = epsilon * denom;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::fabs(c.a[i] * x[i]) > bound) {
        exceed[r].push_back(static_cast<std::uint32_t>(i));
      }
    }
  });
  std::vector<std::uint64_t> counts(n, 0);
  std::uint64_t used = 0;
  for (std::uint64_t r = 0; r < R; ++r) {
    if (!usable[r]) continue;
    ++used;
    for (std::uint32_t i : exceed[r]) ++counts[i];
  }
  if (used == 0) throw experiment_error("lindeberg_probe: all replicates degenerate");
  std::uint64_t max_count = 0;
  for (std::uint64_t k : counts) max_count = std::max(max_count, k);
  return static_cast<double>(max_count) / static_cast<double>(used);
}

double VarianceRatioResult::median() const {
  if (deviations.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::vector<double> v = deviations;
  std::sort(v.begin(), v.end());
  return quantile_sorted(v, 0.5);
}

VarianceRatioResult variance_ratio_probe(const WeightVector& w,
                                         const DataGenerator& generator,
                                         std::uint64_t R, Seed seed,
                                         unsigned threads) {
  if (R < 100) throw config_error("variance_ratio_probe: R must be >= 100");
  if (!generator.has_finite_variance()) {
    throw experiment_error("variance_ratio_probe: generator has infinite variance");
  }
  const double sigma_sq = generator.known_variance();
  const CenteredCoefficients c = center_weights(w);
  if (!(c.v_n_sq > 0.0)) {
    throw degenerate_weights_error("variance_ratio_probe: degenerate weights");
  }
  const std::size_t n = w.n();
  std::vector<double> devs(R, -1.0);
  std::vector<char> degenerate(R, 0);
  parallel_for(R, threads, [&](std::size_t r) {
    Rng rng(seed, {r, static_cast<std::uint64_t>(Purpose::Probe), 2});
    Sample s = draw_sample(generator, n, rng);
    const double boot_var = boot_sample_variance(s, w);
    if (!(boot_var > 0.0)) {
      // S*^2 = 0 means the ratio is 0, i.e. deviation exactly 1.
      degenerate[r] = 1;
      devs[r] = 1.0;
      return;
    }
    const double ratio = (boot_var / w.total_mass) / (sigma_sq * c.v_n_sq);
    devs[r] = std::fabs(ratio - 1.0);
  });
  VarianceRatioResult out;
  out.deviations = std::move(devs);
  for (char d : degenerate) out.degenerate_count += d;
  return out;
}

}  // namespace boott
