#include "boott/runner.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "boott/diagnostics.hpp"
#include "boott/errors.hpp"
#include "boott/numerics.hpp"

namespace boott {

namespace {

double quantile_sorted(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  const double rank = p * static_cast<double>(values.size());
  std::size_t idx = static_cast<std::size_t>(std::ceil(rank));
  if (idx == 0) idx = 1;
  if (idx > values.size()) idx = values.size();
  return values[idx - 1];
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

}  // namespace

SubcommandResult cmd_weights_check(const RunConfig& config) {
  const auto n_grid = config.get_u64_list("n_grid");
  if (n_grid.empty()) throw config_error("weights-check: n_grid is required");
  const std::uint64_t reps = config.get_u64("reps", 0);
  if (reps < 100) throw config_error("weights-check: reps must be >= 100");
  const BootstrapScheme scheme = config.scheme();
  const auto rows = m_n_decay_study(scheme, n_grid, reps, config.seed(),
                                    config.threads());
  ResultTable table({"n", "m", "mean_Vn2", "expected_Vn2", "Mn_p50", "Mn_p90",
                     "Mn_p99", "degenerate_count"});
  std::uint64_t degenerate_total = 0;
  for (const auto& row : rows) {
    table.add_row({u64(row.n), row.m > 0 ? u64(row.m) : "",
                   format_double(row.mean_v_n_sq),
                   row.expected_v_n_sq ? format_double(*row.expected_v_n_sq) : "",
                   format_double(row.mn_p50), format_double(row.mn_p90),
                   format_double(row.mn_p99), u64(row.degenerate_count)});
    degenerate_total += row.degenerate_count;
  }
  return {std::move(table), {{"weight_draws", degenerate_total}}};
}

SubcommandResult cmd_clt(const RunConfig& config) {
  const std::size_t n = config.get_u64("n", 0);
  if (n < 2) throw config_error("clt: n must be >= 2");
  ResultTable table({"row", "realization", "ks", "degenerate_count", "median_ks",
                     "frac_above_2x_threshold"});
  std::uint64_t degenerate_total = 0;
  if (config.get_string("paradigm", "on-weights") == "unconditional") {
    const auto dist = unconditional_distribution(
        config.generator(), config.scheme(), config.statistic(), n,
        config.get_u64("reps", 2000), config.seed(), config.threads());
    table.add_row({"realization", "0", format_double(dist.ks_to_normal),
                   u64(dist.degenerate_count), "", ""});
    table.add_row({"summary", "", "", "", format_double(dist.ks_to_normal), "0"});
    degenerate_total = dist.degenerate_count;
  } else {
    StudyConfig study;
    study.paradigm = config.paradigm();
    study.scheme = config.scheme();
    study.generator = config.generator();
    study.statistic = config.statistic();
    study.n = n;
    study.outer_reps = config.get_u64("outer_reps", 11);
    study.inner_reps = config.get_u64("inner_reps", 2000);
    study.ks_threshold = config.get_double("ks_threshold", 0.05);
    study.seed = config.seed();
    study.threads = config.threads();
    const ConditioningStudy result = run_conditioning_study(study);
    for (std::size_t i = 0; i < result.per_realization_ks.size(); ++i) {
      table.add_row({"realization", u64(i),
                     format_double(result.per_realization_ks[i]),
                     u64(result.degenerate_counts[i]), "", ""});
      degenerate_total += result.degenerate_counts[i];
    }
    table.add_row({"summary", "", "", "", format_double(result.median_ks),
                   format_double(result.frac_above_2x_threshold)});
  }
  return {std::move(table), {{"replicates", degenerate_total}}};
}

SubcommandResult cmd_negligibility(const RunConfig& config) {
  const std::size_t n = config.get_u64("n", 0);
  if (n < 2) throw config_error("negligibility: n must be >= 2");
  const BootstrapScheme scheme = config.scheme();
  const DataGenerator generator = config.generator();
  const std::uint64_t reps = config.get_u64("reps", 2000);
  Rng weight_rng(config.seed(), {0, static_cast<std::uint64_t>(Purpose::Weights)});
  const WeightVector w = draw_weights(scheme, n, weight_rng);
  const std::string probe = config.get_string("probe", "lindeberg");
  if (probe == "lindeberg") {
    auto epsilons = config.get_double_list("epsilon");
    if (epsilons.empty()) epsilons = {0.1, 0.25, 0.5, 1.0};
    const ProbeMode mode = config.statistic() == Statistic::TStarStar
                               ? ProbeMode::TStarStar
                               : ProbeMode::TStar;
    ResultTable table({"epsilon", "probe_estimate"});
    for (double eps : epsilons) {
      const double estimate = lindeberg_probe(w, generator, eps, reps, mode,
                                              config.seed(), config.threads());
      table.add_row({format_double(eps), format_double(estimate)});
    }
    return {std::move(table), {}};
  }
  if (probe == "variance-ratio") {
    const auto result =
        variance_ratio_probe(w, generator, reps, config.seed(), config.threads());
    ResultTable table({"dev_p50", "dev_p90", "dev_p99", "degenerate_count"});
    table.add_row({format_double(quantile_sorted(result.deviations, 0.50)),
                   format_double(quantile_sorted(result.deviations, 0.90)),
                   format_double(quantile_sorted(result.deviations, 0.99)),
                   u64(result.degenerate_count)});
    return {std::move(table), {{"replicates", result.degenerate_count}}};
  }
  throw config_error("negligibility: unknown probe '" + probe + "'");
}

SubcommandResult cmd_interval(const RunConfig& config) {
  const DataGenerator generator = config.generator();
  if (generator.law != DataLaw::UserEmpirical) {
    return cmd_coverage(config);
  }
  if (generator.dataset.size() < 2) {
    throw config_error("interval: dataset needs at least two values");
  }
  const Sample sample{std::vector<double>(generator.dataset)};
  if (!(sample.variance() > 0.0)) {
    throw experiment_error("interval: dataset has zero variance");
  }
  const BootstrapScheme scheme = config.scheme();
  const StatisticKind kind = config.statistic_kind();
  const std::uint64_t B = config.get_u64("B", 399);
  const double alpha = config.get_double("alpha", 0.95);
  const BootstrapQuantile bound =
      build_bound(sample, scheme, kind, B, alpha, config.seed(), config.threads());
  // Rearranged pivot: T_n(mu) <= C  <=>  mu >= mean - C * S_n / sqrt(n).
  const double mu_lower = sample.mean() -
                          bound.value * sample.sd() /
                              std::sqrt(static_cast<double>(sample.n()));
  // M_n spread of the same B weight draws (first attempts).
  std::vector<double> mn_values;
  mn_values.reserve(B);
  for (std::uint64_t b = 0; b < B; ++b) {
    Rng rng(config.seed(), {b, 0, static_cast<std::uint64_t>(Purpose::Weights)});
    const WeightVector w = draw_weights(scheme, sample.n(), rng);
    try {
      mn_values.push_back(max_negligibility(w));
    } catch (const degenerate_weights_error&) {
    }
  }
  ResultTable table({"n", "B", "alpha", "l", "kind", "critical_value",
                     "mu_lower_bound", "Mn_p50", "Mn_p90", "Mn_p99",
                     "degenerate_redraws"});
  table.add_row({u64(sample.n()), u64(bound.B), format_double(alpha), u64(bound.l),
                 u64(static_cast<std::uint64_t>(kind)),
                 format_double(bound.value), format_double(mu_lower),
                 format_double(quantile_sorted(mn_values, 0.50)),
                 format_double(quantile_sorted(mn_values, 0.90)),
                 format_double(quantile_sorted(mn_values, 0.99)),
                 u64(bound.degenerate_redraws)});
  return {std::move(table), {{"weight_redraws", bound.degenerate_redraws}}};
}

SubcommandResult cmd_coverage(const RunConfig& config) {
  const std::size_t n = config.get_u64("n", 0);
  if (n < 2) throw config_error("coverage: n must be >= 2");
  const CoverageResult result = coverage_experiment(
      config.generator(), config.scheme(), config.statistic_kind(), n,
      config.get_u64("B", 399), config.get_double("alpha", 0.95),
      config.get_u64("reps", 500), config.seed(), config.threads());
  ResultTable table({"kind", "n", "m_rule", "B", "alpha", "repetitions",
                     "empirical_coverage", "mean_quantile", "z_alpha",
                     "degenerate_redraws"});
  table.add_row({u64(static_cast<std::uint64_t>(config.statistic_kind())), u64(n),
                 config.scheme().kind == SchemeKind::Efron
                     ? config.scheme().m_rule.describe()
                     : "iid-positive",
                 u64(config.get_u64("B", 399)), format_double(result.nominal),
                 u64(result.repetitions), format_double(result.empirical),
                 format_double(result.mean_quantile), format_double(result.z_alpha),
                 u64(result.degenerate_redraws)});
  return {std::move(table), {{"weight_redraws", result.degenerate_redraws}}};
}

SubcommandResult cmd_fixed_n(const RunConfig& config) {
  const std::size_t n = config.get_u64("n", 50);
  if (n < 2) throw config_error("fixed-n: n must be >= 2");
  auto m_grid = config.get_u64_list("m_grid");
  if (m_grid.empty()) throw config_error("fixed-n: m_grid is required");
  const std::uint64_t reps = config.get_u64("reps", 100);
  if (reps < 1) throw config_error("fixed-n: reps must be >= 1");
  const DataGenerator generator = config.generator();
  Rng data_rng(config.seed(), {static_cast<std::uint64_t>(Purpose::Data)});
  const Sample sample = draw_sample(generator, n, data_rng);
  if (!(sample.variance() > 0.0)) {
    throw experiment_error("fixed-n: drawn sample is constant");
  }
  ResultTable table({"m", "rel_err_p50", "rel_err_p90", "degenerate_count"});
  std::uint64_t degenerate_total = 0;
  for (std::size_t gi = 0; gi < m_grid.size(); ++gi) {
    const std::uint64_t m = m_grid[gi];
    std::vector<double> rel_errors;
    std::uint64_t degenerate = 0;
    for (std::uint64_t r = 0; r < reps; ++r) {
      Rng rng(config.seed(), {static_cast<std::uint64_t>(gi), r,
                              static_cast<std::uint64_t>(Purpose::Weights)});
      const WeightVector w = draw_efron_weights(n, m, rng);
      const double boot_var = boot_sample_variance(sample, w);
      if (!(boot_var > 0.0)) {
        ++degenerate;
        continue;
      }
      rel_errors.push_back(std::fabs(boot_var - sample.variance()) /
                           sample.variance());
    }
    degenerate_total += degenerate;
    if (rel_errors.empty()) {
      table.add_row({u64(m), "", "", u64(degenerate)});
    } else {
      table.add_row({u64(m), format_double(quantile_sorted(rel_errors, 0.50)),
                     format_double(quantile_sorted(rel_errors, 0.90)),
                     u64(degenerate)});
    }
  }
  return {std::move(table), {{"weight_draws", degenerate_total}}};
}

int run_subcommand(const std::string& name, const RunConfig& config) {
  try {
    const std::string started = current_timestamp();
    SubcommandResult result = [&] {
      if (name == "weights-check") return cmd_weights_check(config);
      if (name == "clt") return cmd_clt(config);
      if (name == "negligibility") return cmd_negligibility(config);
      if (name == "interval") return cmd_interval(config);
      if (name == "fixed-n") return cmd_fixed_n(config);
      if (name == "coverage") return cmd_coverage(config);
      throw config_error("unknown subcommand '" + name + "'");
    }();
    const std::string out_path = config.require_string("out");
    const std::string format = config.get_string("format", "csv");
    if (format != "csv" && format != "json") {
      throw config_error("format must be csv or json");
    }
    write_result(result.table, out_path, format);
    write_manifest(config, out_path, started, current_timestamp(),
                   result.degenerate_counts);
    return 0;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const experiment_error& e) {
    std::cerr << "experiment error: " << e.what() << "\n";
    return 3;
  } catch (const degenerate_sample_error& e) {
    std::cerr << "experiment error: " << e.what() << "\n";
    return 3;
  } catch (const degenerate_weights_error& e) {
    std::cerr << "experiment error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace boott
