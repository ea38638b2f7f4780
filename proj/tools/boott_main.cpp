#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "boott/config.hpp"
#include "boott/errors.hpp"
#include "boott/runner.hpp"

namespace {

struct FlagMap {
  std::string config_path;
  std::map<std::string, std::string> overrides;
};

void register_common(CLI::App* cmd, FlagMap& flags) {
  cmd->add_option("--config", flags.config_path, "experiment config file (key = value lines)");
  auto bind = [cmd, &flags](const std::string& flag, const std::string& key,
                            const std::string& help) {
    cmd->add_option_function<std::string>(
        flag, [&flags, key](const std::string& v) { flags.overrides[key] = v; }, help);
  };
  bind("--seed", "seed", "root seed (u64)");
  bind("--threads", "threads", "worker threads (0 = BOOT_T_THREADS or hardware)");
  bind("--out", "out", "result file path");
  bind("--format", "format", "csv|json");
  bind("--scheme", "scheme", "efron|gamma|custom-positive");
  bind("--generator", "generator", "normal|exp-centered|t:NU|two-point|csv:PATH");
  bind("--n", "n", "sample size");
  bind("--n-grid", "n_grid", "comma-separated sample sizes");
  bind("--m-rule", "m_rule", "fixed:m|ratio:c|nlogn:c|sqrt-growth");
  bind("--m-grid", "m_grid", "comma-separated m values (fixed-n)");
  bind("--B", "B", "bootstrap replicates per bound");
  bind("--alpha", "alpha", "nominal level in (0,1)");
  bind("--reps", "reps", "Monte Carlo repetitions");
  bind("--inner-reps", "inner_reps", "conditional replicates per realization");
  bind("--outer-reps", "outer_reps", "fixed realizations");
  bind("--epsilon", "epsilon", "comma-separated epsilon grid");
  bind("--kind", "kind", "statistic kind 1..4 (intervals)");
  bind("--paradigm", "paradigm", "on-weights|on-data|unconditional");
  bind("--statistic", "statistic", "t-star|t-star-star|t-star-star-sn|classical");
  bind("--probe", "probe", "lindeberg|variance-ratio");
  bind("--ks-threshold", "ks_threshold", "KS threshold for study summaries");
  bind("--csv-has-header", "csv_has_header", "true|false");
  bind("--gamma-shape", "gamma_shape", "shape of the i.i.d.-positive weight law");
  bind("--gamma-rate", "gamma_rate", "rate of the i.i.d.-positive weight law");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-bootstrap t-statistic experiment runner"};
  app.require_subcommand(1);

  FlagMap flags;
  const char* names[] = {"weights-check", "clt", "negligibility",
                         "interval",      "fixed-n", "coverage"};
  const char* helps[] = {
      "weight-moment oracles and M_n decay across an n grid",
      "conditional / unconditional CLT studies summarized by KS distance",
      "Lindeberg and variance-ratio probes for a fixed weight realization",
      "bootstrap-t bound for a dataset, or coverage for a generator",
      "fixed-n consistency of the bootstrap sample variance",
      "coverage of the bootstrap-t bound under a generator"};
  for (int i = 0; i < 6; ++i) {
    register_common(app.add_subcommand(names[i], helps[i]), flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    boott::RunConfig config = flags.config_path.empty()
                                  ? boott::RunConfig{}
                                  : boott::RunConfig::parse_file(flags.config_path);
    for (const auto& [key, value] : flags.overrides) config.set(key, value);
    return boott::run_subcommand(app.get_subcommands().front()->get_name(), config);
  } catch (const boott::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
