#pragma once

#include <string>

#include "boott/config.hpp"
#include "boott/report.hpp"

namespace boott {

struct SubcommandResult {
  ResultTable table;
  std::vector<std::pair<std::string, std::uint64_t>> degenerate_counts;
};

SubcommandResult cmd_weights_check(const RunConfig& config);
SubcommandResult cmd_clt(const RunConfig& config);
SubcommandResult cmd_negligibility(const RunConfig& config);
SubcommandResult cmd_interval(const RunConfig& config);
SubcommandResult cmd_fixed_n(const RunConfig& config);
SubcommandResult cmd_coverage(const RunConfig& config);

/// Dispatches, writes the result file and its manifest, and returns a process
/// exit code (0 ok, 2 config error, 3 experiment degeneracy, 4 I/O error).
int run_subcommand(const std::string& name, const RunConfig& config);

}  // namespace boott
