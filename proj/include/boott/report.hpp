#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boott/config.hpp"

namespace boott {

/// Shortest round-trip decimal rendering; '.' decimal point, no locale.
std::string format_double(double value);

/// Rectangular result table written verbatim to CSV or mirrored into JSON.
/// Cells are pre-rendered strings so both formats are byte-stable.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns);

  void add_row(std::vector<std::string> cells);
  std::string to_csv() const;
  std::string to_json() const;

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes the table to `path` in the requested format ("csv" | "json").
void write_result(const ResultTable& table, const std::string& path,
                  const std::string& format);

/// Writes `<result_path>.manifest.json` echoing the config, artifact version,
/// seed, wall-clock timestamps and per-study degenerate counts.
void write_manifest(const RunConfig& config, const std::string& result_path,
                    const std::string& started_at, const std::string& finished_at,
                    const std::vector<std::pair<std::string, std::uint64_t>>&
                        degenerate_counts);

std::string current_timestamp();

}  // namespace boott
