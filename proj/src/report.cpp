#include "boott/report.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace boott {

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

ResultTable::ResultTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

void ResultTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) {
    throw std::logic_error("ResultTable: row width mismatch");
  }
  rows_.push_back(std::move(cells));
}

std::string ResultTable::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ',';
    out << columns_[i];
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string ResultTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["columns"] = columns_;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[columns_[i]] = row[i];
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

void write_result(const ResultTable& table, const std::string& path,
                  const std::string& format) {
  std::string body;
  if (format == "csv") {
    body = table.to_csv();
  } else if (format == "json") {
    body = table.to_json();
  } else {
    throw std::invalid_argument("unknown output format '" + format + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << body;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_manifest(const RunConfig& config, const std::string& result_path,
                    const std::string& started_at, const std::string& finished_at,
                    const std::vector<std::pair<std::string, std::uint64_t>>&
                        degenerate_counts) {
  nlohmann::ordered_json doc;
  doc["artifact_version"] = "1.0.0";
  doc["result_file"] = result_path;
  doc["seed"] = config.seed().root;
  doc["started_at"] = started_at;
  doc["finished_at"] = finished_at;
  nlohmann::ordered_json cfg;
  for (const auto& [key, value] : config.entries()) cfg[key] = value;
  doc["config"] = std::move(cfg);
  nlohmann::ordered_json degenerate;
  for (const auto& [name, count] : degenerate_counts) degenerate[name] = count;
  doc["degenerate_counts"] = std::move(degenerate);
  const std::string path = result_path + ".manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

std::string current_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace boott
