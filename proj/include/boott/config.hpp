#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boott/cltlab.hpp"
#include "boott/intervals.hpp"
#include "boott/sampling.hpp"

namespace boott {

/// Flat key=value experiment configuration. Keys are kept sorted, so
/// parse -> serialize -> parse is the identity.
class RunConfig {
 public:
  RunConfig() = default;

  static RunConfig parse_file(const std::string& path);
  static RunConfig parse_text(const std::string& text);
  std::string serialize() const;

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const { return kv_; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::string require_string(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::uint64_t> get_u64_list(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;

  // Domain-level views of the flat keys.
  BootstrapScheme scheme() const;           // scheme, m_rule, gamma_shape, gamma_rate
  DataGenerator generator() const;          // generator, csv_has_header
  Statistic statistic() const;              // statistic
  StatisticKind statistic_kind() const;     // kind (1..4)
  Paradigm paradigm() const;                // paradigm
  Seed seed() const;                        // seed
  unsigned threads() const;                 // threads (0 = resolve from env/hw)

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace boott
