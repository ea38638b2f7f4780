#include "boott/config.hpp"

#include <fstream>
#include <sstream>

#include "boott/errors.hpp"

namespace boott {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str());
}

RunConfig RunConfig::parse_text(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw config_error("config line without '=': " + stripped);
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw config_error("config line with empty key: " + stripped);
    config.kv_[key] = value;
  }
  return config;
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  for (const auto& [key, value] : kv_) {
    out << key << " = " << value << "\n";
  }
  return out.str();
}

void RunConfig::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

bool RunConfig::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string RunConfig::get_string(const std::string& key,
                                  const std::string& fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

std::string RunConfig::require_string(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end() || it->second.empty()) {
    throw config_error("missing required config key '" + key + "'");
  }
  return it->second;
}

std::uint64_t RunConfig::get_u64(const std::string& key,
                                 std::uint64_t fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    throw config_error("key '" + key + "' is not an unsigned integer: " + it->second);
  }
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw config_error("key '" + key + "' is not a number: " + it->second);
  }
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  if (it->second == "true" || it->second == "1") return true;
  if (it->second == "false" || it->second == "0") return false;
  throw config_error("key '" + key + "' is not a boolean: " + it->second);
}

std::vector<std::uint64_t> RunConfig::get_u64_list(const std::string& key) const {
  std::vector<std::uint64_t> out;
  const std::string raw = get_string(key, "");
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string value = trim(item);
    if (value.empty()) continue;
    try {
      out.push_back(std::stoull(value));
    } catch (const std::exception&) {
      throw config_error("key '" + key + "' has a non-integer item: " + value);
    }
  }
  return out;
}

std::vector<double> RunConfig::get_double_list(const std::string& key) const {
  std::vector<double> out;
  const std::string raw = get_string(key, "");
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string value = trim(item);
    if (value.empty()) continue;
    try {
      out.push_back(std::stod(value));
    } catch (const std::exception&) {
      throw config_error("key '" + key + "' has a non-numeric item: " + value);
    }
  }
  return out;
}

BootstrapScheme RunConfig::scheme() const {
  BootstrapScheme scheme;
  const std::string name = get_string("scheme", "efron");
  if (name == "efron") {
    scheme.kind = SchemeKind::Efron;
  } else if (name == "gamma") {
    scheme.kind = SchemeKind::IidPositive;
    scheme.iid_law.kind = PositiveLaw::Kind::Gamma;
    scheme.iid_law.shape = get_double("gamma_shape", 4.0);
    scheme.iid_law.rate = get_double("gamma_rate", 1.0);
    if (scheme.iid_law.shape <= 0.0 || scheme.iid_law.rate <= 0.0) {
      throw config_error("gamma_shape and gamma_rate must be positive");
    }
  } else if (name == "custom-positive") {
    scheme.kind = SchemeKind::IidPositive;
    scheme.iid_law.kind = PositiveLaw::Kind::Constant;
    scheme.iid_law.constant = get_double("positive_constant", 1.0);
    if (!(scheme.iid_law.constant > 0.0)) {
      throw config_error("positive_constant must be positive");
    }
  } else {
    throw config_error("unknown scheme '" + name + "'");
  }
  scheme.m_rule = MassRule::parse(get_string("m_rule", "ratio:1"));
  return scheme;
}

DataGenerator RunConfig::generator() const {
  DataGenerator gen;
  const std::string name = get_string("generator", "normal");
  if (name == "normal") {
    gen.law = DataLaw::Normal;
    gen.mu = get_double("normal_mu", 0.0);
    gen.sigma = get_double("normal_sigma", 1.0);
  } else if (name == "exp-centered") {
    gen.law = DataLaw::ExpCentered;
    gen.rate = get_double("exp_rate", 1.0);
  } else if (name.rfind("t:", 0) == 0) {
    gen.law = DataLaw::StudentT;
    try {
      gen.nu = std::stod(name.substr(2));
    } catch (const std::exception&) {
      throw config_error("bad degrees of freedom in generator '" + name + "'");
    }
    if (gen.nu <= 0.0) throw config_error("generator t: nu must be positive");
  } else if (name == "two-point") {
    gen.law = DataLaw::TwoPoint;
  } else if (name.rfind("csv:", 0) == 0) {
    gen.law = DataLaw::UserEmpirical;
    gen.dataset = read_csv_column(name.substr(4), get_bool("csv_has_header", false));
    if (gen.dataset.empty()) throw config_error("empty dataset '" + name + "'");
  } else {
    throw config_error("unknown generator '" + name + "'");
  }
  return gen;
}

Statistic RunConfig::statistic() const {
  const std::string name = get_string("statistic", "t-star");
  if (name == "t-star") return Statistic::TStar;
  if (name == "t-star-star") return Statistic::TStarStar;
  if (name == "t-star-star-sn") return Statistic::TStarStarSn;
  if (name == "classical") return Statistic::ClassicalT;
  throw config_error("unknown statistic '" + name + "'");
}

StatisticKind RunConfig::statistic_kind() const {
  const std::uint64_t k = get_u64("kind", 2);
  if (k < 1 || k > 4) throw config_error("kind must be 1, 2, 3 or 4");
  return static_cast<StatisticKind>(static_cast<int>(k));
}

Paradigm RunConfig::paradigm() const {
  const std::string name = get_string("paradigm", "on-weights");
  if (name == "on-weights") return Paradigm::OnWeights;
  if (name == "on-data") return Paradigm::OnData;
  throw config_error("unknown paradigm '" + name + "'");
}

Seed RunConfig::seed() const { return Seed{get_u64("seed", 1)}; }

unsigned RunConfig::threads() const {
  return static_cast<unsigned>(get_u64("threads", 0));
}

}  // namespace boott
