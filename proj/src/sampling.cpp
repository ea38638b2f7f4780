#include "boott/sampling.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "boott/errors.hpp"

namespace boott {

std::uint64_t MassRule::eval(std::uint64_t n) const {
  if (n == 0) throw config_error("m_rule: n must be positive");
  double m = 0.0;
  switch (kind) {
    case Kind::Fixed:
      m = value;
      break;
    case Kind::Ratio:
      m = value * static_cast<double>(n);
      break;
    case Kind::NLogN:
      m = std::ceil(value * static_cast<double>(n) * std::log(static_cast<double>(n)));
      break;
    case Kind::SqrtGrowth:
      m = std::ceil(static_cast<double>(n) * std::sqrt(static_cast<double>(n)));
      break;
  }
  if (!(m >= 1.0)) throw config_error("m_rule: m_n(" + std::to_string(n) + ") < 1");
  return static_cast<std::uint64_t>(m);
}

std::string MassRule::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Fixed: os << "fixed:" << value; break;
    case Kind::Ratio: os << "ratio:" << value; break;
    case Kind::NLogN: os << "nlogn:" << value; break;
    case Kind::SqrtGrowth: os << "sqrt-growth"; break;
  }
  return os.str();
}

MassRule MassRule::parse(const std::string& text) {
  MassRule rule;
  auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto need_arg = [&]() -> double {
    if (arg.empty()) throw config_error("m_rule '" + head + "' needs a numeric argument");
    try {
      return std::stod(arg);
    } catch (const std::exception&) {
      throw config_error("m_rule: bad numeric argument '" + arg + "'");
    }
  };
  if (head == "fixed") {
    rule.kind = Kind::Fixed;
    rule.value = need_arg();
  } else if (head == "ratio") {
    rule.kind = Kind::Ratio;
    rule.value = need_arg();
  } else if (head == "nlogn") {
    rule.kind = Kind::NLogN;
    rule.value = need_arg();
  } else if (head == "sqrt-growth") {
    rule.kind = Kind::SqrtGrowth;
    rule.value = 0.0;
  } else {
    throw config_error("unknown m_rule '" + text + "'");
  }
  return rule;
}

double DataGenerator::known_mean() const {
  switch (law) {
    case DataLaw::Normal:
      return mu;
    case DataLaw::ExpCentered:
    case DataLaw::StudentT:
    case DataLaw::TwoPoint:
      return 0.0;
    case DataLaw::UserEmpirical: {
      if (dataset.empty()) throw std::invalid_argument("empty user dataset");
      double s = 0.0;
      for (double x : dataset) s += x;
      return s / static_cast<double>(dataset.size());
    }
  }
  return 0.0;
}

bool DataGenerator::has_finite_variance() const {
  return !(law == DataLaw::StudentT && nu <= 2.0);
}

double DataGenerator::known_variance() const {
  switch (law) {
    case DataLaw::Normal:
      return sigma * sigma;
    case DataLaw::ExpCentered:
      return 1.0 / (rate * rate);
    case DataLaw::TwoPoint:
      return 1.0;
    case DataLaw::StudentT:
      if (nu <= 2.0) {
        throw experiment_error("StudentT(nu<=2) has infinite variance");
      }
      return nu / (nu - 2.0);
    case DataLaw::UserEmpirical: {
      const double m = known_mean();
      double s = 0.0;
      for (double x : dataset) s += (x - m) * (x - m);
      return s / static_cast<double>(dataset.size());
    }
  }
  return 0.0;
}

std::string DataGenerator::describe() const {
  std::ostringstream os;
  switch (law) {
    case DataLaw::Normal: os << "normal(" << mu << "," << sigma << ")"; break;
    case DataLaw::ExpCentered: os << "exp-centered(" << rate << ")"; break;
    case DataLaw::StudentT: os << "t:" << nu; break;
    case DataLaw::TwoPoint: os << "two-point"; break;
    case DataLaw::UserEmpirical: os << "csv[" << dataset.size() << "]"; break;
  }
  return os.str();
}

WeightVector draw_efron_weights(std::size_t n, std::uint64_t m, Rng& rng) {
  if (n == 0 || m == 0) {
    throw std::invalid_argument("draw_efron_weights: n and m must be positive");
  }
  WeightVector w;
  w.scheme = SchemeKind::Efron;
  w.weights.resize(n);
  std::int64_t remaining = static_cast<std::int64_t>(m);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double p = 1.0 / static_cast<double>(n - i);
    const std::int64_t k = remaining > 0 ? rng.binomial(remaining, p) : 0;
    w.weights[i] = static_cast<double>(k);
    remaining -= k;
  }
  w.weights[n - 1] = static_cast<double>(remaining);
  w.total_mass = static_cast<double>(m);
  return w;
}

WeightVector draw_iid_positive_weights(std::size_t n, const PositiveLaw& law, Rng& rng) {
  if (n == 0) throw std::invalid_argument("draw_iid_positive_weights: n must be positive");
  if (law.kind == PositiveLaw::Kind::Gamma &&
      (law.shape <= 0.0 || law.rate <= 0.0)) {
    throw std::invalid_argument("draw_iid_positive_weights: law must be strictly positive");
  }
  if (law.kind == PositiveLaw::Kind::Constant && !(law.constant > 0.0)) {
    throw std::invalid_argument("draw_iid_positive_weights: constant must be positive");
  }
  WeightVector w;
  w.scheme = SchemeKind::IidPositive;
  w.weights.resize(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = law.kind == PositiveLaw::Kind::Gamma
                         ? rng.gamma(law.shape, law.rate)
                         : law.constant;
    if (!(z > 0.0)) {
      throw std::logic_error("draw_iid_positive_weights: non-positive draw");
    }
    w.weights[i] = z;
    sum += z;
  }
  w.total_mass = sum;
  return w;
}

WeightVector draw_weights(const BootstrapScheme& scheme, std::size_t n, Rng& rng) {
  if (scheme.kind == SchemeKind::Efron) {
    return draw_efron_weights(n, scheme.m_rule.eval(n), rng);
  }
  return draw_iid_positive_weights(n, scheme.iid_law, rng);
}

Sample draw_sample(const DataGenerator& generator, std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("draw_sample: n must be positive");
  std::vector<double> x(n);
  switch (generator.law) {
    case DataLaw::Normal:
      for (auto& v : x) v = generator.mu + generator.sigma * rng.normal();
      break;
    case DataLaw::ExpCentered:
      for (auto& v : x) v = rng.exponential(generator.rate) - 1.0 / generator.rate;
      break;
    case DataLaw::StudentT:
      for (auto& v : x) v = rng.student_t(generator.nu);
      break;
    case DataLaw::TwoPoint:
      for (auto& v : x) v = rng.uniform01() < 0.5 ? -1.0 : 1.0;
      break;
    case DataLaw::UserEmpirical: {
      if (generator.dataset.empty()) {
        throw std::invalid_argument("draw_sample: empty user dataset");
      }
      const std::uint64_t k = generator.dataset.size();
      for (auto& v : x) v = generator.dataset[rng.uniform_below(k)];
      break;
    }
  }
  return Sample(std::move(x));
}

std::vector<double> read_csv_column(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<double> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && has_header) {
      first = false;
      continue;
    }
    first = false;
    if (line.empty()) continue;
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(line, &pos);
    } catch (const std::exception&) {
      throw std::runtime_error("bad value '" + line + "' in " + path);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace boott
