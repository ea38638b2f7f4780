#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boott/rng.hpp"
#include "boott/statcore.hpp"

namespace boott {

enum class SchemeKind { Efron, IidPositive };

/// Non-negative bootstrap weights with total mass m_n. Efron weights are
/// integer counts stored as doubles; their sum equals m_n exactly.
struct WeightVector {
  std::vector<double> weights;
  double total_mass = 0.0;
  SchemeKind scheme = SchemeKind::Efron;

  std::size_t n() const { return weights.size(); }
};

/// m_n as a function of n. The presets name the sub-sample growth regimes the
/// experiments distinguish: fixed m, m = c*n, m = ceil(c * n * ln n), and
/// m = ceil(n * sqrt(n)) as an intermediate growth rate.
struct MassRule {
  enum class Kind { Fixed, Ratio, NLogN, SqrtGrowth };
  Kind kind = Kind::Ratio;
  double value = 1.0;  // fixed m, or the constant c

  std::uint64_t eval(std::uint64_t n) const;
  std::string describe() const;
  static MassRule parse(const std::string& text);  // "fixed:m" | "ratio:c" | "nlogn:c" | "sqrt-growth"
};

/// Strictly positive weight law: Gamma(shape, rate) or a degenerate constant.
struct PositiveLaw {
  enum class Kind { Gamma, Constant };
  Kind kind = Kind::Gamma;
  double shape = 4.0;
  double rate = 1.0;
  double constant = 1.0;
};

struct BootstrapScheme {
  SchemeKind kind = SchemeKind::Efron;
  MassRule m_rule;       // Efron only
  PositiveLaw iid_law;   // IidPositive only
};

enum class DataLaw { Normal, ExpCentered, StudentT, TwoPoint, UserEmpirical };

/// Generator of i.i.d. observations from the study's distribution families.
/// All built-in laws are centered, so the target mean is 0.
struct DataGenerator {
  DataLaw law = DataLaw::Normal;
  double mu = 0.0;       // Normal location
  double sigma = 1.0;    // Normal scale
  double rate = 1.0;     // ExpCentered
  double nu = 2.0;       // StudentT degrees of freedom
  std::vector<double> dataset;  // UserEmpirical

  double known_mean() const;
  /// True variance; throws experiment_error when the variance is infinite.
  double known_variance() const;
  bool has_finite_variance() const;
  std::string describe() const;
};

/// Multinomial(m; 1/n,...,1/n) counts by the sequential conditional-binomial
/// method. Exact; the integer sum is m on every draw.
WeightVector draw_efron_weights(std::size_t n, std::uint64_t m, Rng& rng);

/// i.i.d. positive weights; total_mass is the computed sum.
WeightVector draw_iid_positive_weights(std::size_t n, const PositiveLaw& law, Rng& rng);

/// Draws a weight vector according to the scheme, with m_n = m_rule(n) for Efron.
WeightVector draw_weights(const BootstrapScheme& scheme, std::size_t n, Rng& rng);

Sample draw_sample(const DataGenerator& generator, std::size_t n, Rng& rng);

/// One-column CSV of decimal reals; `has_header` skips the first line.
std::vector<double> read_csv_column(const std::string& path, bool has_header);

}  // namespace boott
