#include <doctest.h>

#include <cmath>
#include <vector>

#include "boott/errors.hpp"
#include "boott/sampling.hpp"
#include "boott/statcore.hpp"

using namespace boott;

namespace {

WeightVector make_weights(std::vector<double> values, SchemeKind kind) {
  WeightVector w;
  w.weights = std::move(values);
  w.scheme = kind;
  for (double v : w.weights) w.total_mass += v;
  return w;
}

// Independent oracle for S*^2: (m-1)/m times the m(m-1)-normalized
// U-statistic form over weighted pairs.
double boot_var_u_statistic(const Sample& s, const WeightVector& w) {
  const auto& x = s.values();
  const double m = w.total_mass;
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      const double d = x[i] - x[j];
      acc += w.weights[i] * w.weights[j] * d * d;
    }
  }
  return acc / (2.0 * m * m);
}

}  // namespace

TEST_CASE("sample caches mean and variance") {
  const Sample s({0.0, 1.0, 2.0});
  CHECK(s.mean() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.variance() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(Sample({1.0}), std::invalid_argument);
}

TEST_CASE("center_weights hand cases") {
  const auto c1 = center_weights(make_weights({2.0, 0.0}, SchemeKind::Efron));
  CHECK(c1.a[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c1.a[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(c1.v_n_sq == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c1.max_a_sq == doctest::Approx(0.25).epsilon(1e-14));

  const auto c2 = center_weights(make_weights({3.0, 3.0, 3.0}, SchemeKind::Efron));
  CHECK(c2.v_n_sq == doctest::Approx(0.0));

  const auto c3 = center_weights(make_weights({2.0, 1.0, 0.0}, SchemeKind::Efron));
  CHECK(c3.a[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(c3.a[1] == doctest::Approx(0.0));
  CHECK(c3.a[2] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(c3.v_n_sq == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

  double sum = 0.0;
  for (double a : c3.a) sum += a;
  CHECK(std::fabs(sum) < 1e-12 * 3);

  CHECK_THROWS_AS(center_weights(make_weights({0.0, 0.0}, SchemeKind::Efron)),
                  degenerate_weights_error);
}

TEST_CASE("classical t statistic") {
  CHECK(t_statistic(Sample({-1.0, 1.0})) == doctest::Approx(0.0));
  CHECK(t_statistic(Sample({0.0, 2.0})) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(t_statistic(Sample({3.0, 3.0, 3.0})), degenerate_sample_error);
  // Scale invariance.
  const Sample base({0.3, -1.2, 2.7, 0.4});
  std::vector<double> scaled;
  for (double x : base.values()) scaled.push_back(17.0 * x);
  CHECK(t_statistic(Sample(scaled)) ==
        doctest::Approx(t_statistic(base)).epsilon(1e-12));
}

TEST_CASE("boot_sample_variance hand case and U-statistic form") {
  const Sample s({0.0, 1.0, 2.0});
  const auto w = make_weights({2.0, 1.0, 0.0}, SchemeKind::Efron);
  const double v = boot_sample_variance(s, w);
  CHECK(v == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  CHECK(boot_var_u_statistic(s, w) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

  // All mass on one point: one-point bootstrap sample.
  CHECK(boot_sample_variance(s, make_weights({0.0, 3.0, 0.0}, SchemeKind::Efron)) ==
        doctest::Approx(0.0));
}

TEST_CASE("boot_t_statistics matches the hand-computed fixture") {
  const Sample s({0.0, 1.0, 2.0});
  const auto w = make_weights({2.0, 1.0, 0.0}, SchemeKind::Efron);
  const BootTriple t = boot_t_statistics(s, w);
  CHECK(std::fabs(t.numerator - (-2.0 / 3.0)) < 1e-12);
  CHECK(std::fabs(t.t_star - (-std::sqrt(3.0))) < 1e-12);
  REQUIRE(t.t_star_star.has_value());
  CHECK(std::fabs(*t.t_star_star - (-std::sqrt(6.0))) < 1e-12);
  CHECK(std::fabs(t.t_star_star_sn - (-std::sqrt(2.0))) < 1e-12);
  CHECK(std::fabs(t.boot_var - 2.0 / 9.0) < 1e-12);
}

TEST_CASE("degenerate bootstrap sub-sample leaves T* and T**_Sn defined") {
  const Sample s({1.0, -1.0});
  const auto w = make_weights({2.0, 0.0}, SchemeKind::Efron);
  const BootTriple t = boot_t_statistics(s, w);
  CHECK(std::fabs(t.t_star - std::sqrt(2.0)) < 1e-12);
  CHECK_FALSE(t.t_star_star.has_value());
  CHECK(t.boot_var == doctest::Approx(0.0));
}

TEST_CASE("degenerate inputs throw") {
  const Sample s({0.0, 1.0, 2.0});
  CHECK_THROWS_AS(boot_t_statistics(s, make_weights({1.0, 1.0, 1.0}, SchemeKind::Efron)),
                  degenerate_weights_error);
  CHECK_THROWS_AS(boot_t_statistics(Sample({5.0, 5.0}),
                                    make_weights({2.0, 0.0}, SchemeKind::Efron)),
                  degenerate_sample_error);
}

TEST_CASE("algebraic invariants over random instances") {
  Rng rng(Seed{1234}, {0});
  int checked_t_ss = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(49);
    std::vector<double> x(n);
    for (auto& v : x) v = 3.0 * rng.normal() + 0.5;
    const Sample s(x);
    if (!(s.variance() > 0.0)) continue;
    const WeightVector w = trial % 2 == 0
                               ? draw_efron_weights(n, n + rng.uniform_below(3 * n), rng)
                               : draw_iid_positive_weights(n, PositiveLaw{}, rng);
    BootTriple base;
    try {
      base = boot_t_statistics(s, w);
    } catch (const degenerate_weights_error&) {
      continue;
    }

    // Translation invariance.
    std::vector<double> shifted(x);
    for (auto& v : shifted) v += 123.456;
    const BootTriple t_shift = boot_t_statistics(Sample(shifted), w);
    CHECK(t_shift.t_star ==
          doctest::Approx(base.t_star).epsilon(1e-8));
    CHECK(t_shift.t_star_star_sn ==
          doctest::Approx(base.t_star_star_sn).epsilon(1e-8));

    // Positive-scale equivariance.
    std::vector<double> scaled(x);
    for (auto& v : scaled) v *= 2.5;
    const BootTriple t_scale = boot_t_statistics(Sample(scaled), w);
    CHECK(t_scale.t_star == doctest::Approx(base.t_star).epsilon(1e-9));
    CHECK(t_scale.t_star_star_sn ==
          doctest::Approx(base.t_star_star_sn).epsilon(1e-9));
    CHECK(t_scale.boot_var ==
          doctest::Approx(2.5 * 2.5 * base.boot_var).epsilon(1e-9));

    // Sign flip.
    std::vector<double> negated(x);
    for (auto& v : negated) v = -v;
    const BootTriple t_neg = boot_t_statistics(Sample(negated), w);
    CHECK(t_neg.t_star == doctest::Approx(-base.t_star).epsilon(1e-9));

    // Definitional vs U-statistic agreement for S*^2.
    const double u_form = boot_var_u_statistic(s, w);
    if (base.boot_var > 1e-12) {
      CHECK(u_form == doctest::Approx(base.boot_var).epsilon(1e-9));
    }

    // T**_Sn = (S*/S_n) T**.
    if (base.t_star_star.has_value() && base.boot_var > 0.0) {
      const double implied =
          std::sqrt(base.boot_var) / s.sd() * (*base.t_star_star);
      CHECK(base.t_star_star_sn == doctest::Approx(implied).epsilon(1e-9));
      ++checked_t_ss;
    }
  }
  CHECK(checked_t_ss > 900);  // nearly every instance is non-degenerate
}
