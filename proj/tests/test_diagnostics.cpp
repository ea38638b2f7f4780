#include <doctest.h>

#include <cmath>
#include <vector>

#include "boott/diagnostics.hpp"
#include "boott/errors.hpp"

using namespace boott;

namespace {

WeightVector make_weights(std::vector<double> values, SchemeKind kind) {
  WeightVector w;
  w.weights = std::move(values);
  w.scheme = kind;
  for (double v : w.weights) w.total_mass += v;
  return w;
}

}  // namespace

TEST_CASE("max_negligibility hand cases") {
  // All mass on one index of n=2: a = (1/2, -1/2), both squares equal.
  CHECK(max_negligibility(make_weights({2.0, 0.0}, SchemeKind::Efron)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // n=3, w=(2,1,0): a = (1/3, 0, -1/3), M_n = (1/9)/(2/9) = 1/2.
  CHECK(max_negligibility(make_weights({2.0, 1.0, 0.0}, SchemeKind::Efron)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // n=4, w=(4,0,0,0): a = (3/4, -1/4, -1/4, -1/4), M_n = (9/16)/(12/16) = 3/4.
  CHECK(max_negligibility(make_weights({4.0, 0.0, 0.0, 0.0}, SchemeKind::Efron)) ==
        doctest::Approx(0.75).epsilon(1e-14));
  CHECK_THROWS_AS(max_negligibility(make_weights({1.0, 1.0}, SchemeKind::Efron)),
                  degenerate_weights_error);
}

TEST_CASE("max_negligibility respects its bounds and scale invariance") {
  Rng rng(Seed{11}, {0});
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(30);
    WeightVector w;
    try {
      w = draw_efron_weights(n, n, rng);
    } catch (...) {
      continue;
    }
    double mn;
    try {
      mn = max_negligibility(w);
    } catch (const degenerate_weights_error&) {
      continue;
    }
    CHECK(mn >= 1.0 / static_cast<double>(n) - 1e-12);
    CHECK(mn <= 1.0 + 1e-12);

    // Scaling weights and mass together leaves M_n unchanged.
    WeightVector scaled = w;
    for (auto& v : scaled.weights) v *= 7.0;
    scaled.total_mass *= 7.0;
    CHECK(max_negligibility(scaled) == doctest::Approx(mn).epsilon(1e-12));
  }
}

TEST_CASE("decay study reproduces the Efron second-moment identity") {
  BootstrapScheme scheme;
  scheme.m_rule = MassRule::parse("ratio:2");
  const std::vector<std::uint64_t> grid = {20, 80};
  const auto rows = m_n_decay_study(scheme, grid, 4000, Seed{21}, 2);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    REQUIRE(row.expected_v_n_sq.has_value());
    const double expected =
        (1.0 - 1.0 / static_cast<double>(row.n)) / static_cast<double>(row.m);
    CHECK(*row.expected_v_n_sq == doctest::Approx(expected).epsilon(1e-12));
    CHECK(row.mean_v_n_sq == doctest::Approx(expected).epsilon(0.05));
    CHECK(row.mn_p50 <= row.mn_p90);
    CHECK(row.mn_p90 <= row.mn_p99);
    CHECK(row.mn_p99 <= 1.0);
  }
  // M_n should shrink as n grows.
  CHECK(rows[1].mn_p50 < rows[0].mn_p50);
}

TEST_CASE("decay study for gamma weights reports no expected column") {
  BootstrapScheme scheme;
  scheme.kind = SchemeKind::IidPositive;
  const auto rows = m_n_decay_study(scheme, {30}, 500, Seed{22}, 1);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].expected_v_n_sq.has_value());
  CHECK(rows[0].degenerate_count == 0);  // continuous weights are never flat
}

TEST_CASE("decay study input validation") {
  BootstrapScheme scheme;
  CHECK_THROWS_AS(m_n_decay_study(scheme, {10}, 50, Seed{1}), config_error);
  CHECK(m_n_decay_study(scheme, {}, 500, Seed{1}).empty());
}

TEST_CASE("lindeberg probe is monotone in epsilon and bounded") {
  Rng rng(Seed{31}, {0});
  const WeightVector w = draw_efron_weights(40, 40, rng);
  DataGenerator gen;  // standard normal
  const double p_small = lindeberg_probe(w, gen, 0.1, 400, ProbeMode::TStar, Seed{32}, 2);
  const double p_mid = lindeberg_probe(w, gen, 0.5, 400, ProbeMode::TStar, Seed{32}, 2);
  const double p_large = lindeberg_probe(w, gen, 2.0, 400, ProbeMode::TStar, Seed{32}, 2);
  CHECK(p_small >= p_mid);
  CHECK(p_mid >= p_large);
  CHECK(p_small <= 1.0);
  CHECK(p_large >= 0.0);
  // At a huge threshold no summand can exceed it.
  CHECK(lindeberg_probe(w, gen, 1e6, 400, ProbeMode::TStar, Seed{32}, 2) == 0.0);
}

TEST_CASE("lindeberg probe works for the self-normalized denominator too") {
  Rng rng(Seed{33}, {0});
  const WeightVector w = draw_efron_weights(40, 40, rng);
  DataGenerator gen;
  const double p = lindeberg_probe(w, gen, 0.25, 400, ProbeMode::TStarStar, Seed{34}, 2);
  CHECK(p >= 0.0);
  CHECK(p <= 1.0);
  CHECK_THROWS_AS(lindeberg_probe(w, gen, 0.25, 50, ProbeMode::TStar, Seed{34}),
                  config_error);
}

TEST_CASE("lindeberg probe is deterministic for fixed seed and threads") {
  Rng rng(Seed{35}, {0});
  const WeightVector w = draw_efron_weights(25, 50, rng);
  DataGenerator gen;
  gen.law = DataLaw::ExpCentered;
  const double a = lindeberg_probe(w, gen, 0.3, 300, ProbeMode::TStar, Seed{36}, 1);
  const double b = lindeberg_probe(w, gen, 0.3, 300, ProbeMode::TStar, Seed{36}, 4);
  CHECK(a == b);
}

TEST_CASE("variance ratio probe concentrates near 0 when m is large") {
  Rng rng(Seed{41}, {0});
  DataGenerator gen;  // N(0,1): sigma^2 = 1
  // Large mass: S*^2/m should track sigma^2 V_n^2 closely.
  const WeightVector w_big = draw_efron_weights(200, 200 * 200, rng);
  const auto big = variance_ratio_probe(w_big, gen, 300, Seed{42}, 2);
  // Small mass with heavy atoms: deviation stays appreciable.
  const WeightVector w_small = draw_efron_weights(200, 20, rng);
  const auto small = variance_ratio_probe(w_small, gen, 300, Seed{42}, 2);
  CHECK(big.median() < 0.2);
  CHECK(big.median() < small.median());
}

TEST_CASE("variance ratio probe flags degenerate data") {
  Rng rng(Seed{43}, {0});
  const WeightVector w = draw_efron_weights(10, 10, rng);
  DataGenerator constant;
  constant.law = DataLaw::UserEmpirical;
  constant.dataset = {3.0};
  const auto res = variance_ratio_probe(w, constant, 120, Seed{44}, 1);
  CHECK(res.degenerate_count == 120);

  DataGenerator t2;
  t2.law = DataLaw::StudentT;
  t2.nu = 2.0;
  CHECK_THROWS_AS(variance_ratio_probe(w, t2, 120, Seed{44}), experiment_error);
}
