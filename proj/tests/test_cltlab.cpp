#include <doctest.h>

#include <cmath>
#include <vector>

#include "boott/cltlab.hpp"
#include "boott/errors.hpp"

using namespace boott;

TEST_CASE("conditional_on_weights validates its inputs") {
  Rng rng(Seed{51}, {0});
  const WeightVector w = draw_efron_weights(30, 30, rng);
  DataGenerator gen;
  CHECK_THROWS_AS(
      conditional_on_weights(w, gen, Statistic::ClassicalT, 600, Seed{52}),
      config_error);
  CHECK_THROWS_AS(
      conditional_on_weights(w, gen, Statistic::TStarStarSn, 600, Seed{52}),
      config_error);
  CHECK_THROWS_AS(conditional_on_weights(w, gen, Statistic::TStar, 100, Seed{52}),
                  config_error);
  WeightVector flat;
  flat.weights = std::vector<double>(30, 1.0);
  flat.total_mass = 30.0;
  CHECK_THROWS_AS(
      conditional_on_weights(flat, gen, Statistic::TStar, 600, Seed{52}),
      degenerate_weights_error);
}

TEST_CASE("conditional_on_weights is deterministic and thread-invariant") {
  Rng rng(Seed{53}, {0});
  const WeightVector w = draw_efron_weights(40, 80, rng);
  DataGenerator gen;
  const auto a = conditional_on_weights(w, gen, Statistic::TStar, 600, Seed{54}, 1);
  const auto b = conditional_on_weights(w, gen, Statistic::TStar, 600, Seed{54}, 4);
  CHECK(a.values == b.values);
  CHECK(a.ks_to_normal == b.ks_to_normal);
  CHECK(a.degenerate_count == b.degenerate_count);
}

TEST_CASE("conditional_on_weights approaches normal for well-spread weights") {
  // Large n, m = n: the conditional CLT regime.
  Rng rng(Seed{55}, {0});
  const WeightVector w = draw_efron_weights(400, 400, rng);
  DataGenerator gen;
  const auto dist = conditional_on_weights(w, gen, Statistic::TStar, 4000, Seed{56}, 2);
  CHECK(dist.ks_to_normal < 0.05);
  CHECK(dist.degenerate_count == 0);
}

TEST_CASE("KS distance is invariant to data location and scale given the seeds") {
  // T* is invariant under affine maps x -> a x + b with a > 0, so shifting the
  // generator must reproduce the replicate values exactly (same uniforms).
  Rng rng(Seed{57}, {0});
  const WeightVector w = draw_efron_weights(50, 100, rng);
  DataGenerator standard;
  DataGenerator shifted;
  shifted.mu = 10.0;
  shifted.sigma = 3.0;
  const auto a = conditional_on_weights(w, standard, Statistic::TStar, 600, Seed{58}, 2);
  const auto b = conditional_on_weights(w, shifted, Statistic::TStar, 600, Seed{58}, 2);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-9));
  }
}

TEST_CASE("conditional_on_data validation and determinism") {
  Rng rng(Seed{61}, {0});
  const Sample s = draw_sample(DataGenerator{}, 60, rng);
  BootstrapScheme efron;
  efron.m_rule = MassRule::parse("ratio:1");
  BootstrapScheme gamma;
  gamma.kind = SchemeKind::IidPositive;
  CHECK_THROWS_AS(
      conditional_on_data(s, gamma, Statistic::TStarStar, 600, Seed{62}),
      experiment_error);
  CHECK_THROWS_AS(conditional_on_data(s, efron, Statistic::TStar, 600, Seed{62}),
                  config_error);
  CHECK_THROWS_AS(
      conditional_on_data(s, efron, Statistic::TStarStar, 100, Seed{62}),
      config_error);
  CHECK_THROWS_AS(conditional_on_data(Sample({2.0, 2.0, 2.0}), efron,
                                      Statistic::TStarStar, 600, Seed{62}),
                  degenerate_sample_error);

  const auto a = conditional_on_data(s, efron, Statistic::TStarStar, 600, Seed{63}, 1);
  const auto b = conditional_on_data(s, efron, Statistic::TStarStar, 600, Seed{63}, 3);
  CHECK(a.values == b.values);
}

TEST_CASE("conditional_on_data T** and T**_Sn agree up to the variance ratio") {
  Rng rng(Seed{64}, {0});
  const Sample s = draw_sample(DataGenerator{}, 200, rng);
  BootstrapScheme efron;
  efron.m_rule = MassRule::parse("ratio:1");
  const auto t_ss = conditional_on_data(s, efron, Statistic::TStarStar, 2000, Seed{65}, 2);
  const auto t_sn = conditional_on_data(s, efron, Statistic::TStarStarSn, 2000, Seed{65}, 2);
  // Both should be near-normal at this size; the Sn variant only rescales by
  // S*/S_n which concentrates near 1.
  CHECK(t_ss.ks_to_normal < 0.06);
  CHECK(t_sn.ks_to_normal < 0.06);
}

TEST_CASE("unconditional classical t matches the normal for normal data") {
  const auto dist = unconditional_distribution(DataGenerator{}, BootstrapScheme{},
                                               Statistic::ClassicalT, 300, 4000,
                                               Seed{66}, 2);
  CHECK(dist.ks_to_normal < 0.03);
  CHECK_THROWS_AS(unconditional_distribution(DataGenerator{}, BootstrapScheme{},
                                             Statistic::ClassicalT, 300, 100, Seed{66}),
                  config_error);
}

TEST_CASE("run_conditioning_study validates paradigm/statistic pairs") {
  StudyConfig config;
  config.statistic = Statistic::TStarStarSn;  // not allowed on-weights
  CHECK_THROWS_AS(run_conditioning_study(config), config_error);
  config.paradigm = Paradigm::OnData;
  config.statistic = Statistic::TStar;  // not allowed on-data
  CHECK_THROWS_AS(run_conditioning_study(config), config_error);
  config.scheme.kind = SchemeKind::IidPositive;
  config.statistic = Statistic::TStarStar;
  CHECK_THROWS_AS(run_conditioning_study(config), config_error);
}

TEST_CASE("run_conditioning_study summarizes realizations deterministically") {
  StudyConfig config;
  config.paradigm = Paradigm::OnWeights;
  config.statistic = Statistic::TStar;
  config.scheme.m_rule = MassRule::parse("ratio:1");
  config.n = 80;
  config.outer_reps = 5;
  config.inner_reps = 600;
  config.seed = Seed{71};
  config.threads = 2;
  const auto study = run_conditioning_study(config);
  REQUIRE(study.per_realization_ks.size() == 5);
  for (double ks : study.per_realization_ks) {
    CHECK(ks > 0.0);
    CHECK(ks < 1.0);
  }
  // median_ks is one of the realizations.
  bool found = false;
  for (double ks : study.per_realization_ks) {
    if (ks == study.median_ks) found = true;
  }
  CHECK(found);
  CHECK(study.frac_above_2x_threshold >= 0.0);
  CHECK(study.frac_above_2x_threshold <= 1.0);

  config.threads = 4;
  const auto again = run_conditioning_study(config);
  CHECK(again.per_realization_ks == study.per_realization_ks);
  CHECK(again.median_ks == study.median_ks);
}
