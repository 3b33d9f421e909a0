#include <doctest.h>

#include "multifix/search.hpp"

using namespace multifix;

TEST_CASE("regime partition of the factor line") {
  CHECK(regime_for(Rational(0)) == Regime::Contraction);
  CHECK(regime_for(Rational(3, 8)) == Regime::Contraction);
  CHECK(regime_for(Rational(1, 2)) == Regime::OpenGap);
  CHECK(regime_for(Rational(2, 3)) == Regime::OpenGap);
  CHECK(regime_for(Rational(3, 4)) == Regime::Counterexample);
  CHECK(regime_for(Rational(99, 100)) == Regime::Counterexample);
  CHECK(regime_for(Rational(1)) == Regime::NonMlcp);
  CHECK(regime_for(Rational(7, 2)) == Regime::NonMlcp);
}

TEST_CASE("classify on the worked instances") {
  auto nadler = builtin_instance("nadler-gap");
  auto cn = classify(nadler.space, nadler.map);
  CHECK(cn.regime == Regime::Contraction);
  CHECK(cn.lambdas.lambda_min_mlc == Rational(1));
  CHECK(cn.lambdas.lambda_min_mlcp == Rational(3, 8));
  CHECK(cn.properties.fixed_points == std::vector<PointId>{0, 1});
  CHECK(cn.properties.prime_period_points.at(2).empty());
  CHECK(cn.properties.forming_triangle.holds);

  auto ex1 = builtin_instance("ex1");
  auto ce = classify(ex1.space, ex1.map);
  CHECK(ce.regime == Regime::Counterexample);
  CHECK(ce.properties.fixed_points.empty());
  CHECK(ce.properties.lemma1.antecedent);
  CHECK(ce.properties.lemma1.verdict);

  auto with_periods = classify(ex1.space, ex1.map, {3});
  CHECK(with_periods.properties.prime_period_points.at(3) ==
        std::vector<PointId>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("classify of a constant map") {
  auto space = gen_random_space(5, 3, 21);
  std::vector<PointSet> images(5, PointSet({2}));
  MultiMap map(5, std::move(images));
  auto c = classify(space, map);
  CHECK(c.regime == Regime::Contraction);
  CHECK(c.lambdas.lambda_min_mlcp == Rational(0));
  CHECK(c.properties.fixed_points == std::vector<PointId>{2});
}

TEST_CASE("hunt with zero instances yields empty findings") {
  GenConfig config;
  config.n_points = 4;
  config.count = 0;
  auto findings = hunt_open_problem(config, HuntOptions{});
  CHECK(findings.total == 0);
  for (auto c : findings.regime_counts) CHECK(c == 0);
  CHECK(findings.candidates.empty());
}

TEST_CASE("random hunt tallies every classified instance") {
  GenConfig config;
  config.n_points = 5;
  config.count = 300;
  config.seed = 99;
  auto findings = hunt_open_problem(config, HuntOptions{});
  CHECK(findings.total == 300);
  std::uint64_t sum = 0;
  for (auto c : findings.regime_counts) sum += c;
  CHECK(sum == 300);
  // Candidates only ever come from the filtered regime.
  for (const auto& c : findings.candidates) CHECK(c.regime == Regime::OpenGap);
}

TEST_CASE("exhaustive hunt over the 3-point uniform metric") {
  GenConfig config;
  config.n_points = 3;
  config.weight_max = 1;
  auto findings = hunt_open_problem(config, HuntOptions{true, CandidateFilter::All});
  CHECK(findings.total == 343);  // (2^3 - 1)^3 maps on the single space
  std::uint64_t sum = 0;
  for (auto c : findings.regime_counts) sum += c;
  CHECK(sum == 343);
  // On the uniform 3-space the triplet ratio is 0, 2/3, or 1: constant-image
  // maps (7), exactly-one-differing-pair maps (3 * 7 * 6), all-distinct maps
  // (7 * 6 * 5).
  CHECK(findings.regime_counts[static_cast<int>(Regime::Contraction)] == 7);
  CHECK(findings.regime_counts[static_cast<int>(Regime::OpenGap)] == 126);
  CHECK(findings.regime_counts[static_cast<int>(Regime::Counterexample)] == 0);
  CHECK(findings.regime_counts[static_cast<int>(Regime::NonMlcp)] == 210);
}

TEST_CASE("exhaustive hunt enforces caps and budget") {
  GenConfig config;
  config.n_points = 5;
  CHECK_THROWS_AS(hunt_open_problem(config, HuntOptions{true}), PreconditionError);

  config.n_points = 4;
  config.weight_max = 4;
  CHECK_THROWS_AS(hunt_open_problem(config, HuntOptions{true}), PreconditionError);

  config.weight_max = 3;
  HuntOptions small_budget{true, CandidateFilter::OpenGap, 1000};
  CHECK_THROWS_AS(hunt_open_problem(config, small_budget), PreconditionError);
}

TEST_CASE("ex1 classifies into the counterexample regime, never the gap") {
  auto ex1 = builtin_instance("ex1");
  auto c = classify(ex1.space, ex1.map);
  CHECK(c.regime == Regime::Counterexample);
  CHECK(c.lambdas.lambda_min_mlcp == Rational(3, 4));
}
