#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "multifix/analysis.hpp"
#include "multifix/generator.hpp"
#include "multifix/instance_io.hpp"

namespace multifix {

// Classification by the minimal perimeter factor: below 1/2 the fixed-point
// guarantee applies; [1/2, 3/4) is unresolved; [3/4, 1) admits fixed-point
// free maps; >= 1 the perimeter condition fails for every lambda.
enum class Regime : int {
  Contraction = 0,
  OpenGap = 1,
  Counterexample = 2,
  NonMlcp = 3,
};

inline constexpr std::size_t kRegimeCount = 4;

std::string_view regime_name(Regime r);
Regime regime_for(const Rational& lambda_min_perimeter);

struct LambdaReport {
  Rational lambda_min_mlc;
  Rational lambda_min_mlcp;
  PairWitness mlc_witness;
  TripletWitness mlcp_witness;
};

struct PropertyReport {
  std::vector<PointId> fixed_points;
  // Keyed by requested period; 2 is always present.
  std::map<std::size_t, std::vector<PointId>> prime_period_points;
  FormingTriangle forming_triangle;
  Lemma1Report lemma1;
};

struct ClassifiedInstance {
  LambdaReport lambdas;
  PropertyReport properties;
  Regime regime = Regime::NonMlcp;
};

// Runs every decider on one pair: both minimal factors with witnesses, fixed
// points, prime periods (2 plus any extras), forming-triangle, the
// implication check, and the regime. Needs |X| >= 3.
ClassifiedInstance classify(const FiniteMetricSpace& space, const MultiMap& map,
                            const std::vector<std::size_t>& extra_periods = {});

enum class CandidateFilter { OpenGap, Counterexample, All };

struct HuntOptions {
  bool exhaustive = false;
  CandidateFilter filter = CandidateFilter::OpenGap;
  std::uint64_t budget = 1'000'000;  // exhaustive node limit
};

struct HuntCandidate {
  std::uint64_t index = 0;
  Rational lambda_min_mlcp;
  Regime regime = Regime::OpenGap;
  InstanceDocument instance;
};

struct HuntFindings {
  std::uint64_t total = 0;
  std::array<std::uint64_t, kRegimeCount> regime_counts{};
  std::vector<HuntCandidate> candidates;
};

// Streams instances (seeded-random, or the full weight-assignment x map
// product in exhaustive mode), classifies each, tallies regimes, and emits
// every fixed-point-free forming-triangle instance in the filtered regimes
// verbatim for audit. An instance in the contraction regime with the
// forming-triangle property and no fixed point would contradict the
// fixed-point guarantee and raises SelfCheckError.
//
// Exhaustive mode caps n_points at 4 and weight_max at 3 and refuses runs
// whose a-priori instance count exceeds options.budget (BudgetExceeded).
HuntFindings hunt_open_problem(const GenConfig& config, const HuntOptions& options);

}  // namespace multifix
