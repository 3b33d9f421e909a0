// Acceptance runner: executes every release criterion at full scale and
// prints one PASS/FAIL line each. Exit status is the number of failures.

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

using namespace multifix;
using namespace multifix::testing;

namespace {

struct Criterion {
  std::string name;
  std::function<std::string()> run;  // empty string = pass, else failure detail
};

std::string check(bool ok, const std::string& detail) {
  return ok ? std::string() : detail;
}

std::string criterion_ex1() {
  auto inst = builtin_instance("ex1");
  Analysis analysis(inst.space, inst.map);

  auto mlc = analysis.lambda_min_contraction();
  if (mlc.value < Rational(1)) return "pairwise factor below 1";
  Rational witness_ratio = analysis.image_hausdorff(mlc.witness.a, mlc.witness.b) /
                           inst.space.distance(mlc.witness.a, mlc.witness.b);
  if (witness_ratio != Rational(1)) {
    return fmt::format("witness ratio is {}, expected exactly 1", witness_ratio.str());
  }
  // Cross-parity pair: the labels are integers of opposite parity.
  auto parity = [&](PointId p) {
    return Rational::parse(inst.space.label(p)).numerator() % 2 == 0;
  };
  if (parity(mlc.witness.a) == parity(mlc.witness.b)) {
    return fmt::format("witness ({}, {}) is not a cross-parity pair", mlc.witness.a,
                       mlc.witness.b);
  }

  if (!analysis.is_mlcp(Rational(3, 4))) return "perimeter condition fails at 3/4";
  auto mlcp = analysis.lambda_min_perimeter();
  if (mlcp.value != Rational(3, 4)) {
    return fmt::format("perimeter factor is {}, expected 3/4", mlcp.value.str());
  }
  if (!fixed_points(inst.map).empty()) return "unexpected fixed point";
  if (!prime_period_points(inst.map, 2).empty()) return "unexpected prime-period-2 point";
  if (!analysis.forming_triangle().holds) return "forming-triangle property fails";
  return {};
}

std::string criterion_cyclic7() {
  auto inst = builtin_instance("cyclic7");
  Analysis analysis(inst.space, inst.map);
  if (!analysis.forming_triangle().holds) return "forming-triangle property fails";
  if (prime_period_points(inst.map, 2).empty()) return "no prime-period-2 point found";
  return {};
}

std::string criterion_nadler_gap() {
  auto inst = builtin_instance("nadler-gap");
  Analysis analysis(inst.space, inst.map);

  if (analysis.lambda_min_contraction().value != Rational(1)) {
    return "pairwise factor is not exactly 1";
  }
  if (analysis.lambda_min_perimeter().value != Rational(3, 8)) {
    return "perimeter factor is not exactly 3/8";
  }
  if (!prime_period_points(inst.map, 2).empty()) return "unexpected prime-period-2 point";
  if (!analysis.forming_triangle().holds) return "forming-triangle property fails";
  if (fixed_points(inst.map) != std::vector<PointId>{0, 1}) {
    return "fixed points differ from {0, 1}";
  }

  for (PointId start = 0; start < inst.space.size(); ++start) {
    IterationConfig config;
    config.lambda = Rational(3, 8);
    config.start = start;
    auto trace = run_iteration(analysis, config);
    if (trace.outcome != IterationOutcome::FixedPointFound) {
      return fmt::format("no fixed point from start {}", inst.space.label(start));
    }
    if (*trace.fixed_point != 0 && *trace.fixed_point != 1) {
      return fmt::format("terminal point {} outside {{0, 1}}",
                         inst.space.label(*trace.fixed_point));
    }
    if (trace.points.size() >= 3) {
      auto bounds = verify_cauchy_bounds(inst.space, trace, config.lambda);
      if (!bounds.ok) {
        return fmt::format("bounds violated from start {}", inst.space.label(start));
      }
    }
  }
  return {};
}

std::string criterion_theorem4() {
  auto result = theorem4_suite(20260810, 1000, 400000);
  if (result.checked < 1000) {
    return fmt::format("only {} qualifying instances within {} draws", result.checked,
                       result.attempts);
  }
  return check(result.ok(), fmt::format("{} failure(s); first: {}", result.failures,
                                        result.first_failure));
}

std::string criterion_lemma1() {
  auto result = lemma1_suite(1729, 1000, 400000);
  if (result.checked < 1000) {
    return fmt::format("only {} qualifying instances within {} draws", result.checked,
                       result.attempts);
  }
  return check(result.ok(), fmt::format("{} violation(s); first: {}", result.failures,
                                        result.first_failure));
}

std::string criterion_subclass() {
  auto result = subclass_suite(4242, 1000);
  return check(result.ok(), result.first_failure);
}

std::string criterion_hausdorff() {
  auto result = hausdorff_axiom_suite(8128, 1000);
  return check(result.ok(), result.first_failure);
}

std::string criterion_generator() {
  auto result = generator_suite(65537, 1000);
  return check(result.ok(), result.first_failure);
}

std::string criterion_hunter() {
  const auto start = std::chrono::steady_clock::now();
  GenConfig config;
  config.n_points = 3;
  config.weight_max = 1;
  HuntFindings findings;
  try {
    findings = hunt_open_problem(config, HuntOptions{true, CandidateFilter::All});
  } catch (const SelfCheckError& e) {
    return fmt::format("guarantee contradiction reported: {}", e.what());
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);

  if (findings.total != 343) {
    return fmt::format("enumerated {} instances, expected (2^3-1)^3 = 343", findings.total);
  }
  std::uint64_t sum = 0;
  for (auto c : findings.regime_counts) sum += c;
  if (sum != findings.total) {
    return fmt::format("regime counts sum to {}, total is {}", sum, findings.total);
  }
  if (elapsed.count() >= 60) {
    return fmt::format("took {} s, budget is 60 s", elapsed.count());
  }
  return {};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"ex1 regression: factors 1 and 3/4, no fixed or prime-2 points, property holds",
       criterion_ex1},
      {"cyclic7 regression: property holds alongside a prime-period-2 point",
       criterion_cyclic7},
      {"nadler-gap regression: factors 1 and 3/8, fixed points {0,1}, every start converges",
       criterion_nadler_gap},
      {"guarantee suite: 1000 conforming instances reach confirmed fixed points",
       criterion_theorem4},
      {"implication suite: 1000 fixed-point/prime-2-free instances have the property",
       criterion_lemma1},
      {"subclass suite: perimeter factor <= pairwise factor on 1000 instances",
       criterion_subclass},
      {"hausdorff suite: metric axioms hold on 1000 subset draws", criterion_hausdorff},
      {"generator suite: 1000 seeds validate and reproduce byte-for-byte",
       criterion_generator},
      {"hunter self-check: exhaustive 3-point uniform run, 343 classified, no contradictions",
       criterion_hunter},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    try {
      detail = criteria[i].run();
    } catch (const std::exception& e) {
      detail = fmt::format("exception: {}", e.what());
    }
    if (detail.empty()) {
      fmt::print("[PASS] {}. {}\n", i + 1, criteria[i].name);
    } else {
      fmt::print("[FAIL] {}. {} -- {}\n", i + 1, criteria[i].name, detail);
      ++failures;
    }
  }
  return failures;
}
