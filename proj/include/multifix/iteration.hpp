#pragma once

#include <optional>
#include <vector>

#include "multifix/analysis.hpp"

namespace multifix {

enum class Policy {
  NearestLex,  // minimal step distance, smallest id on ties
  Lex,         // smallest id among admissible
};

struct IterationConfig {
  Rational lambda;
  PointId start = 0;
  std::size_t max_steps = 0;  // 0 means 10 * |X|^2
  Policy policy = Policy::NearestLex;
  // When set, lambda must lie in [0, 1/2) -- the regime the fixed-point
  // guarantee covers. Unrestricted mode allows any lambda in [0, 1) for
  // diagnostics.
  bool theorem4_mode = true;
};

// Record of the selection that produced x_{n+1}, n >= 1.
struct IterationStep {
  std::size_t n = 0;
  PointId point = 0;        // x_{n+1}
  Rational step_distance;   // d(x_n, x_{n+1})
  Rational hausdorff_prev;  // H(T(x_{n-1}), T(x_n))
  Rational slack;           // lambda for n = 1, min{lambda^n, H(T(x_{n-2}), T(x_n))} after
  Rational separation;      // H(T(x_{n-1}), T(x_{n+1})), always > 0

  bool operator==(const IterationStep&) const = default;
};

struct SelectionFailure {
  PointId x = 0;  // x_{n-1}, the "x" of the forming-triangle pair that failed
  PointId y = 0;  // x_n, its "y"
  bool operator==(const SelectionFailure&) const = default;
};

enum class IterationOutcome {
  FixedPointFound,
  MaxStepsExceeded,
  SelectionInfeasible,
};

struct IterationTrace {
  std::vector<PointId> points;  // x_0, x_1, ...
  std::vector<IterationStep> steps;
  IterationOutcome outcome = IterationOutcome::MaxStepsExceeded;
  std::optional<PointId> fixed_point;            // set iff FixedPointFound
  std::optional<SelectionFailure> infeasible_at; // set iff SelectionInfeasible

  bool operator==(const IterationTrace&) const = default;
};

// Additive slack admitted at step n: lambda at n = 1, then
// min{lambda^n, H(T(x_prev2), T(x_cur))}.
Rational selection_slack(const Analysis& inst, std::optional<PointId> x_prev2, PointId x_cur,
                         std::size_t n, const Rational& lambda);

// Picks z in T(x_cur) with H(T(x_prev), T(z)) > 0 and
// d(x_cur, z) <= H(T(x_prev), T(x_cur)) + slack(n), under the policy.
// nullopt means no admissible z exists, i.e. the forming-triangle property
// fails at (x_prev, x_cur).
std::optional<PointId> select_next(const Analysis& inst, std::optional<PointId> x_prev2,
                                   PointId x_prev, PointId x_cur, std::size_t n,
                                   const Rational& lambda, Policy policy);

// Runs the constructive sequence from config.start, checking membership
// x in T(x) before every selection and stopping at the first hit.
IterationTrace run_iteration(const Analysis& inst, const IterationConfig& config);

struct CauchyViolation {
  enum class Bound { Recurrence, Unrolled };
  std::size_t n = 0;
  Bound bound = Bound::Recurrence;
  Rational lhs;
  Rational rhs;
};

struct CauchyCheck {
  bool ok = true;
  std::size_t checked = 0;  // number of indices n examined
  std::optional<CauchyViolation> first_violation;
};

// Verifies, for each n >= 1 with x_{n+2} recorded, the recurrence bound
//   d(x_n,x_{n+1}) + d(x_{n+1},x_{n+2}) <= 2*lambda*(d(x_{n-1},x_n) + d(x_n,x_{n+1})) + lambda^n
// and its unrolled form
//   d(x_n,x_{n+1}) + d(x_{n+1},x_{n+2}) <= (2*lambda)^n*(d(x_0,x_1) + d(x_1,x_2)) + 2^n*lambda^n.
// Requires lambda in [0, 1/2) and at least 3 trace points.
CauchyCheck verify_cauchy_bounds(const FiniteMetricSpace& space, const IterationTrace& trace,
                                 const Rational& lambda);

}  // namespace multifix
