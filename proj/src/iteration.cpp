#include "multifix/iteration.hpp"

#include <fmt/format.h>

namespace multifix {

namespace {

const Rational kHalf(1, 2);

// Initial pick of x_1 from T(x_0); unconstrained except for the policy.
PointId pick_first(const Analysis& inst, PointId start, Policy policy) {
  const auto& candidates = inst.map().image(start).members();
  if (policy == Policy::Lex) return candidates.front();
  PointId best = candidates.front();
  Rational best_dist = inst.space().distance(start, best);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Rational& d = inst.space().distance(start, candidates[i]);
    if (d < best_dist) {
      best = candidates[i];
      best_dist = d;
    }
  }
  return best;
}

}  // namespace

Rational selection_slack(const Analysis& inst, std::optional<PointId> x_prev2, PointId x_cur,
                         std::size_t n, const Rational& lambda) {
  if (n == 1) return lambda;
  if (!x_prev2) throw std::logic_error("slack for n >= 2 needs x_{n-2}");
  Rational power = lambda.pow(n);
  const Rational& gap = inst.image_hausdorff(*x_prev2, x_cur);
  return power < gap ? power : gap;
}

std::optional<PointId> select_next(const Analysis& inst, std::optional<PointId> x_prev2,
                                   PointId x_prev, PointId x_cur, std::size_t n,
                                   const Rational& lambda, Policy policy) {
  if (n < 1) throw std::logic_error("selection index starts at 1");
  if (!inst.map().image(x_prev).contains(x_cur) || x_cur == x_prev) {
    throw std::logic_error("select_next requires x_cur in T(x_prev) and x_cur != x_prev");
  }
  const Rational bound = inst.image_hausdorff(x_prev, x_cur) +
                         selection_slack(inst, x_prev2, x_cur, n, lambda);
  std::optional<PointId> best;
  Rational best_dist;
  for (PointId z : inst.map().image(x_cur).members()) {
    if (inst.image_hausdorff(x_prev, z).sign() <= 0) continue;
    const Rational& d = inst.space().distance(x_cur, z);
    if (d > bound) continue;
    if (policy == Policy::Lex) return z;  // members are ascending
    if (!best || d < best_dist) {
      best = z;
      best_dist = d;
    }
  }
  return best;
}

IterationTrace run_iteration(const Analysis& inst, const IterationConfig& config) {
  const std::size_t n_points = inst.space().size();
  if (n_points < 3) {
    throw PreconditionError(
        fmt::format("iteration needs at least 3 points, space has {}", n_points));
  }
  if (config.lambda.sign() < 0 || config.lambda >= 1) {
    throw PreconditionError(fmt::format("lambda = {} outside [0, 1)", config.lambda.str()));
  }
  if (config.theorem4_mode && config.lambda >= kHalf) {
    throw PreconditionError(fmt::format(
        "lambda = {} is not below 1/2; no fixed-point guarantee applies (use unrestricted mode)",
        config.lambda.str()));
  }
  if (config.start >= n_points) {
    throw PreconditionError(fmt::format("start point {} outside the space", config.start));
  }
  const std::size_t max_steps =
      config.max_steps > 0 ? config.max_steps : 10 * n_points * n_points;

  IterationTrace trace;
  trace.points.push_back(config.start);

  if (inst.map().image(config.start).contains(config.start)) {
    trace.outcome = IterationOutcome::FixedPointFound;
    trace.fixed_point = config.start;
    return trace;
  }

  trace.points.push_back(pick_first(inst, config.start, config.policy));

  for (std::size_t n = 1;; ++n) {
    const PointId cur = trace.points.back();
    const PointId prev = trace.points[trace.points.size() - 2];

    if (inst.map().image(cur).contains(cur)) {
      trace.outcome = IterationOutcome::FixedPointFound;
      trace.fixed_point = cur;
      return trace;
    }
    if (trace.points.size() - 1 >= max_steps) {
      trace.outcome = IterationOutcome::MaxStepsExceeded;
      return trace;
    }

    std::optional<PointId> prev2;
    if (trace.points.size() >= 3) prev2 = trace.points[trace.points.size() - 3];

    auto z = select_next(inst, prev2, prev, cur, n, config.lambda, config.policy);
    if (!z) {
      trace.outcome = IterationOutcome::SelectionInfeasible;
      trace.infeasible_at = SelectionFailure{prev, cur};
      return trace;
    }

    IterationStep step;
    step.n = n;
    step.point = *z;
    step.step_distance = inst.space().distance(cur, *z);
    step.hausdorff_prev = inst.image_hausdorff(prev, cur);
    step.slack = selection_slack(inst, prev2, cur, n, config.lambda);
    step.separation = inst.image_hausdorff(prev, *z);
    if (step.step_distance > step.hausdorff_prev + step.slack || step.separation.sign() <= 0) {
      throw SelfCheckError(fmt::format(
          "selected point violates its own admissibility at step {}: d = {}, bound = {} + {}",
          n, step.step_distance.str(), step.hausdorff_prev.str(), step.slack.str()));
    }
    trace.steps.push_back(std::move(step));
    trace.points.push_back(*z);
  }
}

CauchyCheck verify_cauchy_bounds(const FiniteMetricSpace& space, const IterationTrace& trace,
                                 const Rational& lambda) {
  if (lambda.sign() < 0 || lambda >= kHalf) {
    throw PreconditionError(
        fmt::format("cauchy bounds require lambda in [0, 1/2), got {}", lambda.str()));
  }
  if (trace.points.size() < 3) {
    throw PreconditionError(fmt::format(
        "trace has {} point(s); the bounds need at least 3", trace.points.size()));
  }

  std::vector<Rational> d;
  for (std::size_t i = 0; i + 1 < trace.points.size(); ++i) {
    d.push_back(space.distance(trace.points[i], trace.points[i + 1]));
  }

  CauchyCheck check;
  const Rational two_lambda = lambda * 2;
  const Rational base = d[0] + d[1];
  Rational lambda_pow = 1;    // lambda^n
  Rational two_lambda_pow = 1;  // (2*lambda)^n
  Rational two_pow = 1;       // 2^n

  for (std::size_t n = 1; n + 1 < d.size(); ++n) {
    lambda_pow *= lambda;
    two_lambda_pow *= two_lambda;
    two_pow *= 2;
    ++check.checked;

    Rational lhs = d[n] + d[n + 1];
    Rational recurrence_rhs = two_lambda * (d[n - 1] + d[n]) + lambda_pow;
    if (lhs > recurrence_rhs) {
      check.ok = false;
      check.first_violation = CauchyViolation{n, CauchyViolation::Bound::Recurrence,
                                              std::move(lhs), std::move(recurrence_rhs)};
      return check;
    }
    Rational unrolled_rhs = two_lambda_pow * base + two_pow * lambda_pow;
    if (lhs > unrolled_rhs) {
      check.ok = false;
      check.first_violation = CauchyViolation{n, CauchyViolation::Bound::Unrolled,
                                              std::move(lhs), std::move(unrolled_rhs)};
      return check;
    }
  }
  return check;
}

}  // namespace multifix
