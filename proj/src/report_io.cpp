#include "multifix/report_io.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace multifix {

using nlohmann::json;

namespace {

const Rational kHalf(1, 2);

std::vector<std::string> to_labels(const FiniteMetricSpace& space,
                                   const std::vector<PointId>& ids) {
  std::vector<std::string> out;
  for (PointId p : ids) out.push_back(space.label(p));
  return out;
}

std::string policy_name(Policy policy) {
  return policy == Policy::NearestLex ? "nearest-lex" : "lex";
}

std::string outcome_name(IterationOutcome outcome) {
  switch (outcome) {
    case IterationOutcome::FixedPointFound: return "fixed-point";
    case IterationOutcome::MaxStepsExceeded: return "max-steps-exceeded";
    case IterationOutcome::SelectionInfeasible: return "selection-infeasible";
  }
  return "?";
}

json rat(const Rational& r) { return json(r.str()); }

Rational rat_of(const json& j) { return Rational::parse(j.get<std::string>()); }

std::string join(const std::vector<std::string>& items) {
  return items.empty() ? std::string("(none)") : fmt::format("{}", fmt::join(items, ", "));
}

}  // namespace

ReportDocument build_report(const FiniteMetricSpace& space, const ClassifiedInstance& classified,
                            MetricKind metric_kind) {
  ReportDocument doc;
  doc.points = space.labels();
  doc.metric_type = metric_kind_name(metric_kind);
  doc.lambda_min_mlc = classified.lambdas.lambda_min_mlc;
  doc.lambda_min_mlcp = classified.lambdas.lambda_min_mlcp;
  doc.mlc_witness = {space.label(classified.lambdas.mlc_witness.a),
                     space.label(classified.lambdas.mlc_witness.b)};
  doc.mlcp_witness = {space.label(classified.lambdas.mlcp_witness.a),
                      space.label(classified.lambdas.mlcp_witness.b),
                      space.label(classified.lambdas.mlcp_witness.c)};
  doc.fixed_points = to_labels(space, classified.properties.fixed_points);
  for (const auto& [n, pts] : classified.properties.prime_period_points) {
    if (n == 2) {
      doc.prime_period_2_points = to_labels(space, pts);
    } else {
      doc.requested_periods[n] = to_labels(space, pts);
    }
  }
  doc.forming_triangle = classified.properties.forming_triangle.holds;
  if (classified.properties.forming_triangle.failure) {
    const auto& f = *classified.properties.forming_triangle.failure;
    doc.forming_triangle_failure = {space.label(f.a), space.label(f.b)};
  }
  doc.lemma1 = {classified.properties.lemma1.antecedent, classified.properties.lemma1.consequent,
                classified.properties.lemma1.vacuous, classified.properties.lemma1.verdict};
  doc.regime = std::string(regime_name(classified.regime));
  return doc;
}

CauchyDocument run_cauchy_check(const FiniteMetricSpace& space, const IterationTrace& trace,
                                const Rational& lambda) {
  CauchyDocument doc;
  if (lambda >= kHalf) {
    doc.skipped_reason = "bounds apply only for lambda below 1/2";
    return doc;
  }
  if (trace.points.size() < 3) {
    doc.skipped_reason = "trace shorter than 3 points";
    return doc;
  }
  doc.checked = true;
  CauchyCheck check = verify_cauchy_bounds(space, trace, lambda);
  doc.ok = check.ok;
  doc.bounds_checked = check.checked;
  if (check.first_violation) {
    doc.violation_n = check.first_violation->n;
    doc.violation_bound =
        check.first_violation->bound == CauchyViolation::Bound::Recurrence ? "recurrence"
                                                                           : "unrolled";
    doc.violation_lhs = check.first_violation->lhs;
    doc.violation_rhs = check.first_violation->rhs;
  }
  return doc;
}

TraceDocument build_trace_document(const FiniteMetricSpace& space, const IterationTrace& trace,
                                   const IterationConfig& config) {
  TraceDocument doc;
  doc.start = space.label(config.start);
  doc.lambda = config.lambda;
  doc.policy = policy_name(config.policy);
  doc.max_steps = config.max_steps > 0 ? config.max_steps : 10 * space.size() * space.size();
  doc.theorem4_mode = config.theorem4_mode;
  for (PointId p : trace.points) doc.points.push_back(space.label(p));
  for (const auto& step : trace.steps) {
    doc.steps.push_back({step.n, space.label(step.point), step.step_distance,
                         step.hausdorff_prev, step.slack, step.separation});
  }
  doc.outcome = outcome_name(trace.outcome);
  if (trace.fixed_point) doc.fixed_point = space.label(*trace.fixed_point);
  if (trace.infeasible_at) {
    doc.infeasible_at = {space.label(trace.infeasible_at->x), space.label(trace.infeasible_at->y)};
  }
  doc.cauchy = run_cauchy_check(space, trace, config.lambda);
  return doc;
}

namespace {

json trace_to_json(const TraceDocument& t) {
  json j;
  j["start"] = t.start;
  j["lambda"] = rat(t.lambda);
  j["policy"] = t.policy;
  j["max_steps"] = t.max_steps;
  j["theorem4_mode"] = t.theorem4_mode;
  j["points"] = t.points;
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"n", s.n},
                     {"point", s.point},
                     {"step_distance", rat(s.step_distance)},
                     {"hausdorff_prev", rat(s.hausdorff_prev)},
                     {"slack", rat(s.slack)},
                     {"separation", rat(s.separation)}});
  }
  j["steps"] = std::move(steps);
  json outcome;
  outcome["kind"] = t.outcome;
  if (t.fixed_point) outcome["point"] = *t.fixed_point;
  if (t.infeasible_at) {
    outcome["x"] = t.infeasible_at->first;
    outcome["y"] = t.infeasible_at->second;
  }
  j["outcome"] = std::move(outcome);
  json cauchy;
  cauchy["checked"] = t.cauchy.checked;
  if (!t.cauchy.checked) {
    cauchy["skipped_reason"] = t.cauchy.skipped_reason;
  } else {
    cauchy["ok"] = t.cauchy.ok;
    cauchy["bounds_checked"] = t.cauchy.bounds_checked;
    if (t.cauchy.violation_n) {
      cauchy["first_violation"] = {{"n", *t.cauchy.violation_n},
                                   {"bound", t.cauchy.violation_bound},
                                   {"lhs", rat(*t.cauchy.violation_lhs)},
                                   {"rhs", rat(*t.cauchy.violation_rhs)}};
    }
  }
  j["cauchy"] = std::move(cauchy);
  return j;
}

TraceDocument trace_from_json(const json& j) {
  TraceDocument t;
  t.start = j.at("start").get<std::string>();
  t.lambda = rat_of(j.at("lambda"));
  t.policy = j.at("policy").get<std::string>();
  t.max_steps = j.at("max_steps").get<std::size_t>();
  t.theorem4_mode = j.at("theorem4_mode").get<bool>();
  t.points = j.at("points").get<std::vector<std::string>>();
  for (const json& s : j.at("steps")) {
    t.steps.push_back({s.at("n").get<std::size_t>(), s.at("point").get<std::string>(),
                       rat_of(s.at("step_distance")), rat_of(s.at("hausdorff_prev")),
                       rat_of(s.at("slack")), rat_of(s.at("separation"))});
  }
  const json& outcome = j.at("outcome");
  t.outcome = outcome.at("kind").get<std::string>();
  if (outcome.contains("point")) t.fixed_point = outcome["point"].get<std::string>();
  if (outcome.contains("x")) {
    t.infeasible_at = {outcome["x"].get<std::string>(), outcome["y"].get<std::string>()};
  }
  const json& cauchy = j.at("cauchy");
  t.cauchy.checked = cauchy.at("checked").get<bool>();
  if (!t.cauchy.checked) {
    t.cauchy.skipped_reason = cauchy.at("skipped_reason").get<std::string>();
  } else {
    t.cauchy.ok = cauchy.at("ok").get<bool>();
    t.cauchy.bounds_checked = cauchy.at("bounds_checked").get<std::size_t>();
    if (cauchy.contains("first_violation")) {
      const json& v = cauchy["first_violation"];
      t.cauchy.violation_n = v.at("n").get<std::size_t>();
      t.cauchy.violation_bound = v.at("bound").get<std::string>();
      t.cauchy.violation_lhs = rat_of(v.at("lhs"));
      t.cauchy.violation_rhs = rat_of(v.at("rhs"));
    }
  }
  return t;
}

}  // namespace

std::string emit_report_json(const ReportDocument& report) {
  json j;
  j["instance"] = {{"points", report.points}, {"metric_type", report.metric_type}};
  j["lambda_min_mlc"] = rat(report.lambda_min_mlc);
  j["lambda_min_mlcp"] = rat(report.lambda_min_mlcp);
  j["mlc_witness"] = report.mlc_witness;
  j["mlcp_witness"] = report.mlcp_witness;
  j["fixed_points"] = report.fixed_points;
  j["prime_period_2_points"] = report.prime_period_2_points;
  if (!report.requested_periods.empty()) {
    json periods = json::object();
    for (const auto& [n, pts] : report.requested_periods) {
      periods[std::to_string(n)] = pts;
    }
    j["prime_period_points"] = std::move(periods);
  }
  j["forming_triangle"] = report.forming_triangle;
  if (report.forming_triangle_failure) {
    j["forming_triangle_failure"] = {{"x", report.forming_triangle_failure->first},
                                     {"y", report.forming_triangle_failure->second}};
  }
  j["lemma1"] = {{"antecedent", report.lemma1.antecedent},
                 {"consequent", report.lemma1.consequent},
                 {"vacuous", report.lemma1.vacuous},
                 {"verdict", report.lemma1.verdict}};
  j["regime"] = report.regime;
  if (report.trace) j["trace"] = trace_to_json(*report.trace);
  return canonical_dump(j);
}

ReportDocument parse_report_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what());
  }
  ReportDocument r;
  r.points = j.at("instance").at("points").get<std::vector<std::string>>();
  r.metric_type = j.at("instance").at("metric_type").get<std::string>();
  r.lambda_min_mlc = rat_of(j.at("lambda_min_mlc"));
  r.lambda_min_mlcp = rat_of(j.at("lambda_min_mlcp"));
  r.mlc_witness = j.at("mlc_witness").get<std::vector<std::string>>();
  r.mlcp_witness = j.at("mlcp_witness").get<std::vector<std::string>>();
  r.fixed_points = j.at("fixed_points").get<std::vector<std::string>>();
  r.prime_period_2_points = j.at("prime_period_2_points").get<std::vector<std::string>>();
  if (j.contains("prime_period_points")) {
    for (auto it = j["prime_period_points"].begin(); it != j["prime_period_points"].end(); ++it) {
      r.requested_periods[std::stoull(it.key())] = it.value().get<std::vector<std::string>>();
    }
  }
  r.forming_triangle = j.at("forming_triangle").get<bool>();
  if (j.contains("forming_triangle_failure")) {
    r.forming_triangle_failure = {j["forming_triangle_failure"].at("x").get<std::string>(),
                                  j["forming_triangle_failure"].at("y").get<std::string>()};
  }
  const json& lemma = j.at("lemma1");
  r.lemma1 = {lemma.at("antecedent").get<bool>(), lemma.at("consequent").get<bool>(),
              lemma.at("vacuous").get<bool>(), lemma.at("verdict").get<bool>()};
  r.regime = j.at("regime").get<std::string>();
  if (j.contains("trace")) r.trace = trace_from_json(j["trace"]);
  return r;
}

namespace {

std::string human_trace(const TraceDocument& t) {
  std::string out;
  out += fmt::format("iteration        : start {}, lambda {}, policy {}{}\n", t.start,
                     t.lambda.str(), t.policy, t.theorem4_mode ? "" : ", unrestricted");
  out += fmt::format("points           : {}\n", join(t.points));
  for (const auto& s : t.steps) {
    out += fmt::format(
        "  n {:<3} point {:<6} step_distance {:<8} hausdorff_prev {:<8} slack {:<10} "
        "separation {}\n",
        s.n, s.point, s.step_distance.str(), s.hausdorff_prev.str(), s.slack.str(),
        s.separation.str());
  }
  if (t.outcome == "fixed-point") {
    out += fmt::format("outcome          : fixed point {} after {} selection step(s)\n",
                       *t.fixed_point, t.steps.size());
  } else if (t.outcome == "max-steps-exceeded") {
    out += fmt::format("outcome          : no fixed point within {} selections\n", t.max_steps);
  } else {
    out += fmt::format(
        "outcome          : selection infeasible at (x = {}, y = {}); the forming-triangle "
        "property fails there\n",
        t.infeasible_at->first, t.infeasible_at->second);
  }
  if (!t.cauchy.checked) {
    out += fmt::format("cauchy bounds    : skipped ({})\n", t.cauchy.skipped_reason);
  } else if (t.cauchy.ok) {
    out += fmt::format("cauchy bounds    : ok ({} index(es) checked)\n", t.cauchy.bounds_checked);
  } else {
    out += fmt::format("cauchy bounds    : VIOLATED at n = {} ({} bound): {} > {}\n",
                       *t.cauchy.violation_n, t.cauchy.violation_bound,
                       t.cauchy.violation_lhs->str(), t.cauchy.violation_rhs->str());
  }
  return out;
}

}  // namespace

std::string emit_report_human(const ReportDocument& report) {
  std::string out;
  out += fmt::format("points           : {}  ({} points, {} metric)\n", join(report.points),
                     report.points.size(), report.metric_type);
  out += fmt::format("lambda_min_mlc   : {:<10} witness ({}, {})\n", report.lambda_min_mlc.str(),
                     report.mlc_witness[0], report.mlc_witness[1]);
  out += fmt::format("lambda_min_mlcp  : {:<10} witness ({}, {}, {})\n",
                     report.lambda_min_mlcp.str(), report.mlcp_witness[0],
                     report.mlcp_witness[1], report.mlcp_witness[2]);
  out += fmt::format("regime           : {}\n", report.regime);
  out += fmt::format("fixed points     : {}\n", join(report.fixed_points));
  out += fmt::format("prime period 2   : {}\n", join(report.prime_period_2_points));
  for (const auto& [n, pts] : report.requested_periods) {
    out += fmt::format("prime period {:<4}: {}\n", n, join(pts));
  }
  if (report.forming_triangle) {
    out += "forming triangle : yes\n";
  } else {
    out += fmt::format("forming triangle : no, fails at (x = {}, y = {})\n",
                       report.forming_triangle_failure->first,
                       report.forming_triangle_failure->second);
  }
  out += fmt::format("lemma 1          : antecedent {} | consequent {} | verdict {}{}\n",
                     report.lemma1.antecedent ? "yes" : "no",
                     report.lemma1.consequent ? "yes" : "no",
                     report.lemma1.verdict ? "holds" : "FAILS",
                     report.lemma1.vacuous ? " (vacuously)" : "");
  if (report.trace) out += human_trace(*report.trace);
  return out;
}

std::string emit_findings_json(const HuntFindings& findings, const FindingsEcho& echo) {
  json j;
  j["mode"] = echo.mode;
  j["filter"] = echo.filter;
  json config;
  config["n_points"] = echo.config.n_points;
  config["weight_max"] = echo.config.weight_max;
  config["image_size_min"] = echo.config.image_size_min;
  config["image_size_max"] = echo.config.image_size_max;
  config["seed"] = echo.config.seed;
  config["count"] = echo.config.count;
  j["config"] = std::move(config);
  j["total"] = findings.total;
  json counts;
  for (std::size_t r = 0; r < kRegimeCount; ++r) {
    counts[std::string(regime_name(static_cast<Regime>(r)))] = findings.regime_counts[r];
  }
  j["regime_counts"] = std::move(counts);
  json candidates = json::array();
  for (const auto& c : findings.candidates) {
    candidates.push_back({{"index", c.index},
                          {"lambda_min_mlcp", rat(c.lambda_min_mlcp)},
                          {"regime", std::string(regime_name(c.regime))},
                          {"instance", json::parse(emit_instance(c.instance))}});
  }
  j["candidates"] = std::move(candidates);
  j["self_check"] = "ok";
  return canonical_dump(j);
}

std::string emit_findings_human(const HuntFindings& findings, const FindingsEcho& echo) {
  std::string out;
  out += fmt::format("search mode      : {} (filter: {})\n", echo.mode, echo.filter);
  out += fmt::format("instances        : {}\n", findings.total);
  for (std::size_t r = 0; r < kRegimeCount; ++r) {
    out += fmt::format("  {:<22}: {}\n", regime_name(static_cast<Regime>(r)),
                       findings.regime_counts[r]);
  }
  out += fmt::format("candidates       : {} (fixed-point-free, forming-triangle, filtered regime)\n",
                     findings.candidates.size());
  for (const auto& c : findings.candidates) {
    out += fmt::format("--- candidate #{} (lambda_min_mlcp = {}, {}) ---\n{}", c.index,
                       c.lambda_min_mlcp.str(), regime_name(c.regime),
                       emit_instance(c.instance));
  }
  out += "self check       : ok\n";
  return out;
}

}  // namespace multifix
