#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multifix/instance_io.hpp"
#include "multifix/iteration.hpp"
#include "multifix/search.hpp"

namespace multifix {

// Label-level view of one iteration step.
struct TraceStepDocument {
  std::size_t n = 0;
  std::string point;
  Rational step_distance;
  Rational hausdorff_prev;
  Rational slack;
  Rational separation;

  bool operator==(const TraceStepDocument&) const = default;
};

struct CauchyDocument {
  bool checked = false;
  std::string skipped_reason;  // set iff !checked
  bool ok = false;
  std::size_t bounds_checked = 0;
  // First violated index, bound name, and both exact sides, when !ok.
  std::optional<std::size_t> violation_n;
  std::string violation_bound;
  std::optional<Rational> violation_lhs;
  std::optional<Rational> violation_rhs;

  bool operator==(const CauchyDocument&) const = default;
};

struct TraceDocument {
  std::string start;
  Rational lambda;
  std::string policy;
  std::size_t max_steps = 0;
  bool theorem4_mode = true;
  std::vector<std::string> points;
  std::vector<TraceStepDocument> steps;
  std::string outcome;  // "fixed-point" | "max-steps-exceeded" | "selection-infeasible"
  std::optional<std::string> fixed_point;
  std::optional<std::pair<std::string, std::string>> infeasible_at;
  CauchyDocument cauchy;

  bool operator==(const TraceDocument&) const = default;
};

struct Lemma1Document {
  bool antecedent = false;
  bool consequent = false;
  bool vacuous = false;
  bool verdict = false;

  bool operator==(const Lemma1Document&) const = default;
};

// Full classification of one instance, ready for serialization. All point
// references are labels; all scalars are exact rational strings on the wire.
struct ReportDocument {
  std::vector<std::string> points;
  std::string metric_type;
  Rational lambda_min_mlc;
  Rational lambda_min_mlcp;
  std::vector<std::string> mlc_witness;   // 2 labels
  std::vector<std::string> mlcp_witness;  // 3 labels
  std::vector<std::string> fixed_points;
  std::vector<std::string> prime_period_2_points;
  std::map<std::size_t, std::vector<std::string>> requested_periods;  // beyond 2
  bool forming_triangle = false;
  std::optional<std::pair<std::string, std::string>> forming_triangle_failure;
  Lemma1Document lemma1;
  std::string regime;
  std::optional<TraceDocument> trace;

  bool operator==(const ReportDocument&) const = default;
};

ReportDocument build_report(const FiniteMetricSpace& space, const ClassifiedInstance& classified,
                            MetricKind metric_kind);

TraceDocument build_trace_document(const FiniteMetricSpace& space, const IterationTrace& trace,
                                   const IterationConfig& config);

// Runs the bound verification when it applies (lambda < 1/2 and >= 3 trace
// points); otherwise records why it was skipped.
CauchyDocument run_cauchy_check(const FiniteMetricSpace& space, const IterationTrace& trace,
                                const Rational& lambda);

std::string emit_report_json(const ReportDocument& report);
std::string emit_report_human(const ReportDocument& report);

// Inverse of emit_report_json on canonical documents.
ReportDocument parse_report_json(const std::string& text);

struct FindingsEcho {
  std::string mode;  // "random" | "exhaustive"
  GenConfig config;
  std::string filter;
};

std::string emit_findings_json(const HuntFindings& findings, const FindingsEcho& echo);
std::string emit_findings_human(const HuntFindings& findings, const FindingsEcho& echo);

}  // namespace multifix
