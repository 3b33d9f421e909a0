#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "multifix/metric.hpp"

namespace multifix {

enum class MetricKind { Matrix, Parity, Line };

std::string metric_kind_name(MetricKind kind);

// The on-disk presentation of one (X, T) instance:
//   {
//     "points": ["0", "1", "4"],
//     "metric": {"type": "line", "coords": ["0", "1", "4"]},
//     "map":    {"0": ["0"], "1": ["1"], "4": ["0", "1"]}
//   }
// metric.type is one of "matrix" (explicit rational rows), "parity"
// (0 / 2 same parity / 1 otherwise, labels must be integers), or "line"
// (usual metric on the given coordinates). Rational entries are JSON
// integers or strings "p/q" / "3.25"; non-integer JSON numbers are rejected
// so nothing ever passes through floating point.
struct InstanceDocument {
  std::vector<std::string> points;
  MetricKind metric = MetricKind::Matrix;
  RationalMatrix matrix;          // Matrix
  std::vector<Rational> coords;   // Line
  std::vector<std::vector<std::string>> images;  // parallel to points

  bool operator==(const InstanceDocument&) const = default;
};

// Structural parse: syntax and schema only. Throws SyntaxError/SchemaError.
InstanceDocument parse_instance_document(const std::string& text);

// Builds the validated space and map. Throws MetricViolationError or
// SchemaError (unknown label, empty image, parity label not an integer).
Instance realize(const InstanceDocument& doc);

// parse + realize.
Instance parse_instance(const std::string& text);

// Canonical serialization: sorted keys, two-space indent, exact rational
// strings, trailing newline. parse(emit(doc)) == doc.
std::string emit_instance(const InstanceDocument& doc);

// Document with an explicit matrix metric for an in-memory pair.
InstanceDocument document_for(const FiniteMetricSpace& space, const MultiMap& map);

// The paper-presentation documents for the builtin instances; realizing one
// agrees with builtin_instance(name) exactly.
InstanceDocument builtin_document(const std::string& name);

// Shared canonical dump used by every emitter.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace multifix
