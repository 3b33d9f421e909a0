#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multifix/errors.hpp"
#include "multifix/rational.hpp"

namespace multifix {

using PointId = std::uint32_t;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Precomputing all image-to-image Hausdorff distances is quadratic in |X|
// times the image sizes; this cap keeps it trivial.
inline constexpr std::size_t kDefaultMaxPoints = 64;

// Nonempty sorted set of point ids. On a finite space every nonempty subset
// is closed and bounded, so this is exactly an element of CB(X).
class PointSet {
 public:
  explicit PointSet(std::vector<PointId> members);
  static PointSet singleton(PointId p) { return PointSet({p}); }

  const std::vector<PointId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(PointId p) const;

  bool operator==(const PointSet&) const = default;

 private:
  std::vector<PointId> members_;
};

struct MetricViolation {
  enum class Kind {
    NonSquareMatrix,
    DuplicateLabel,
    DiagonalNonzero,
    OffDiagonalNonpositive,
    Asymmetric,
    TriangleInequality,
  };
  Kind kind;
  // Indices involved; for TriangleInequality {a, b, via}: d(a,b) > d(a,via) + d(via,b).
  std::array<std::size_t, 3> at{0, 0, 0};
  std::string detail;
};

class MetricViolationError : public ParseError {
 public:
  explicit MetricViolationError(std::vector<MetricViolation> violations);
  const std::vector<MetricViolation>& violations() const { return violations_; }

 private:
  std::vector<MetricViolation> violations_;
};

struct MetricValidation;
MetricValidation validate_metric(std::vector<std::string> labels, RationalMatrix dist);

class FiniteMetricSpace {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointId p) const { return labels_[p]; }
  const Rational& distance(PointId a, PointId b) const { return dist_[a][b]; }
  const RationalMatrix& matrix() const { return dist_; }
  std::optional<PointId> index_of(std::string_view label) const;

  bool operator==(const FiniteMetricSpace&) const = default;

 private:
  FiniteMetricSpace(std::vector<std::string> labels, RationalMatrix dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {}

  std::vector<std::string> labels_;
  RationalMatrix dist_;

  friend MetricValidation validate_metric(std::vector<std::string> labels, RationalMatrix dist);
};

// Result of validate_metric: checks all metric axioms (identity, positivity,
// symmetry, triangle inequality) plus shape and label distinctness. Every
// violated axiom instance is reported; nothing is silently repaired.
struct MetricValidation {
  std::optional<FiniteMetricSpace> space;  // present iff violations is empty
  std::vector<MetricViolation> violations;
  bool ok() const { return space.has_value(); }
};

// Throwing form of validate_metric.
FiniteMetricSpace make_space(std::vector<std::string> labels, RationalMatrix dist);

// Distance matrix builders for the two structured metrics used throughout:
// parity (0 if equal, 2 if both even or both odd, 1 otherwise) and the usual
// metric |a - b| on a coordinate line.
RationalMatrix parity_matrix(const std::vector<BigInt>& values);
RationalMatrix line_matrix(const std::vector<Rational>& coords);

// A set-valued self-map: one nonempty image subset per point.
class MultiMap {
 public:
  MultiMap(std::size_t ambient_size, std::vector<PointSet> images);

  std::size_t ambient_size() const { return images_.size(); }
  const PointSet& image(PointId p) const { return images_[p]; }
  const std::vector<PointSet>& images() const { return images_; }

  bool operator==(const MultiMap&) const = default;

 private:
  std::vector<PointSet> images_;
};

// One (X, T) pair under study.
struct Instance {
  FiniteMetricSpace space;
  MultiMap map;
};

// min over s in S of d(p, s); 0 iff p is a member of S.
Rational point_set_distance(const FiniteMetricSpace& space, PointId p, const PointSet& s);

// Symmetric Hausdorff distance: max of the two directed max-of-min distances.
Rational hausdorff(const FiniteMetricSpace& space, const PointSet& a, const PointSet& b);

// H(T(i), T(j)) for all pairs; symmetric with zero diagonal.
RationalMatrix hausdorff_matrix(const FiniteMetricSpace& space, const MultiMap& map,
                                std::size_t max_points = kDefaultMaxPoints);

}  // namespace multifix
