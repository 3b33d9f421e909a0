#include "multifix/analysis.hpp"

#include <fmt/format.h>

namespace multifix {

std::vector<PointId> fixed_points(const MultiMap& map) {
  std::vector<PointId> out;
  for (PointId x = 0; x < map.ambient_size(); ++x) {
    if (map.image(x).contains(x)) out.push_back(x);
  }
  return out;
}

PointSet image_of_set(const MultiMap& map, const PointSet& s) {
  std::vector<bool> hit(map.ambient_size(), false);
  for (PointId p : s.members()) {
    for (PointId q : map.image(p).members()) hit[q] = true;
  }
  std::vector<PointId> members;
  for (PointId q = 0; q < hit.size(); ++q) {
    if (hit[q]) members.push_back(q);
  }
  return PointSet(std::move(members));
}

std::vector<PointId> periodic_points(const MultiMap& map, std::size_t n) {
  if (n < 1) throw PreconditionError("period must be at least 1");
  std::vector<PointId> out;
  for (PointId x = 0; x < map.ambient_size(); ++x) {
    PointSet orbit = PointSet::singleton(x);
    for (std::size_t k = 0; k < n; ++k) orbit = image_of_set(map, orbit);
    if (orbit.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<PointId> prime_period_points(const MultiMap& map, std::size_t n) {
  if (n < 1) throw PreconditionError("period must be at least 1");
  std::vector<PointId> out;
  for (PointId x = 0; x < map.ambient_size(); ++x) {
    PointSet orbit = PointSet::singleton(x);
    bool earlier_return = false;
    for (std::size_t k = 1; k < n; ++k) {
      orbit = image_of_set(map, orbit);
      if (orbit.contains(x)) {
        earlier_return = true;
        break;
      }
    }
    if (earlier_return) continue;
    orbit = image_of_set(map, orbit);
    if (orbit.contains(x)) out.push_back(x);
  }
  return out;
}

Analysis::Analysis(const FiniteMetricSpace& space, const MultiMap& map, std::size_t max_points)
    : space_(space), map_(map), hmat_(hausdorff_matrix(space, map, max_points)) {}

ContractionFactor Analysis::lambda_min_contraction() const {
  const std::size_t n = space_.size();
  if (n < 2) {
    throw PreconditionError(
        fmt::format("contraction factor needs at least 2 points, space has {}", n));
  }
  ContractionFactor best{hmat_[0][1] / space_.distance(0, 1), {0, 1}};
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) {
      Rational ratio = hmat_[i][j] / space_.distance(i, j);
      if (ratio > best.value) best = {std::move(ratio), {i, j}};
    }
  }
  return best;
}

PerimeterFactor Analysis::lambda_min_perimeter() const {
  const std::size_t n = space_.size();
  if (n < 3) {
    throw PreconditionError(
        fmt::format("perimeter factor needs at least 3 points, space has {}", n));
  }
  std::optional<PerimeterFactor> best;
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) {
      for (PointId k = j + 1; k < n; ++k) {
        Rational image_perimeter = hmat_[i][j] + hmat_[j][k] + hmat_[i][k];
        Rational point_perimeter =
            space_.distance(i, j) + space_.distance(j, k) + space_.distance(i, k);
        Rational ratio = image_perimeter / point_perimeter;
        if (!best || ratio > best->value) best = {std::move(ratio), {i, j, k}};
      }
    }
  }
  return *best;
}

bool Analysis::is_mlcp(const Rational& lambda) const {
  if (lambda.sign() < 0 || lambda >= 1) {
    throw PreconditionError(
        fmt::format("lambda = {} outside [0, 1)", lambda.str()));
  }
  const std::size_t n = space_.size();
  if (n < 3) {
    throw PreconditionError(
        fmt::format("perimeter condition needs at least 3 points, space has {}", n));
  }
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) {
      for (PointId k = j + 1; k < n; ++k) {
        Rational lhs = hmat_[i][j] + hmat_[j][k] + hmat_[i][k];
        Rational rhs =
            lambda * (space_.distance(i, j) + space_.distance(j, k) + space_.distance(i, k));
        if (lhs > rhs) return false;
      }
    }
  }
  return true;
}

FormingTriangle Analysis::forming_triangle() const {
  const std::size_t n = space_.size();
  for (PointId x = 0; x < n; ++x) {
    for (PointId y : map_.image(x).members()) {
      if (y == x) continue;
      const Rational& bound = hmat_[x][y];
      bool found = false;
      for (PointId z : map_.image(y).members()) {
        if (hmat_[x][z].sign() > 0 && space_.distance(y, z) <= bound) {
          found = true;
          break;
        }
      }
      if (!found) return {false, PairWitness{x, y}};
    }
  }
  return {true, std::nullopt};
}

Lemma1Report Analysis::lemma1() const {
  Lemma1Report r;
  r.antecedent = fixed_points().empty() && prime_period_points(map_, 2).empty();
  r.consequent = forming_triangle().holds;
  r.vacuous = !r.antecedent;
  r.verdict = !r.antecedent || r.consequent;
  return r;
}

}  // namespace multifix
