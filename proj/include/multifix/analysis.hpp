#pragma once

#include <optional>
#include <vector>

#include "multifix/metric.hpp"

namespace multifix {

struct PairWitness {
  PointId a;
  PointId b;
  bool operator==(const PairWitness&) const = default;
};

struct TripletWitness {
  PointId a;
  PointId b;
  PointId c;
  bool operator==(const TripletWitness&) const = default;
};

// Minimal factor for H(Tx,Ty) <= lambda * d(x,y): the maximum of H/d over
// unordered distinct pairs, with the lexicographically smallest attaining
// pair. The map admits some contraction factor in [0,1) iff value < 1.
struct ContractionFactor {
  Rational value;
  PairWitness witness;
};

// Minimal factor for the image-perimeter inequality over pairwise-distinct
// triplets, with the lexicographically smallest attaining triplet.
struct PerimeterFactor {
  Rational value;
  TripletWitness witness;
};

struct FormingTriangle {
  bool holds = false;
  // First (x, y) in lexicographic order with no admissible z, when !holds.
  std::optional<PairWitness> failure;
};

struct Lemma1Report {
  bool antecedent = false;  // no fixed points and no prime-period-2 points
  bool consequent = false;  // forming-triangle property holds
  bool vacuous = false;     // antecedent is false
  bool verdict = false;     // !antecedent || consequent
};

// Direct membership scan x in T(x); the brute-force oracle every iteration
// result is checked against.
std::vector<PointId> fixed_points(const MultiMap& map);

// Union of T(s) over s in S.
PointSet image_of_set(const MultiMap& map, const PointSet& s);

// Points with x in T^n(x), T^n the n-fold set image.
std::vector<PointId> periodic_points(const MultiMap& map, std::size_t n);

// Points with x in T^n(x) and x not in T^k(x) for any 1 <= k < n.
std::vector<PointId> prime_period_points(const MultiMap& map, std::size_t n);

// Shares one precomputed Hausdorff matrix across every decider for a single
// (space, map) pair. Holds references; keep the pair alive while in use.
class Analysis {
 public:
  Analysis(const FiniteMetricSpace& space, const MultiMap& map,
           std::size_t max_points = kDefaultMaxPoints);

  const FiniteMetricSpace& space() const { return space_; }
  const MultiMap& map() const { return map_; }
  const Rational& image_hausdorff(PointId a, PointId b) const { return hmat_[a][b]; }

  ContractionFactor lambda_min_contraction() const;
  PerimeterFactor lambda_min_perimeter() const;

  // Direct triplet scan of the non-strict perimeter inequality at lambda.
  // Deliberately does not consult lambda_min_perimeter: the equivalence of
  // the two routes is a tested property.
  bool is_mlcp(const Rational& lambda) const;

  std::vector<PointId> fixed_points() const { return ::multifix::fixed_points(map_); }

  // For every x and y in T(x) with y != x there must be a z in T(y) with
  // H(T(x),T(z)) > 0 and d(y,z) <= H(T(x),T(y)). On a finite space this
  // non-strict form is equivalent to the arbitrarily-small-slack one: the
  // candidate set for z is finite, so the infimum over slacks is attained.
  FormingTriangle forming_triangle() const;

  Lemma1Report lemma1() const;

 private:
  const FiniteMetricSpace& space_;
  const MultiMap& map_;
  RationalMatrix hmat_;
};

}  // namespace multifix
