#include "multifix/metric.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <unordered_map>

namespace multifix {

PointSet::PointSet(std::vector<PointId> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("PointSet must be nonempty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PointSet::contains(PointId p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

namespace {

std::string describe(const MetricViolation& v) {
  return v.detail;
}

}  // namespace

MetricViolationError::MetricViolationError(std::vector<MetricViolation> violations)
    : ParseError([&violations] {
        std::string msg = fmt::format("{} metric axiom violation(s):", violations.size());
        for (const auto& v : violations) msg += "\n  " + describe(v);
        return msg;
      }()),
      violations_(std::move(violations)) {}

std::optional<PointId> FiniteMetricSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<PointId>(i);
  }
  return std::nullopt;
}

MetricValidation validate_metric(std::vector<std::string> labels, RationalMatrix dist) {
  MetricValidation out;
  const std::size_t n = labels.size();

  bool square = dist.size() == n;
  for (const auto& row : dist) square = square && row.size() == n;
  if (!square || n == 0) {
    out.violations.push_back({MetricViolation::Kind::NonSquareMatrix,
                              {dist.size(), 0, 0},
                              fmt::format("distance matrix is not {0}x{0}", n)});
    return out;
  }

  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = seen.emplace(labels[i], i);
    if (!inserted) {
      out.violations.push_back({MetricViolation::Kind::DuplicateLabel,
                                {it->second, i, 0},
                                fmt::format("duplicate label '{}' at {} and {}", labels[i],
                                            it->second, i)});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!dist[i][i].is_zero()) {
      out.violations.push_back({MetricViolation::Kind::DiagonalNonzero,
                                {i, i, 0},
                                fmt::format("d({0},{0}) = {1}, expected 0", i, dist[i][i].str())});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i][j].sign() <= 0) {
        out.violations.push_back(
            {MetricViolation::Kind::OffDiagonalNonpositive,
             {i, j, 0},
             fmt::format("d({},{}) = {} is not positive", i, j, dist[i][j].str())});
      }
      if (dist[i][j] != dist[j][i]) {
        out.violations.push_back({MetricViolation::Kind::Asymmetric,
                                  {i, j, 0},
                                  fmt::format("d({0},{1}) = {2} but d({1},{0}) = {3}", i, j,
                                              dist[i][j].str(), dist[j][i].str())});
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t via = 0; via < n; ++via) {
        if (via == a || via == b) continue;
        if (dist[a][b] > dist[a][via] + dist[via][b]) {
          out.violations.push_back(
              {MetricViolation::Kind::TriangleInequality,
               {a, b, via},
               fmt::format("d({0},{1}) = {3} > d({0},{2}) + d({2},{1}) = {4}", a, b, via,
                           dist[a][b].str(), (dist[a][via] + dist[via][b]).str())});
        }
      }
    }
  }

  if (out.violations.empty()) {
    out.space = FiniteMetricSpace(std::move(labels), std::move(dist));
  }
  return out;
}

FiniteMetricSpace make_space(std::vector<std::string> labels, RationalMatrix dist) {
  auto checked = validate_metric(std::move(labels), std::move(dist));
  if (!checked.ok()) throw MetricViolationError(std::move(checked.violations));
  return *std::move(checked.space);
}

RationalMatrix parity_matrix(const std::vector<BigInt>& values) {
  const std::size_t n = values.size();
  RationalMatrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (values[i] == values[j]) {
        d[i][j] = 0;
      } else if ((values[i] - values[j]) % 2 == 0) {
        d[i][j] = 2;
      } else {
        d[i][j] = 1;
      }
    }
  }
  return d;
}

RationalMatrix line_matrix(const std::vector<Rational>& coords) {
  const std::size_t n = coords.size();
  RationalMatrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = abs(coords[i] - coords[j]);
    }
  }
  return d;
}

MultiMap::MultiMap(std::size_t ambient_size, std::vector<PointSet> images)
    : images_(std::move(images)) {
  if (images_.size() != ambient_size) {
    throw std::invalid_argument(fmt::format("map has {} images for {} points", images_.size(),
                                            ambient_size));
  }
  for (const auto& img : images_) {
    if (img.members().back() >= ambient_size) {
      throw std::invalid_argument("image member outside the ambient space");
    }
  }
}

Rational point_set_distance(const FiniteMetricSpace& space, PointId p, const PointSet& s) {
  const auto& members = s.members();
  Rational best = space.distance(p, members.front());
  for (std::size_t i = 1; i < members.size(); ++i) {
    const Rational& d = space.distance(p, members[i]);
    if (d < best) best = d;
  }
  return best;
}

namespace {

Rational directed_hausdorff(const FiniteMetricSpace& space, const PointSet& from,
                            const PointSet& to) {
  Rational worst = 0;
  for (PointId p : from.members()) {
    Rational d = point_set_distance(space, p, to);
    if (d > worst) worst = std::move(d);
  }
  return worst;
}

}  // namespace

Rational hausdorff(const FiniteMetricSpace& space, const PointSet& a, const PointSet& b) {
  Rational ab = directed_hausdorff(space, a, b);
  Rational ba = directed_hausdorff(space, b, a);
  return ab > ba ? ab : ba;
}

RationalMatrix hausdorff_matrix(const FiniteMetricSpace& space, const MultiMap& map,
                                std::size_t max_points) {
  const std::size_t n = space.size();
  if (n > max_points) {
    throw PreconditionError(
        fmt::format("space has {} points, above the configured cap of {}", n, max_points));
  }
  if (map.ambient_size() != n) {
    throw std::invalid_argument("map does not cover the space");
  }
  RationalMatrix h(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      h[i][j] = hausdorff(space, map.image(static_cast<PointId>(i)),
                          map.image(static_cast<PointId>(j)));
      h[j][i] = h[i][j];
    }
  }
  return h;
}

}  // namespace multifix
