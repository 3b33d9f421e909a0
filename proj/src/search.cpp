#include "multifix/search.hpp"

#include <fmt/format.h>

namespace multifix {

namespace {

const Rational kHalf(1, 2);
const Rational kThreeQuarters(3, 4);

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Contraction: return "contraction-regime";
    case Regime::OpenGap: return "open-gap";
    case Regime::Counterexample: return "counterexample-regime";
    case Regime::NonMlcp: return "non-mlcp";
  }
  return "?";
}

Regime regime_for(const Rational& lambda_min_perimeter) {
  if (lambda_min_perimeter < kHalf) return Regime::Contraction;
  if (lambda_min_perimeter < kThreeQuarters) return Regime::OpenGap;
  if (lambda_min_perimeter < 1) return Regime::Counterexample;
  return Regime::NonMlcp;
}

ClassifiedInstance classify(const FiniteMetricSpace& space, const MultiMap& map,
                            const std::vector<std::size_t>& extra_periods) {
  Analysis inst(space, map);

  ClassifiedInstance out;
  auto mlc = inst.lambda_min_contraction();
  auto mlcp = inst.lambda_min_perimeter();
  if (mlcp.value > mlc.value) {
    throw SelfCheckError(fmt::format(
        "perimeter factor {} exceeds pairwise factor {}; the triplet bound must be dominated",
        mlcp.value.str(), mlc.value.str()));
  }
  out.lambdas = {mlc.value, mlcp.value, mlc.witness, mlcp.witness};
  out.regime = regime_for(out.lambdas.lambda_min_mlcp);

  out.properties.fixed_points = inst.fixed_points();
  out.properties.prime_period_points[2] = prime_period_points(map, 2);
  for (std::size_t n : extra_periods) {
    out.properties.prime_period_points[n] = prime_period_points(map, n);
  }
  out.properties.forming_triangle = inst.forming_triangle();
  out.properties.lemma1 = inst.lemma1();
  return out;
}

namespace {

bool regime_selected(Regime regime, CandidateFilter filter) {
  switch (filter) {
    case CandidateFilter::OpenGap: return regime == Regime::OpenGap;
    case CandidateFilter::Counterexample: return regime == Regime::Counterexample;
    case CandidateFilter::All:
      return regime == Regime::OpenGap || regime == Regime::Counterexample;
  }
  return false;
}

// Tally + candidate + contradiction handling shared by both modes.
void record(HuntFindings& findings, std::uint64_t index, const FiniteMetricSpace& space,
            const MultiMap& map, const ClassifiedInstance& classified,
            const HuntOptions& options) {
  findings.total += 1;
  findings.regime_counts[static_cast<int>(classified.regime)] += 1;

  const bool fixed_point_free = classified.properties.fixed_points.empty();
  const bool forming = classified.properties.forming_triangle.holds;

  if (classified.regime == Regime::Contraction && forming && fixed_point_free) {
    throw SelfCheckError(fmt::format(
        "instance #{} has perimeter factor {} < 1/2 and the forming-triangle property but no "
        "fixed point; this contradicts the fixed-point guarantee. Instance:\n{}",
        index, classified.lambdas.lambda_min_mlcp.str(),
        emit_instance(document_for(space, map))));
  }

  if (fixed_point_free && forming && regime_selected(classified.regime, options.filter)) {
    findings.candidates.push_back({index, classified.lambdas.lambda_min_mlcp, classified.regime,
                                   document_for(space, map)});
  }
}

HuntFindings hunt_random(const GenConfig& config, const HuntOptions& options) {
  HuntFindings findings;
  for (std::uint64_t i = 0; i < config.count; ++i) {
    FiniteMetricSpace space =
        gen_random_space(config.n_points, config.weight_max, substream_seed(config.seed, i, 0));
    MultiMap map = gen_random_map(space, config.image_size_min, config.image_size_max,
                                  substream_seed(config.seed, i, 1));
    record(findings, i, space, map, classify(space, map), options);
  }
  return findings;
}

// Odometer over per-slot values in [lo, hi]; returns false once exhausted.
bool advance(std::vector<std::uint64_t>& slots, std::uint64_t lo, std::uint64_t hi) {
  for (auto& slot : slots) {
    if (slot < hi) {
      ++slot;
      return true;
    }
    slot = lo;
  }
  return false;
}

HuntFindings hunt_exhaustive(const GenConfig& config, const HuntOptions& options) {
  const std::size_t n = config.n_points;
  if (n > 4) {
    throw PreconditionError(
        fmt::format("exhaustive mode caps n_points at 4, got {}", n));
  }
  if (config.weight_max > 3) {
    throw PreconditionError(
        fmt::format("exhaustive mode caps weight_max at 3, got {}", config.weight_max));
  }

  const std::size_t edges = n * (n - 1) / 2;
  const std::uint64_t images_per_point = (1ULL << n) - 1;
  BigInt space_count = boost::multiprecision::pow(BigInt(config.weight_max),
                                                  static_cast<unsigned>(edges));
  BigInt map_count = boost::multiprecision::pow(BigInt(images_per_point),
                                                static_cast<unsigned>(n));
  BigInt total = space_count * map_count;
  if (total > BigInt(options.budget)) {
    throw PreconditionError(fmt::format(
        "exhaustive enumeration would classify {} instances, above the budget of {}",
        total.str(), options.budget));
  }

  HuntFindings findings;
  std::uint64_t index = 0;

  std::vector<std::uint64_t> weights(edges, 1);
  bool more_spaces = true;
  while (more_spaces) {
    RationalMatrix dist(n, std::vector<Rational>(n));
    {
      // Closure of the current weight assignment.
      std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n, 0));
      std::size_t e = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          w[i][j] = w[j][i] = weights[e++];
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i != j && w[i][k] + w[k][j] < w[i][j]) w[i][j] = w[i][k] + w[k][j];
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          dist[i][j] = Rational(static_cast<long long>(w[i][j]));
        }
      }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    FiniteMetricSpace space = make_space(std::move(labels), std::move(dist));

    std::vector<std::uint64_t> masks(n, 1);
    bool more_maps = true;
    while (more_maps) {
      std::vector<PointSet> images;
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<PointId> members;
        for (PointId b = 0; b < n; ++b) {
          if (masks[x] & (1ULL << b)) members.push_back(b);
        }
        images.emplace_back(std::move(members));
      }
      MultiMap map(n, std::move(images));
      record(findings, index++, space, map, classify(space, map), options);
      more_maps = advance(masks, 1, images_per_point);
    }
    more_spaces = advance(weights, 1, config.weight_max);
  }
  return findings;
}

}  // namespace

HuntFindings hunt_open_problem(const GenConfig& config, const HuntOptions& options) {
  check_gen_config(config);
  return options.exhaustive ? hunt_exhaustive(config, options) : hunt_random(config, options);
}

}  // namespace multifix
