#include "multifix/generator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <numeric>

namespace multifix {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::logic_error("empty draw range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % bound;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index, std::uint64_t lane) {
  return splitmix64(splitmix64(master ^ (0x9E3779B97F4A7C15ULL * (index + 1))) ^
                    (0xC2B2AE3D27D4EB4FULL * (lane + 1)));
}

void check_gen_config(const GenConfig& config) {
  if (config.n_points < 3) {
    throw PreconditionError(
        fmt::format("instance stream needs n_points >= 3, got {}", config.n_points));
  }
  if (config.n_points > kDefaultMaxPoints) {
    throw PreconditionError(fmt::format("n_points = {} above the cap of {}", config.n_points,
                                        kDefaultMaxPoints));
  }
  if (config.weight_max < 1) throw PreconditionError("weight_max must be at least 1");
  if (config.image_size_min < 1 || config.image_size_min > config.image_size_max ||
      config.image_size_max > config.n_points) {
    throw PreconditionError(
        fmt::format("image sizes [{}, {}] invalid for {} points", config.image_size_min,
                    config.image_size_max, config.n_points));
  }
}

FiniteMetricSpace gen_random_space(std::size_t n, std::uint64_t weight_max, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("a space needs at least one point");
  if (n > kDefaultMaxPoints) {
    throw PreconditionError(fmt::format("n = {} above the cap of {}", n, kDefaultMaxPoints));
  }
  if (weight_max < 1) throw PreconditionError("weight_max must be at least 1");

  Rng rng(seed);
  std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w[i][j] = w[j][i] = rng.uniform(1, weight_max);
    }
  }
  // Floyd-Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::uint64_t via = w[i][k] + w[k][j];
        if (k != i && k != j && via < w[i][j]) w[i][j] = via;
      }
    }
  }

  std::vector<std::string> labels;
  RationalMatrix dist(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = Rational(static_cast<long long>(w[i][j]));
    }
  }
  return make_space(std::move(labels), std::move(dist));
}

MultiMap gen_random_map(const FiniteMetricSpace& space, std::size_t size_min,
                        std::size_t size_max, std::uint64_t seed) {
  const std::size_t n = space.size();
  if (size_min < 1 || size_min > size_max || size_max > n) {
    throw PreconditionError(
        fmt::format("image sizes [{}, {}] invalid for {} points", size_min, size_max, n));
  }
  Rng rng(seed);
  std::vector<PointSet> images;
  std::vector<PointId> pool(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t k = rng.uniform(size_min, size_max);
    std::iota(pool.begin(), pool.end(), PointId{0});
    // Partial Fisher-Yates: the first k entries become the image.
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + rng.below(n - i)]);
    }
    images.emplace_back(std::vector<PointId>(pool.begin(), pool.begin() + k));
  }
  return MultiMap(n, std::move(images));
}

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::vector<BigInt> numeric_values(std::size_t n) {
  std::vector<BigInt> values;
  for (std::size_t i = 0; i < n; ++i) values.emplace_back(i);
  return values;
}

Instance make_ex1() {
  auto space = make_space(numeric_labels(6), parity_matrix(numeric_values(6)));
  std::vector<PointSet> images;
  for (PointId x = 0; x < 6; ++x) {
    if (x <= 1) {
      images.push_back(PointSet({2, 3}));
    } else if (x <= 3) {
      images.push_back(PointSet({4, 5}));
    } else {
      images.push_back(PointSet({0, 1}));
    }
  }
  return {std::move(space), MultiMap(6, std::move(images))};
}

Instance make_cyclic7() {
  auto space = make_space(numeric_labels(7), parity_matrix(numeric_values(7)));
  std::vector<PointSet> images;
  for (PointId x = 0; x < 7; ++x) {
    std::vector<PointId> window;
    for (PointId k = 1; k <= 4; ++k) window.push_back((x + k) % 7);
    images.emplace_back(std::move(window));
  }
  return {std::move(space), MultiMap(7, std::move(images))};
}

Instance make_nadler_gap() {
  std::vector<Rational> coords = {0, 1, 4, 5, 6};
  std::vector<std::string> labels;
  for (const auto& c : coords) labels.push_back(c.str());
  auto space = make_space(std::move(labels), line_matrix(coords));
  std::vector<PointSet> images;
  images.push_back(PointSet({0}));
  images.push_back(PointSet({1}));
  for (int k = 0; k < 3; ++k) images.push_back(PointSet({0, 1}));
  return {std::move(space), MultiMap(5, std::move(images))};
}

}  // namespace

Instance builtin_instance(const std::string& name) {
  if (name == "ex1") return make_ex1();
  if (name == "cyclic7") return make_cyclic7();
  if (name == "nadler-gap") return make_nadler_gap();
  throw PreconditionError(
      fmt::format("unknown builtin instance '{}' (have: ex1, cyclic7, nadler-gap)", name));
}

}  // namespace multifix
