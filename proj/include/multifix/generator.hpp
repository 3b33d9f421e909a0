#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "multifix/metric.hpp"

namespace multifix {

// Deterministic random stream. mt19937_64 has a standard-specified output
// sequence and the bounded draw below avoids the implementation-defined
// std::uniform_int_distribution, so identical seeds reproduce identical
// instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 eng_;
};

// Derives the seed for one unit of work from (master seed, stream index,
// lane), so an instance stream can be partitioned across workers and still
// produce the exact same instances.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index, std::uint64_t lane);

struct GenConfig {
  std::size_t n_points = 5;  // >= 3
  std::uint64_t weight_max = 9;
  std::size_t image_size_min = 1;
  std::size_t image_size_max = 2;
  std::uint64_t seed = 0;
  std::uint64_t count = 100;
};

// Throws PreconditionError if the config violates its own bounds.
void check_gen_config(const GenConfig& config);

// Uniform integer weights in [1, weight_max] on the complete graph over n
// points, closed under all-pairs shortest paths. The closure forces the
// triangle inequality; weights >= 1 force positivity. Always validates.
FiniteMetricSpace gen_random_space(std::size_t n, std::uint64_t weight_max, std::uint64_t seed);

// Per point, a uniformly random subset whose size is drawn uniformly from
// [size_min, size_max].
MultiMap gen_random_map(const FiniteMetricSpace& space, std::size_t size_min,
                        std::size_t size_max, std::uint64_t seed);

// The three instances studied in depth: "ex1" (6-point parity metric with a
// 3-cycle of pair images), "cyclic7" (7-point parity metric, each image a
// window of 4 successors mod 7), and "nadler-gap" (usual metric on
// {0,1,4,5,6}, two singleton fixed images plus {0,1} elsewhere).
Instance builtin_instance(const std::string& name);

inline constexpr const char* kBuiltinNames[] = {"ex1", "cyclic7", "nadler-gap"};

}  // namespace multifix
