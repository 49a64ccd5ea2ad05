#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "writhe/monte_carlo.hpp"

namespace writhe {

struct BenchPoint {
  std::size_t size;
  double seconds;  // best of the repetitions
  std::int64_t writhe;
};

/// Times one writhe evaluation per repetition on a random permutation of each size.
std::vector<BenchPoint> bench_writhe(std::span<const std::size_t> sizes, WritheAlgorithm algorithm, int repetitions,
                                     std::uint64_t seed);

/// Least-squares slope of log(seconds) against log(size).
double fitted_exponent(std::span<const BenchPoint> points);

/// 2^k + 1 for k = lo..hi.
std::vector<std::size_t> power_ladder(int lo, int hi);

}  // namespace writhe
