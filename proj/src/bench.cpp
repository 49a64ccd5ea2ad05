#include "writhe/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "writhe/errors.hpp"

namespace writhe {

std::vector<BenchPoint> bench_writhe(std::span<const std::size_t> sizes, WritheAlgorithm algorithm, int repetitions,
                                     std::uint64_t seed) {
  if (repetitions < 1) throw DomainError("need at least one repetition");
  std::vector<BenchPoint> out;
  SampleStream stream(seed, 0);
  for (const std::size_t size : sizes) {
    const auto p = random_permutation(size, stream);
    double best = std::numeric_limits<double>::infinity();
    std::int64_t w = 0;
    for (int r = 0; r < repetitions; ++r) {
      const auto start = std::chrono::steady_clock::now();
      w = compute_writhe(p, algorithm);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      best = std::min(best, elapsed.count());
    }
    out.push_back({size, best, w});
  }
  return out;
}

double fitted_exponent(std::span<const BenchPoint> points) {
  if (points.size() < 2) throw DomainError("need at least two sizes to fit an exponent");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.size));
    const double y = std::log(std::max(p.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<std::size_t> power_ladder(int lo, int hi) {
  if (lo < 0 || hi < lo || hi > 40) throw DomainError("bad power ladder bounds");
  std::vector<std::size_t> sizes;
  for (int k = lo; k <= hi; ++k) sizes.push_back((std::size_t{1} << k) + 1);
  return sizes;
}

}  // namespace writhe
