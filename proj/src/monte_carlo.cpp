#include "writhe/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "writhe/errors.hpp"
#include "writhe/fast_writhe.hpp"
#include "writhe/limit_law.hpp"
#include "writhe/moments.hpp"

namespace writhe {

namespace {

// Everything one stream contributes; merged in stream order.
struct StreamTally {
  Histogram histogram;
  std::vector<double> power_sums;  // index k: sum of W^k, k = 0..2 k_max
  std::int64_t writhe_sum = 0;
  double writhe_square_sum = 0.0;
  std::int64_t count = 0;
};

StreamTally run_stream(int n, std::int64_t num_samples, SampleStream& stream, const HistogramSpec& bins,
                       int k_max, WritheAlgorithm algorithm) {
  if (n < 1) throw DomainError("n must be positive");
  if (num_samples < 0) throw DomainError("sample count must be nonnegative");
  StreamTally tally{Histogram(bins), std::vector<double>(2 * static_cast<std::size_t>(k_max) + 1, 0.0)};
  const std::size_t size = 2 * static_cast<std::size_t>(n) + 1;
  for (std::int64_t s = 0; s < num_samples; ++s) {
    const std::int64_t w = compute_writhe(random_permutation(size, stream), algorithm);
    const double normalized = static_cast<double>(w) / n;
    tally.histogram.add(normalized);
    double power = 1.0;
    for (auto& sum : tally.power_sums) {
      sum += power;
      power *= normalized;
    }
    tally.writhe_sum += w;
    tally.writhe_square_sum += static_cast<double>(w) * static_cast<double>(w);
    ++tally.count;
  }
  return tally;
}

std::vector<MomentEstimate> moments_from(const StreamTally& tally, int k_max) {
  std::vector<MomentEstimate> out;
  const auto count = static_cast<double>(tally.count);
  for (int k = 1; k <= k_max; ++k) {
    const double mean = tally.power_sums[k] / count;
    const double mean_sq = tally.power_sums[2 * k] / count;
    const double var = std::max(0.0, mean_sq - mean * mean);
    const double se = tally.count > 1 ? std::sqrt(var / (count - 1.0)) : 0.0;
    out.push_back({k, mean, se});
  }
  return out;
}

void require_k_max(int k_max) {
  if (k_max < 1 || k_max > 8) throw DomainError("k_max must lie in 1..8");
}

}  // namespace

Permutation random_permutation(std::size_t size, SampleStream& stream) {
  if (size == 0) throw DomainError("permutation size must be positive");
  std::vector<Permutation::value_type> images(size);
  std::iota(images.begin(), images.end(), 0U);
  for (std::size_t i = size - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(stream.uniform_below(i + 1));
    std::swap(images[i], images[j]);
  }
  return make_unchecked(std::move(images));
}

std::int64_t compute_writhe(const Permutation& p, WritheAlgorithm algorithm) {
  return algorithm == WritheAlgorithm::fast ? writhe_fast(p) : writhe_naive(p);
}

Histogram empirical_distribution(int n, std::int64_t num_samples, SampleStream& stream, const HistogramSpec& bins,
                                 WritheAlgorithm algorithm) {
  return run_stream(n, num_samples, stream, bins, 1, algorithm).histogram;
}

std::vector<MomentEstimate> empirical_moments(int n, std::int64_t num_samples, SampleStream& stream, int k_max,
                                              WritheAlgorithm algorithm) {
  require_k_max(k_max);
  return moments_from(run_stream(n, num_samples, stream, HistogramSpec{}, k_max, algorithm), k_max);
}

SimulationResult simulate(const SimulationConfig& config) {
  require_k_max(config.k_max);
  if (config.streams < 1) throw DomainError("need at least one stream");
  if (config.threads < 1) throw DomainError("need at least one thread");
  if (config.samples < 1) throw DomainError("need at least one sample");
  if (config.n < 1) throw DomainError("n must be positive");

  const auto streams = static_cast<std::size_t>(config.streams);
  std::vector<StreamTally> tallies(streams);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s = next++; s < streams; s = next++) {
      const std::int64_t share = config.samples / config.streams +
                                 (static_cast<std::int64_t>(s) < config.samples % config.streams ? 1 : 0);
      SampleStream stream(config.seed, s);
      tallies[s] = run_stream(config.n, share, stream, config.bins, config.k_max, config.algorithm);
    }
  };
  const auto thread_count = std::min<std::size_t>(static_cast<std::size_t>(config.threads), streams);
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  }

  StreamTally total{Histogram(config.bins), std::vector<double>(2 * static_cast<std::size_t>(config.k_max) + 1, 0.0)};
  for (const auto& tally : tallies) {
    total.histogram.merge(tally.histogram);
    for (std::size_t k = 0; k < total.power_sums.size(); ++k) total.power_sums[k] += tally.power_sums[k];
    total.writhe_sum += tally.writhe_sum;
    total.writhe_square_sum += tally.writhe_square_sum;
    total.count += tally.count;
  }

  SimulationResult result{total.histogram, moments_from(total, config.k_max)};
  const auto count = static_cast<double>(total.count);
  result.mean_writhe = static_cast<double>(total.writhe_sum) / count;
  const double var = std::max(0.0, total.writhe_square_sum / count - result.mean_writhe * result.mean_writhe);
  result.mean_writhe_standard_error = total.count > 1 ? std::sqrt(var / (count - 1.0)) : 0.0;
  result.samples = total.count;
  return result;
}

LimitDiagnostics compare_to_limit(const Histogram& histogram, std::span<const MomentEstimate> moments) {
  if (histogram.total() == 0) throw DomainError("compare_to_limit: empty histogram");
  LimitDiagnostics out{0.0, 0.0, {}};
  const auto edges = histogram.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double gap = std::fabs(histogram.fraction_below_edge(i) - cdf_W(edges[i]));
    if (gap > out.ks_statistic) {
      out.ks_statistic = gap;
      out.ks_location = edges[i];
    }
  }
  for (const auto& m : moments) {
    const double limit = to_double(mu_k(m.k));
    out.moment_gaps.push_back({m.k, m.value, limit, m.value - limit});
  }
  return out;
}

}  // namespace writhe
