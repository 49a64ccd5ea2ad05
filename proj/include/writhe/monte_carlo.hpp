#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "writhe/histogram.hpp"
#include "writhe/permutation.hpp"
#include "writhe/sample_stream.hpp"

namespace writhe {

enum class WritheAlgorithm { fast, naive };

/// Uniform permutation of {0..N-1} by Fisher-Yates with unbiased index draws.
Permutation random_permutation(std::size_t size, SampleStream& stream);

std::int64_t compute_writhe(const Permutation& p, WritheAlgorithm algorithm);

struct MomentEstimate {
  int k;
  double value;
  double standard_error;
};

/// Histogram of W = w(pi)/n over uniform pi in S_{2n+1}.
Histogram empirical_distribution(int n, std::int64_t num_samples, SampleStream& stream,
                                 const HistogramSpec& bins = {},
                                 WritheAlgorithm algorithm = WritheAlgorithm::fast);

/// Sample moments E[W^k], k = 1..k_max, with standard errors.
std::vector<MomentEstimate> empirical_moments(int n, std::int64_t num_samples, SampleStream& stream, int k_max,
                                              WritheAlgorithm algorithm = WritheAlgorithm::fast);

struct SimulationConfig {
  int n = 50;
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  /// Logical streams; stream i uses SampleStream(seed, i) and draws a fixed
  /// share of the budget, so results do not depend on `threads`.
  int streams = 16;
  int threads = 1;
  int k_max = 4;
  HistogramSpec bins{};
  WritheAlgorithm algorithm = WritheAlgorithm::fast;
};

struct SimulationResult {
  Histogram histogram;
  std::vector<MomentEstimate> moments;
  double mean_writhe = 0.0;  // un-normalized w
  double mean_writhe_standard_error = 0.0;
  std::int64_t samples = 0;
};

SimulationResult simulate(const SimulationConfig& config);

struct MomentGap {
  int k;
  double empirical;
  double limit;
  double gap;
};

struct LimitDiagnostics {
  double ks_statistic;  // max over bin edges of |F_emp - cdf_W|
  double ks_location;
  std::vector<MomentGap> moment_gaps;
};

/// Compares an empirical histogram of normalized writhe with the limit law W.
LimitDiagnostics compare_to_limit(const Histogram& histogram, std::span<const MomentEstimate> moments = {});

}  // namespace writhe
