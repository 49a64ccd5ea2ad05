#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace writhe {

struct HistogramSpec {
  double lo = -4.0;
  double hi = 4.0;
  std::size_t bins = 161;
};

/// Binned counts over half-open bins [edge_i, edge_{i+1}), with explicit
/// underflow (x < first edge) and overflow (x >= last edge) counters.
/// Merging is associative and commutative.
class Histogram {
 public:
  explicit Histogram(const HistogramSpec& spec = {});
  explicit Histogram(std::vector<double> edges);

  void add(double x);
  void merge(const Histogram& other);

  std::size_t num_bins() const noexcept { return counts_.size(); }
  std::span<const double> edges() const noexcept { return edges_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  std::int64_t underflow() const noexcept { return underflow_; }
  std::int64_t overflow() const noexcept { return overflow_; }
  std::int64_t total() const noexcept { return total_; }

  /// count / (total * bin width).
  double density(std::size_t bin) const;

  /// Fraction of samples strictly below edges()[i].
  double fraction_below_edge(std::size_t i) const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  std::vector<double> edges_;
  std::vector<std::int64_t> counts_;
  std::int64_t underflow_ = 0;
  std::int64_t overflow_ = 0;
  std::int64_t total_ = 0;
};

}  // namespace writhe
