#include "writhe/histogram.hpp"

#include <algorithm>
#include <cmath>

#include "writhe/errors.hpp"

namespace writhe {

namespace {

std::vector<double> uniform_edges(const HistogramSpec& spec) {
  if (spec.bins < 1) throw DomainError("histogram needs at least one bin");
  if (!(spec.lo < spec.hi) || !std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
    throw DomainError("histogram range must be finite with lo < hi");
  }
  std::vector<double> edges(spec.bins + 1);
  const double width = (spec.hi - spec.lo) / static_cast<double>(spec.bins);
  for (std::size_t i = 0; i <= spec.bins; ++i) edges[i] = spec.lo + width * static_cast<double>(i);
  edges.back() = spec.hi;
  return edges;
}

}  // namespace

Histogram::Histogram(const HistogramSpec& spec) : Histogram(uniform_edges(spec)) {}

Histogram::Histogram(std::vector<double> edges) : edges_(std::move(edges)) {
  if (edges_.size() < 2) throw DomainError("histogram needs at least two edges");
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (!(edges_[i - 1] < edges_[i])) throw DomainError("histogram edges must be strictly increasing");
  }
  counts_.assign(edges_.size() - 1, 0);
}

void Histogram::add(double x) {
  ++total_;
  if (x < edges_.front()) {
    ++underflow_;
    return;
  }
  if (!(x < edges_.back())) {
    ++overflow_;  // also catches NaN
    return;
  }
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  ++counts_[static_cast<std::size_t>(it - edges_.begin()) - 1];
}

void Histogram::merge(const Histogram& other) {
  if (other.edges_ != edges_) throw DomainError("cannot merge histograms with different bin edges");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  underflow_ += other.underflow_;
  overflow_ += other.overflow_;
  total_ += other.total_;
}

double Histogram::density(std::size_t bin) const {
  if (total_ == 0) return 0.0;
  const double width = edges_[bin + 1] - edges_[bin];
  return static_cast<double>(counts_[bin]) / (static_cast<double>(total_) * width);
}

double Histogram::fraction_below_edge(std::size_t i) const {
  if (total_ == 0) return 0.0;
  std::int64_t below = underflow_;
  for (std::size_t j = 0; j < i && j < counts_.size(); ++j) below += counts_[j];
  if (i > counts_.size()) below += overflow_;
  return static_cast<double>(below) / static_cast<double>(total_);
}

}  // namespace writhe
