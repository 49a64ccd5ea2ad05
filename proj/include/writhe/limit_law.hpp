#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>

#include "writhe/sample_stream.hpp"

namespace writhe {

// The limit law W of the normalized writhe. Its characteristic function is
// prod_{n>=1} sech(2t / (pi n)), equivalently W ~ (4/pi^2) sum_n A_n / n with
// A_n iid of density sech(x) / pi.

enum class TailMode { drop, gaussian };

/// How an infinite series is cut off: terms up to `terms`, plus optional
/// Gaussian completion carrying the exact variance of the discarded terms.
struct TruncationPolicy {
  int terms = 1000;
  TailMode tail = TailMode::gaussian;
};

/// sum_{n > k} 1/n^2.
double inverse_square_tail(int k);

/// Density sech(x) / pi, its CDF (2/pi) atan(e^x), and the inverse CDF log(tan(pi u / 2)).
double sech_pdf(double x);
double sech_cdf(double x);
double sech_quantile(double u);

double sample_sech(SampleStream& stream);

/// (4/pi^2) sum_{n<=K} A_n / n, plus the Gaussian tail if requested.
double sample_W(SampleStream& stream, const TruncationPolicy& policy);

/// (4/pi^2) sum_{n<=K} sum_{m odd, m<=K} L_mn / (mn) with L_mn Laplace(0, 1),
/// plus the Gaussian tail (exact missing variance) if requested.
double sample_W_laplace(SampleStream& stream, const TruncationPolicy& policy);

/// prod_{n<=K} sech(2t / (pi n)) times exp(-(2t^2/pi^2) sum_{n>K} n^-2).
double cf_W(double t, int terms = 1000);

/// Fourier inversion of cf_W: density, distribution function and quantiles.
///
/// Integrals run over [0, T] where T is the first point with cf_W(T) below
/// `cutoff_threshold`; cf_W is even, positive and decreasing on t > 0 so the
/// neglected mass is bounded by the threshold times the decay scale. Values
/// of cf_W are memoized per instance, so an instance must not be shared
/// between threads without external synchronization.
class LimitLaw {
 public:
  struct Options {
    int terms = 1000;
    double cutoff_threshold = 1e-12;
    double relative_tolerance = 1e-8;
  };

  LimitLaw();
  explicit LimitLaw(Options options);

  double cf(double t) const;
  double pdf(double x) const;
  double cdf(double x) const;
  /// P[|W| > t] computed as 1 - cdf(t) + cdf(-t).
  double two_sided_tail(double t) const;
  double quantile(double q) const;

  double cutoff() const noexcept { return cutoff_; }
  const Options& options() const noexcept { return options_; }

 private:
  Options options_;
  double cutoff_;
  mutable std::unordered_map<double, double> cf_cache_;
};

/// Convenience wrappers over a per-thread default LimitLaw.
double pdf_W(double x);
double cdf_W(double x);
double quantile_W(double q);

/// Least-squares slope of log P[|W| > t] against t over `t_grid` (increasing, positive).
double tail_rate_estimate(std::span<const double> t_grid);
double tail_rate_estimate(std::span<const double> t_grid, const LimitLaw& law);

}  // namespace writhe
