#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "writhe/permutation.hpp"
#include "writhe/rational.hpp"

namespace writhe {

/// Two circular rankings of the same N observations, each a bijection onto Z_N.
class RankPairs {
 public:
  RankPairs(std::vector<std::uint32_t> r, std::vector<std::uint32_t> s);

  /// r_i = i, s_i = p(i).
  static RankPairs from_permutation(const Permutation& p);

  std::size_t size() const noexcept { return r_.size(); }
  const std::vector<std::uint32_t>& r() const noexcept { return r_; }
  const std::vector<std::uint32_t>& s() const noexcept { return s_; }

 private:
  std::vector<std::uint32_t> r_;
  std::vector<std::uint32_t> s_;
};

/// Odd function of period one, given by its values on (-1/2, 1/2).
struct PeriodicKernel {
  std::string name;
  std::function<double(double)> on_open_interval;
  /// Value at t = 1/2 mod 1; absent where the kernel is discontinuous there.
  std::optional<double> at_half;
  /// N * f(d/N) as an integer, d the symmetric representative with |d| < N/2.
  std::function<std::int64_t(std::int64_t d, std::int64_t N)> scaled_exact;

  /// Evaluates at any real t using periodicity and oddness.
  double operator()(double t) const;
};

PeriodicKernel kernel_alpha();  // sign(t)
PeriodicKernel kernel_beta();   // sign(t)(1 - 2|t|)
PeriodicKernel kernel_gamma();  // sin(2 pi t)

/// sum_{i<j} f((r_j - r_i)/N) g((s_j - s_i)/N). Accumulates exactly when both
/// kernels have an integer scaled form.
double r_fg(const RankPairs& data, const PeriodicKernel& f, const PeriodicKernel& g);

/// Exact value; both kernels need `scaled_exact`.
Rational r_fg_exact(const RankPairs& data, const PeriodicKernel& f, const PeriodicKernel& g);

/// Fisher-Lee statistic, R_beta,beta.
double fisher_lee_delta(const RankPairs& data);

/// Mardia statistic, R_gamma,gamma.
double mardia_pi(const RankPairs& data);

/// Writhe through the averaged weights alpha_n(y-x) beta_n(p(y)-p(x)).
std::int64_t writhe_avg_form(const Permutation& p);

struct AngularRanks {
  RankPairs ranks;
  std::size_t ties = 0;  // adjacent equal angles after sorting, summed over both columns
  std::vector<std::string> warnings;
};

/// Circular ranks of paired angles in radians, reduced mod 2 pi. Ties keep input order.
AngularRanks circular_ranks(const std::vector<double>& theta, const std::vector<double>& phi);

/// Reads a two-column CSV (theta, phi). An optional non-numeric header line is skipped.
AngularRanks read_angles_csv(std::istream& in);

}  // namespace writhe
