#include "writhe/limit_law.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "writhe/errors.hpp"

namespace writhe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScale = 4.0 / (kPi * kPi);

void require_terms(int terms) {
  if (terms < 1) throw DomainError("series truncation needs at least one term, got " + std::to_string(terms));
}

// log cosh without overflow.
double log_cosh(double x) {
  const double a = std::fabs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double sum_inverse_squares(int k) {
  double s = 0.0;
  for (int n = k; n >= 1; --n) s += 1.0 / (static_cast<double>(n) * n);
  return s;
}

double sum_odd_inverse_squares(int k) {
  double s = 0.0;
  for (int m = (k % 2 ? k : k - 1); m >= 1; m -= 2) s += 1.0 / (static_cast<double>(m) * m);
  return s;
}

}  // namespace

double inverse_square_tail(int k) {
  if (k < 0) throw DomainError("inverse_square_tail needs k >= 0");
  return boost::math::trigamma(static_cast<double>(k) + 1.0);
}

double sech_pdf(double x) { return 1.0 / (kPi * std::cosh(x)); }

double sech_cdf(double x) { return (2.0 / kPi) * std::atan(std::exp(x)); }

double sech_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("sech_quantile needs u in (0, 1)");
  return std::log(std::tan(0.5 * kPi * u));
}

double sample_sech(SampleStream& stream) { return sech_quantile(stream.uniform()); }

double sample_W(SampleStream& stream, const TruncationPolicy& policy) {
  require_terms(policy.terms);
  double sum = 0.0;
  for (int n = 1; n <= policy.terms; ++n) sum += sample_sech(stream) / n;
  double value = kScale * sum;
  if (policy.tail == TailMode::gaussian) {
    value += std::sqrt(kScale * inverse_square_tail(policy.terms)) * stream.standard_normal();
  }
  return value;
}

double sample_W_laplace(SampleStream& stream, const TruncationPolicy& policy) {
  require_terms(policy.terms);
  double sum = 0.0;
  for (int n = 1; n <= policy.terms; ++n) {
    double inner = 0.0;
    for (int m = 1; m <= policy.terms; m += 2) {
      // Laplace as a difference of two unit exponentials.
      const double laplace = std::log(stream.uniform() / stream.uniform());
      inner += laplace / m;
    }
    sum += inner / n;
  }
  double value = kScale * sum;
  if (policy.tail == TailMode::gaussian) {
    // Var(L) = 2; the full double series has variance 2/3.
    const double kept = kScale * kScale * 2.0 * sum_inverse_squares(policy.terms) *
                        sum_odd_inverse_squares(policy.terms);
    const double missing = 2.0 / 3.0 - kept;
    if (missing > 0.0) value += std::sqrt(missing) * stream.standard_normal();
  }
  return value;
}

double cf_W(double t, int terms) {
  require_terms(terms);
  const double base = 2.0 * t / kPi;
  double log_value = 0.0;
  for (int n = 1; n <= terms; ++n) log_value -= log_cosh(base / n);
  log_value -= (2.0 * t * t / (kPi * kPi)) * inverse_square_tail(terms);
  return std::exp(log_value);
}

LimitLaw::LimitLaw() : LimitLaw(Options{}) {}

LimitLaw::LimitLaw(Options options) : options_(options), cutoff_(0.0) {
  require_terms(options_.terms);
  if (!(options_.cutoff_threshold > 0.0 && options_.cutoff_threshold < 1.0)) {
    throw DomainError("cutoff threshold must lie in (0, 1)");
  }
  double t = 1.0;
  while (cf_W(t, options_.terms) >= options_.cutoff_threshold) {
    t += 1.0;
    if (t > 1e4) throw ContractViolation("characteristic function failed to decay below the cutoff threshold");
  }
  cutoff_ = t;
  if (!(cf_W(cutoff_, options_.terms) < options_.cutoff_threshold)) {
    throw ContractViolation("cutoff condition does not hold");
  }
}

double LimitLaw::cf(double t) const {
  if (auto it = cf_cache_.find(t); it != cf_cache_.end()) return it->second;
  const double value = cf_W(t, options_.terms);
  cf_cache_.emplace(t, value);
  return value;
}

double LimitLaw::pdf(double x) const {
  using boost::math::quadrature::gauss_kronrod;
  auto integrand = [this, x](double t) { return cf(t) * std::cos(t * x); };
  const double integral =
      gauss_kronrod<double, 31>::integrate(integrand, 0.0, cutoff_, 20, options_.relative_tolerance);
  return integral / kPi;
}

double LimitLaw::cdf(double x) const {
  using boost::math::quadrature::gauss_kronrod;
  if (x == 0.0) return 0.5;
  // Integral of the density from 0 to x, with the x-integration done inside
  // the inversion integral: (1/pi) int_0^T cf(t) sin(t x) / t dt.
  auto integrand = [this, x](double t) {
    const double tx = t * x;
    const double ratio = std::fabs(tx) < 1e-8 ? x : std::sin(tx) / t;
    return cf(t) * ratio;
  };
  const double integral =
      gauss_kronrod<double, 31>::integrate(integrand, 0.0, cutoff_, 20, options_.relative_tolerance);
  return 0.5 + integral / kPi;
}

double LimitLaw::two_sided_tail(double t) const { return 1.0 - cdf(t) + cdf(-t); }

double LimitLaw::quantile(double q) const {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile needs q in (0, 1)");
  if (q == 0.5) return 0.0;
  double lo = -1.0;
  double hi = 1.0;
  while (cdf(lo) > q) lo *= 2.0;
  while (cdf(hi) < q) hi *= 2.0;
  for (int iter = 0; iter < 100 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

const LimitLaw& default_law() {
  thread_local const LimitLaw law;
  return law;
}

}  // namespace

double pdf_W(double x) { return default_law().pdf(x); }
double cdf_W(double x) { return default_law().cdf(x); }
double quantile_W(double q) { return default_law().quantile(q); }

double tail_rate_estimate(std::span<const double> t_grid) { return tail_rate_estimate(t_grid, default_law()); }

double tail_rate_estimate(std::span<const double> t_grid, const LimitLaw& law) {
  if (t_grid.size() < 2) throw DomainError("tail_rate_estimate needs at least two grid points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double previous = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    if (!(t > 0.0) || (i > 0 && !(t > previous))) {
      throw DomainError("tail grid must be positive and strictly increasing");
    }
    previous = t;
    const double tail = law.two_sided_tail(t);
    if (!(tail > 0.0)) throw DomainError("tail probability underflows at t = " + std::to_string(t));
    const double y = std::log(tail);
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
  }
  const double count = static_cast<double>(t_grid.size());
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace writhe
