#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "writhe/errors.hpp"
#include "writhe/limit_law.hpp"
#include "writhe/moments.hpp"
#include "writhe/sample_stream.hpp"

using namespace writhe;

namespace {

constexpr double kPi = std::numbers::pi;

// k-th derivative of cf_W at 0 by central differences.
double cf_derivative(int k, double h) {
  auto f = [](double t) { return cf_W(t); };
  switch (k) {
    case 2:
      return (-f(2 * h) + 16 * f(h) - 30 * f(0) + 16 * f(-h) - f(-2 * h)) / (12 * h * h);
    case 4:
      return (-f(3 * h) + 12 * f(2 * h) - 39 * f(h) + 56 * f(0) - 39 * f(-h) + 12 * f(-2 * h) - f(-3 * h)) /
             (6 * std::pow(h, 4));
    case 6:
      return (-f(4 * h) + 12 * f(3 * h) - 52 * f(2 * h) + 116 * f(h) - 150 * f(0) + 116 * f(-h) - 52 * f(-2 * h) +
              12 * f(-3 * h) - f(-4 * h)) /
             (4 * std::pow(h, 6));
  }
  throw std::logic_error("unsupported derivative order");
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-12);
}

struct Moments {
  double mean, m2, m4, se2, se4;
};

Moments moments_of(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  double s1 = 0, s2 = 0, s4 = 0, s8 = 0;
  for (double v : x) {
    const double v2 = v * v;
    s1 += v;
    s2 += v2;
    s4 += v2 * v2;
    s8 += v2 * v2 * v2 * v2;
  }
  const double m2 = s2 / n;
  const double m4 = s4 / n;
  return {s1 / n, m2, m4, std::sqrt((m4 - m2 * m2) / (n - 1)), std::sqrt((s8 / n - m4 * m4) / (n - 1))};
}

}  // namespace

TEST(Sech, CdfDifferentiatesToPdf) {
  for (double x = -6; x <= 6; x += 0.25) {
    const double h = 1e-5;
    const double numeric = (sech_cdf(x + h) - sech_cdf(x - h)) / (2 * h);
    EXPECT_NEAR(numeric, sech_pdf(x), 1e-9) << x;
    EXPECT_NEAR(sech_quantile(sech_cdf(x)), x, 1e-9);
  }
  EXPECT_NEAR(sech_quantile(0.5), 0.0, 1e-15);
  EXPECT_THROW(sech_quantile(0.0), DomainError);
  EXPECT_THROW(sech_quantile(1.0), DomainError);
}

TEST(Sech, SampleMoments) {
  SampleStream stream(31, 0);
  std::vector<double> x(1000000);
  for (auto& v : x) v = sample_sech(stream);
  const auto m = moments_of(x);
  EXPECT_NEAR(m.m2, kPi * kPi / 4, 3 * m.se2);
  EXPECT_NEAR(m.mean, 0.0, 3 * std::sqrt(m.m2 / static_cast<double>(x.size())));
}

TEST(SampleStream, Determinism) {
  SampleStream a(5, 3), b(5, 3), c(5, 4);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs |= x != c.next_u64();
  }
  EXPECT_TRUE(differs);
  SampleStream d(5, 3);
  EXPECT_EQ(d.substream(4).next_u64(), SampleStream(5, 4).next_u64());
}

TEST(SampleStream, UniformRanges) {
  SampleStream s(1, 1);
  for (int i = 0; i < 100000; ++i) {
    const double u = s.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(s.uniform_below(7), 7U);
  }
  EXPECT_EQ(s.uniform_below(1), 0U);
}

TEST(SampleW, SingleTermVariance) {
  SampleStream stream(32, 0);
  std::vector<double> x(200000);
  for (auto& v : x) v = sample_W(stream, {1, TailMode::drop});
  const auto m = moments_of(x);
  EXPECT_NEAR(m.m2, 4 / (kPi * kPi), 3 * m.se2);
}

TEST(SampleW, MomentsWithGaussianTail) {
  SampleStream stream(33, 0);
  std::vector<double> x(100000);
  for (auto& v : x) v = sample_W(stream, {200, TailMode::gaussian});
  const auto m = moments_of(x);
  EXPECT_NEAR(m.m2, 2.0 / 3.0, 3 * m.se2);
  EXPECT_NEAR(m.m4, 76.0 / 45.0, 3 * m.se4);
}

TEST(SampleW, Errors) {
  SampleStream stream(1, 0);
  EXPECT_THROW(sample_W(stream, {0, TailMode::drop}), DomainError);
  EXPECT_THROW(sample_W_laplace(stream, {0, TailMode::drop}), DomainError);
}

TEST(SampleWLaplace, VarianceAndFinite) {
  SampleStream stream(34, 0);
  std::vector<double> x(20000);
  for (auto& v : x) {
    v = sample_W_laplace(stream, {60, TailMode::gaussian});
    ASSERT_TRUE(std::isfinite(v));
  }
  const auto m = moments_of(x);
  EXPECT_NEAR(m.m2, 2.0 / 3.0, 3 * m.se2);
}

TEST(CfW, Basics) {
  EXPECT_DOUBLE_EQ(cf_W(0.0), 1.0);
  for (double t = 0.5; t <= 20; t += 0.5) {
    EXPECT_DOUBLE_EQ(cf_W(t), cf_W(-t));
    EXPECT_GT(cf_W(t), 0.0);
    EXPECT_LT(cf_W(t), 1.0);
  }
  EXPECT_THROW(cf_W(1.0, 0), DomainError);
}

TEST(CfW, DerivativesGiveMoments) {
  EXPECT_NEAR(cf_derivative(2, 1e-2), -2.0 / 3.0, 1e-4);
  EXPECT_NEAR(cf_derivative(4, 2e-2), 76.0 / 45.0, 1e-2);
  for (int k : {2, 4, 6}) {
    const double target = (k % 4 == 0 ? 1.0 : -1.0) * to_double(mu_k(k));
    const double h = k == 2 ? 1e-2 : (k == 4 ? 2e-2 : 5e-2);
    EXPECT_NEAR(cf_derivative(k, h) / target, 1.0, 1e-3) << k;
  }
}

TEST(CfW, TailCorrectionAdequate) {
  for (double t = -20; t <= 20; t += 0.25) EXPECT_LT(std::fabs(cf_W(t, 1000) - cf_W(t, 10000)), 1e-8) << t;
}

TEST(LimitLaw, CutoffCondition) {
  LimitLaw law;
  EXPECT_LT(law.cf(law.cutoff()), law.options().cutoff_threshold);
  EXPECT_THROW(LimitLaw({.terms = 1000, .cutoff_threshold = 0.0}), DomainError);
}

TEST(LimitLaw, DensityAndCdf) {
  EXPECT_DOUBLE_EQ(cdf_W(0.0), 0.5);
  const double mass = integrate([](double x) { return pdf_W(x); }, -12, 12);
  EXPECT_NEAR(mass, 1.0, 1e-6);
  const double second = integrate([](double x) { return x * x * pdf_W(x); }, -8, 8);
  EXPECT_NEAR(second, 2.0 / 3.0, 1e-4);
  for (double x = -4; x <= 4; x += 0.1) {
    const double p = pdf_W(x);
    EXPECT_TRUE(std::isfinite(p));
    EXPECT_GT(p, 0.0) << x;
  }
  // cdf agrees with the integrated density.
  for (double x : {-2.0, -0.5, 0.3, 1.0, 2.5}) {
    EXPECT_NEAR(cdf_W(x), 0.5 + integrate([](double y) { return pdf_W(y); }, 0.0, x), 1e-7) << x;
  }
}

TEST(LimitLaw, SymmetricTails) {
  LimitLaw law;
  for (double t = 0.5; t <= 5; t += 0.5) EXPECT_NEAR(1 - law.cdf(t), law.cdf(-t), 1e-10) << t;
}

TEST(LimitLaw, Quantile) {
  EXPECT_DOUBLE_EQ(quantile_W(0.5), 0.0);
  for (double q : {0.01, 0.1, 0.3, 0.75, 0.99}) EXPECT_NEAR(cdf_W(quantile_W(q)), q, 1e-9);
  EXPECT_NEAR(quantile_W(0.2), -quantile_W(0.8), 1e-9);
  EXPECT_THROW(quantile_W(0.0), DomainError);
  EXPECT_THROW(quantile_W(1.0), DomainError);
}

TEST(LimitLaw, SamplerMatchesCdf) {
  SampleStream stream(35, 0);
  std::vector<double> x(100000);
  for (auto& v : x) v = sample_W(stream, {200, TailMode::gaussian});
  std::sort(x.begin(), x.end());
  LimitLaw law;
  double ks = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double F = law.cdf(x[i]);
    ks = std::max({ks, std::fabs(F - static_cast<double>(i) / n), std::fabs(F - static_cast<double>(i + 1) / n)});
  }
  EXPECT_LT(ks, 1.628 / std::sqrt(n));
}

TEST(TailRate, SlopeNearAsymptote) {
  std::vector<double> grid;
  for (double t = 3.0; t <= 5.0 + 1e-9; t += 0.25) grid.push_back(t);
  const double slope = tail_rate_estimate(grid);
  const double target = -kPi * kPi / 4;
  EXPECT_GE(slope, target * 1.15);
  EXPECT_LE(slope, target * 0.85);
}

TEST(TailRate, DriftsTowardAsymptote) {
  const double target = -kPi * kPi / 4;
  double last_gap = 1e9;
  for (double start : {1.0, 2.0, 3.0}) {
    std::vector<double> grid;
    for (double t = start; t <= start + 2.0 + 1e-9; t += 0.25) grid.push_back(t);
    const double gap = std::fabs(tail_rate_estimate(grid) - target);
    EXPECT_LT(gap, last_gap) << start;
    last_gap = gap;
  }
  const double bad[] = {1.0, 1.0};
  EXPECT_THROW(tail_rate_estimate(bad), DomainError);
}
