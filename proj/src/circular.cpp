#include "writhe/circular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "writhe/errors.hpp"

namespace writhe {

namespace {

void require_bijection(const std::vector<std::uint32_t>& v, const char* what) {
  std::vector<bool> seen(v.size(), false);
  for (auto x : v) {
    if (x >= v.size() || seen[x]) throw InvalidInput(std::string(what) + " is not a bijection onto Z_N");
    seen[x] = true;
  }
}

// Symmetric representative of a - b mod N in (-N/2, N/2].
std::int64_t circular_difference(std::uint32_t a, std::uint32_t b, std::int64_t n) {
  std::int64_t d = (static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b)) % n;
  if (d < 0) d += n;
  if (2 * d > n) d -= n;
  return d;
}

double evaluate_at(const PeriodicKernel& k, std::int64_t d, std::int64_t n) {
  if (2 * d == n) {
    if (!k.at_half) throw DomainError("kernel " + k.name + " is undefined at t = 1/2");
    return *k.at_half;
  }
  return k.on_open_interval(static_cast<double>(d) / static_cast<double>(n));
}

std::int64_t scaled_at(const PeriodicKernel& k, std::int64_t d, std::int64_t n) {
  if (2 * d == n) {
    if (!k.at_half) throw DomainError("kernel " + k.name + " is undefined at t = 1/2");
    const double scaled = *k.at_half * static_cast<double>(n);
    return static_cast<std::int64_t>(std::llround(scaled));
  }
  return k.scaled_exact(d, n);
}

int sign_of(std::int64_t d) { return (d > 0) - (d < 0); }

}  // namespace

RankPairs::RankPairs(std::vector<std::uint32_t> r, std::vector<std::uint32_t> s)
    : r_(std::move(r)), s_(std::move(s)) {
  if (r_.empty()) throw InvalidInput("rank data must be nonempty");
  if (r_.size() != s_.size()) throw InvalidInput("rank sequences differ in length");
  require_bijection(r_, "r");
  require_bijection(s_, "s");
}

RankPairs RankPairs::from_permutation(const Permutation& p) {
  std::vector<std::uint32_t> r(p.size());
  std::iota(r.begin(), r.end(), 0U);
  return RankPairs(std::move(r), std::vector<std::uint32_t>(p.images().begin(), p.images().end()));
}

double PeriodicKernel::operator()(double t) const {
  double u = t - std::floor(t);  // [0, 1)
  if (u > 0.5) u -= 1.0;
  if (u == 0.5) {
    if (!at_half) throw DomainError("kernel " + name + " is undefined at t = 1/2");
    return *at_half;
  }
  return on_open_interval(u);
}

PeriodicKernel kernel_alpha() {
  return {"alpha",
          [](double t) { return static_cast<double>((t > 0) - (t < 0)); },
          std::nullopt,
          [](std::int64_t d, std::int64_t n) { return sign_of(d) * n; }};
}

PeriodicKernel kernel_beta() {
  return {"beta",
          [](double t) { return ((t > 0) - (t < 0)) * (1.0 - 2.0 * std::fabs(t)); },
          0.0,
          [](std::int64_t d, std::int64_t n) { return sign_of(d) * (n - 2 * std::llabs(d)); }};
}

PeriodicKernel kernel_gamma() {
  return {"gamma", [](double t) { return std::sin(2.0 * std::numbers::pi * t); }, 0.0, nullptr};
}

Rational r_fg_exact(const RankPairs& data, const PeriodicKernel& f, const PeriodicKernel& g) {
  if (!f.scaled_exact || !g.scaled_exact) {
    throw DomainError("exact evaluation needs kernels with an exact scaled form");
  }
  const auto n = static_cast<std::int64_t>(data.size());
  const auto& r = data.r();
  const auto& s = data.s();
  BigInt total = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t row = 0;
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const std::int64_t a = scaled_at(f, circular_difference(r[j], r[i], n), n);
      const std::int64_t b = scaled_at(g, circular_difference(s[j], s[i], n), n);
      row += a * b;
    }
    total += row;
  }
  return Rational(total, BigInt(n) * n);
}

double r_fg(const RankPairs& data, const PeriodicKernel& f, const PeriodicKernel& g) {
  if (f.scaled_exact && g.scaled_exact) return to_double(r_fg_exact(data, f, g));
  const auto n = static_cast<std::int64_t>(data.size());
  const auto& r = data.r();
  const auto& s = data.s();
  double total = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      total += evaluate_at(f, circular_difference(r[j], r[i], n), n) *
               evaluate_at(g, circular_difference(s[j], s[i], n), n);
    }
  }
  return total;
}

double fisher_lee_delta(const RankPairs& data) {
  static const PeriodicKernel beta = kernel_beta();
  return r_fg(data, beta, beta);
}

double mardia_pi(const RankPairs& data) {
  static const PeriodicKernel gamma = kernel_gamma();
  return r_fg(data, gamma, gamma);
}

std::int64_t writhe_avg_form(const Permutation& p) {
  if (p.size() % 2 == 0) throw SizeParityError("writhe needs odd size, got " + std::to_string(p.size()));
  const auto n = static_cast<std::int64_t>(p.size());
  // alpha_n(y - x) beta_n(p(y) - p(x)) scaled by N; summed then divided by N.
  std::int64_t scaled = 0;
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = x + 1; y < n; ++y) {
      const std::int64_t dx = circular_difference(static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(x), n);
      const std::int64_t dv = circular_difference(p[y], p[x], n);
      scaled += sign_of(dx) * sign_of(dv) * (n - 2 * std::llabs(dv));
    }
  }
  if (scaled % n != 0) throw ContractViolation("averaged writhe form produced a non-integer total");
  return scaled / n;
}

namespace {

std::vector<std::uint32_t> ranks_of(const std::vector<double>& angles, std::size_t& ties) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<double> reduced(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!std::isfinite(angles[i])) throw InvalidInput("angles must be finite");
    double a = std::fmod(angles[i], kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    reduced[i] = a;
  }
  std::vector<std::uint32_t> order(angles.size());
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return reduced[a] < reduced[b]; });
  std::vector<std::uint32_t> rank(angles.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[order[k]] = static_cast<std::uint32_t>(k);
    if (k > 0 && reduced[order[k]] == reduced[order[k - 1]]) ++ties;
  }
  return rank;
}

}  // namespace

AngularRanks circular_ranks(const std::vector<double>& theta, const std::vector<double>& phi) {
  if (theta.size() != phi.size()) throw InvalidInput("theta and phi differ in length");
  if (theta.empty()) throw InvalidInput("no angle pairs");
  std::size_t ties_theta = 0;
  std::size_t ties_phi = 0;
  auto r = ranks_of(theta, ties_theta);
  auto s = ranks_of(phi, ties_phi);
  AngularRanks out{RankPairs(std::move(r), std::move(s)), ties_theta + ties_phi, {}};
  if (ties_theta > 0) {
    out.warnings.push_back(std::to_string(ties_theta) + " tied theta value(s); broken by input order");
  }
  if (ties_phi > 0) {
    out.warnings.push_back(std::to_string(ties_phi) + " tied phi value(s); broken by input order");
  }
  return out;
}

AngularRanks read_angles_csv(std::istream& in) {
  std::vector<double> theta;
  std::vector<double> phi;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected two comma-separated columns");
    }
    auto parse = [&](const std::string& field, double& value) {
      std::istringstream ss(field);
      ss >> value;
      if (ss.fail()) return false;
      ss >> std::ws;
      return ss.eof();
    };
    double a = 0;
    double b = 0;
    const bool ok_a = parse(line.substr(0, comma), a);
    const bool ok_b = parse(line.substr(comma + 1), b);
    if (!ok_a || !ok_b) {
      if (theta.empty() && line_no == 1 && !ok_a && !ok_b) continue;  // header
      throw InvalidInput("line " + std::to_string(line_no) + ": non-numeric angle");
    }
    theta.push_back(a);
    phi.push_back(b);
  }
  return circular_ranks(theta, phi);
}

}  // namespace writhe
