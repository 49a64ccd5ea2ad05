#include "writhe/moments.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "writhe/combinatorics.hpp"
#include "writhe/errors.hpp"

namespace writhe {

namespace {

using EdgeKey = std::pair<int, std::vector<DirectedGraph::Edge>>;

Rational average_sign_uncached(const DirectedGraph& graph) {
  const int v = graph.num_vertices();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(graph.num_edges());
  for (const auto& [a, b] : graph.edges()) edges.emplace_back(a - 1, b - 1);

  std::vector<int> order(static_cast<std::size_t>(v));
  std::iota(order.begin(), order.end(), 0);
  std::int64_t total = 0;
  do {
    int negatives = 0;
    for (const auto& [a, b] : edges) negatives += order[b] < order[a] ? 1 : 0;
    total += (negatives % 2) ? -1 : 1;
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(BigInt(total), factorial(static_cast<unsigned>(v)));
}

// Cycle types of k with all parts even, as (part, multiplicity) lists.
void even_partitions(int remaining, int max_part, std::vector<std::pair<int, int>>& current,
                     std::vector<std::vector<std::pair<int, int>>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  int largest = std::min(max_part, remaining);
  if (largest % 2) --largest;
  for (int part = largest; part >= 2; part -= 2) {
    for (int mult = 1; mult * part <= remaining; ++mult) {
      current.emplace_back(part, mult);
      even_partitions(remaining - mult * part, part - 2, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

Rational average_sign(const DirectedGraph& graph) {
  if (graph.num_vertices() > kMaxAverageSignVertices) {
    throw ComplexityLimit("average_sign enumerates v! orderings; v = " + std::to_string(graph.num_vertices()) +
                          " exceeds the limit of " + std::to_string(kMaxAverageSignVertices));
  }
  for (const auto& [a, b] : graph.edges()) {
    if (a == b) throw DomainError("average_sign: self-loop at vertex " + std::to_string(a) + " has no sign");
  }
  EdgeKey key{graph.num_vertices(), {graph.edges().begin(), graph.edges().end()}};
  std::sort(key.second.begin(), key.second.end());

  static std::shared_mutex mutex;
  static std::map<EdgeKey, Rational> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Rational value = average_sign_uncached(graph);
  std::unique_lock lock(mutex);
  cache.emplace(std::move(key), value);
  return value;
}

Rational average_sign_closed(ClosedGraph kind, int num_edges) {
  if (kind == ClosedGraph::path) {
    if (num_edges < 0) throw DomainError("path needs a nonnegative edge count");
    const int m = num_edges + 1;  // A(P_{m-1})
    if (m % 2 == 0) return Rational(0);
    const int sign = ((m - 1) / 2) % 2 ? -1 : 1;
    return Rational(sign * euler_zigzag(static_cast<unsigned>(m)), factorial(static_cast<unsigned>(m)));
  }
  if (num_edges < 2) throw DomainError("cycle needs at least 2 edges");
  const int m = num_edges - 1;  // A(C_{m+1}) = -A(P_{m-1})
  return -average_sign_closed(ClosedGraph::path, m - 1);
}

Rational break_sum_cycle(int m) {
  if (m < 2 || m % 2 != 0) {
    throw DomainError("break_sum_cycle requires even m >= 2, got " + std::to_string(m));
  }
  const Rational two_pow = Rational(BigInt(1) << m);
  return -two_pow * bernoulli(static_cast<unsigned>(m)) / Rational(factorial(static_cast<unsigned>(m)));
}

Rational break_sum_cycle_by_compositions(int m) {
  if (m < 2 || m % 2 != 0) {
    throw DomainError("break_sum_cycle requires even m >= 2, got " + std::to_string(m));
  }
  std::vector<Rational> path_sign(static_cast<std::size_t>(m) + 1);
  for (int len = 1; len <= m; ++len) path_sign[len] = average_sign(oriented_path(len));

  // by_parts[r][s]: sum over compositions of s into r positive parts of prod A(P_part).
  std::vector<std::vector<Rational>> by_parts(static_cast<std::size_t>(m) + 1,
                                              std::vector<Rational>(static_cast<std::size_t>(m) + 1, 0));
  by_parts[0][0] = 1;
  for (int r = 1; r <= m; ++r) {
    for (int s = r; s <= m; ++s) {
      Rational acc = 0;
      for (int last = 1; last <= s - (r - 1); ++last) acc += by_parts[r - 1][s - last] * path_sign[last];
      by_parts[r][s] = acc;
    }
  }

  Rational total = average_sign(oriented_cycle(m));
  for (int r = 1; r <= m; ++r) {
    const Rational weight = Rational(m, r) * (r % 2 ? -1 : 1);
    total += weight * by_parts[r][m];
  }
  return total;
}

std::vector<std::vector<std::size_t>> cycles(const Permutation& sigma) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int deficiencies(const Permutation& sigma) {
  int count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) count += sigma[i] < i ? 1 : 0;
  return count;
}

DirectedGraph cycle_graph(const Permutation& sigma) {
  std::vector<DirectedGraph::Edge> edges;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] == i) throw DomainError("cycle_graph: fixed point " + std::to_string(i + 1) + " would be a self-loop");
    const int a = static_cast<int>(i) + 1;
    const int b = static_cast<int>(sigma[i]) + 1;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return DirectedGraph(static_cast<int>(sigma.size()), std::move(edges));
}

Rational break_sum_general(const Permutation& sigma) {
  if (sigma.size() > 8) throw ComplexityLimit("break_sum_general supports k <= 8");
  Rational product = 1;
  for (const auto& cycle : cycles(sigma)) {
    const auto len = static_cast<int>(cycle.size());
    if (len == 1 || len % 2 == 1) return Rational(0);
    int def = 0;
    for (const auto i : cycle) def += sigma[i] < i ? 1 : 0;
    product *= (def % 2 ? -1 : 1) * break_sum_cycle(len);
  }
  return product;
}

Rational lambda_m(int m) {
  if (m < 1) throw DomainError("lambda_m requires m >= 1");
  if (m % 2) return Rational(0);
  const Rational b = bernoulli(static_cast<unsigned>(m));
  const BigInt eight_pow = BigInt(1) << (3 * m);
  const BigInt two_pow_minus_one = (BigInt(1) << m) - 1;
  const BigInt mf = factorial(static_cast<unsigned>(m));
  return Rational(eight_pow * two_pow_minus_one) * b * b / Rational(2 * mf * mf);
}

Rational mu_k(int k) {
  if (k < 0) throw DomainError("mu_k requires k >= 0");
  if (k == 0) return Rational(1);
  if (k % 2) return Rational(0);

  std::vector<std::vector<std::pair<int, int>>> types;
  std::vector<std::pair<int, int>> current;
  even_partitions(k, k, current, types);

  const BigInt kf = factorial(static_cast<unsigned>(k));
  Rational total = 0;
  for (const auto& type : types) {
    BigInt denom = 1;
    Rational weight = 1;
    for (const auto& [part, mult] : type) {
      denom *= boost::multiprecision::pow(BigInt(part), static_cast<unsigned>(mult)) *
               factorial(static_cast<unsigned>(mult));
      const Rational lam = lambda_m(part);
      for (int i = 0; i < mult; ++i) weight *= lam;
    }
    total += Rational(kf, denom) * weight;
  }
  return total;
}

Rational mu_k_recurrence(int k) {
  if (k < 0) throw DomainError("mu_k requires k >= 0");
  if (k % 2) return Rational(0);
  std::vector<Rational> mu(static_cast<std::size_t>(k) + 1, 0);
  mu[0] = 1;
  for (int j = 2; j <= k; j += 2) {
    Rational acc = 0;
    for (int m = 2; m <= j; m += 2) {
      // (j-1)! / (j-m)!
      BigInt falling = 1;
      for (int f = j - m + 1; f <= j - 1; ++f) falling *= f;
      acc += Rational(falling) * lambda_m(m) * mu[static_cast<std::size_t>(j - m)];
    }
    mu[static_cast<std::size_t>(j)] = acc;
  }
  return mu[static_cast<std::size_t>(k)];
}

RationalPoly exact_moment_poly(int k) {
  if (k == 2) return {Rational(0), Rational(1, 3), Rational(2, 3)};
  if (k == 4) return {Rational(0), Rational(-26, 45), Rational(-49, 45), Rational(44, 45), Rational(76, 45)};
  throw DomainError("closed-form moment polynomials exist for k = 2 and k = 4 only, got " + std::to_string(k));
}

Rational moment_enumeration(int n, int k) {
  if (n < 1 || n > 3) throw ComplexityLimit("moment_enumeration enumerates S_{2n+1}; n must be in 1..3");
  if (k < 0) throw DomainError("moment order must be nonnegative");
  const std::size_t size = 2 * static_cast<std::size_t>(n) + 1;
  std::map<std::int64_t, std::int64_t> counts;
  std::vector<Permutation::value_type> images(size);
  std::iota(images.begin(), images.end(), 0U);
  do {
    ++counts[writhe_naive(make_unchecked(images))];
  } while (std::next_permutation(images.begin(), images.end()));

  BigInt sum = 0;
  for (const auto& [w, c] : counts) sum += boost::multiprecision::pow(BigInt(w), static_cast<unsigned>(k)) * c;
  return Rational(sum, factorial(static_cast<unsigned>(size)));
}

ParityVector::ParityVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("parity vector must be nonempty");
  for (int e : entries_) {
    if (e != 1 && e != -1) throw DomainError("parity vector entries must be +1 or -1");
  }
}

ParityVector ParityVector::parse(std::string_view text) {
  std::vector<int> entries;
  for (char c : text) {
    if (c == '+') {
      entries.push_back(1);
    } else if (c == '-') {
      entries.push_back(-1);
    } else {
      throw InvalidInput("parity vector text may contain only '+' and '-'");
    }
  }
  return ParityVector(std::move(entries));
}

int runs_z(const ParityVector& eps) {
  int runs = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] == 1 && (i == 0 || eps[i - 1] == -1)) ++runs;
  }
  return runs;
}

BigInt parity_count(int n, const ParityVector& eps) {
  if (n < 0) throw DomainError("parity_count requires n >= 0");
  return binomial(n + runs_z(eps), static_cast<long long>(eps.size()));
}

}  // namespace writhe
