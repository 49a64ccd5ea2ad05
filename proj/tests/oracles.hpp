#pragma once

// Brute-force reference computations used only by the tests. Each one is
// written from the defining formula and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "writhe/rational.hpp"

namespace oracle {

using Images = std::vector<std::uint32_t>;
using writhe::BigInt;
using writhe::Rational;

inline int sgn(std::int64_t x) { return (x > 0) - (x < 0); }

inline Images identity(std::size_t n) {
  Images v(n);
  std::iota(v.begin(), v.end(), 0U);
  return v;
}

/// Calls f on every permutation of {0..n-1} in lexicographic order.
inline void for_each_permutation(std::size_t n, const std::function<void(const Images&)>& f) {
  Images v = identity(n);
  do {
    f(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

/// sum_i sum_{j=1..n} sign(p(i+j) - p(i)), indices mod N.
inline std::int64_t writhe(const Images& p) {
  const std::int64_t N = static_cast<std::int64_t>(p.size());
  const std::int64_t n = (N - 1) / 2;
  std::int64_t w = 0;
  for (std::int64_t i = 0; i < N; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      w += sgn(static_cast<std::int64_t>(p[(i + j) % N]) - static_cast<std::int64_t>(p[i]));
    }
  }
  return w;
}

/// sum_{y<x} (-1)^{x+y} sign(s(x) - s(y)).
inline std::int64_t bialternating(const Images& s) {
  std::int64_t total = 0;
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      const int parity = ((x + y) % 2 == 0) ? 1 : -1;
      total += parity * sgn(static_cast<std::int64_t>(s[x]) - static_cast<std::int64_t>(s[y]));
    }
  }
  return total;
}

/// (1/2) sum_{y in L} sum_{x in R} (-1)^{x+y} sign(s(x) - s(y)), L = [0, 2l), R = [2l, N).
inline Rational lk(const Images& s, std::size_t l) {
  std::int64_t total = 0;
  for (std::size_t y = 0; y < 2 * l; ++y) {
    for (std::size_t x = 2 * l; x < s.size(); ++x) {
      const int parity = ((x + y) % 2 == 0) ? 1 : -1;
      total += parity * sgn(static_cast<std::int64_t>(s[x]) - static_cast<std::int64_t>(s[y]));
    }
  }
  return Rational(total, 2);
}

/// Ranks of a sequence of distinct values, by sorting.
inline Images rank_compress(const Images& values) {
  Images sorted = values;
  std::sort(sorted.begin(), sorted.end());
  Images out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
  }
  return out;
}

inline std::int64_t inversions(const Images& s) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) c += s[i] > s[j];
  return c;
}

inline int descents(const Images& s) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) d += s[i] > s[i + 1];
  return d;
}

inline BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

/// Average over all orderings of prod over edges (u, w) of sign(order(w) - order(u)); vertices 1-based.
inline Rational average_sign(int v, const std::vector<std::pair<int, int>>& edges) {
  Images order = identity(static_cast<std::size_t>(v));
  std::int64_t total = 0;
  std::int64_t count = 0;
  do {
    int prod = 1;
    for (auto [a, b] : edges) prod *= sgn(static_cast<std::int64_t>(order[b - 1]) - static_cast<std::int64_t>(order[a - 1]));
    total += prod;
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(total, count);
}

/// A(G) as the product of brute-force averages over weakly connected components.
inline Rational average_sign_by_components(int v, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(v) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::map<int, std::vector<int>> groups;
  for (int x = 1; x <= v; ++x) groups[find(x)].push_back(x);
  Rational result = 1;
  for (const auto& [root, verts] : groups) {
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> local;
    for (auto [a, b] : edges)
      if (relabel.count(a)) local.emplace_back(relabel[a], relabel[b]);
    result *= average_sign(static_cast<int>(verts.size()), local);
    if (result == 0) break;
  }
  return result;
}

/// Definitional breaking sum of a graph whose vertices all have degree 2:
/// sum over vertex subsets S of (-1)^{v(G_S)} A(G_S), where G_S splits every
/// vertex in S into two degree-1 vertices, one per incident edge.
inline Rational breaking_sum(int v, const std::vector<std::pair<int, int>>& edges) {
  Rational total = 0;
  for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
    int next_vertex = v;
    std::vector<std::pair<int, int>> broken = edges;
    std::vector<int> keep(static_cast<std::size_t>(v) + 1, 0);
    for (int x = 1; x <= v; ++x) keep[x] = (mask >> (x - 1)) & 1U ? 0 : 1;
    // Every endpoint occurrence of a broken vertex gets a fresh label.
    for (auto& [a, b] : broken) {
      if (!keep[a]) a = ++next_vertex;
      if (!keep[b]) b = ++next_vertex;
    }
    // Compact labels to 1..k.
    std::map<int, int> relabel;
    for (auto& [a, b] : broken) {
      for (int* e : {&a, &b}) {
        auto it = relabel.find(*e);
        if (it == relabel.end()) it = relabel.emplace(*e, static_cast<int>(relabel.size()) + 1).first;
        *e = it->second;
      }
    }
    const int vertices = static_cast<int>(relabel.size());
    const Rational a = average_sign_by_components(vertices, broken);
    total += (vertices % 2 == 0 ? a : Rational(-a));
  }
  return total;
}

/// Oriented cycle 1 -> 2 -> ... -> m -> 1.
inline std::vector<std::pair<int, int>> cycle_edges(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i) e.emplace_back(i, i % m + 1);
  return e;
}

/// #{0 <= t_1 < ... < t_v <= 2n : (-1)^{t_i} = eps_i}.
inline std::int64_t lattice_count(int n, const std::vector<int>& eps) {
  std::int64_t count = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int from) {
    if (i == eps.size()) {
      ++count;
      return;
    }
    for (int t = from; t <= 2 * n; ++t) {
      if ((t % 2 == 0 ? 1 : -1) == eps[i]) rec(i + 1, t + 1);
    }
  };
  rec(0, 0);
  return count;
}

/// (v + 1 + eps_1 + eps_v - sum_i eps_i eps_{i+1}) / 4.
inline int runs_closed_form(const std::vector<int>& eps) {
  const int v = static_cast<int>(eps.size());
  int s = v + 1 + eps.front() + eps.back();
  for (int i = 0; i + 1 < v; ++i) s -= eps[i] * eps[i + 1];
  return s / 4;
}

/// Number of permutations of m points with s(0) > s(1) < s(2) > ...
inline std::int64_t alternating_count(int m) {
  if (m <= 1) return 1;
  std::int64_t c = 0;
  for_each_permutation(static_cast<std::size_t>(m), [&](const Images& s) {
    bool ok = true;
    for (int i = 0; i + 1 < m && ok; ++i) ok = (i % 2 == 0) ? s[i] > s[i + 1] : s[i] < s[i + 1];
    c += ok;
  });
  return c;
}

}  // namespace oracle
