#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "writhe/graph.hpp"
#include "writhe/permutation.hpp"
#include "writhe/rational.hpp"

namespace writhe {

// Average signs ------------------------------------------------------------------

/// Largest vertex count average_sign will enumerate (v! orderings).
inline constexpr int kMaxAverageSignVertices = 10;

/// A(G) = (1/v!) sum over orderings of prod over edges (i,j) of sign(s(j) - s(i)).
/// Results are cached by the raw sorted edge list.
Rational average_sign(const DirectedGraph& graph);

enum class ClosedGraph { path, cycle };

/// Closed form of A for an oriented path or cycle with `num_edges` edges,
/// via Euler zigzag numbers.
Rational average_sign_closed(ClosedGraph kind, int num_edges);

// Breaking sums --------------------------------------------------------------------

/// B(C_m) = -2^m B_m / m! for even m >= 2.
Rational break_sum_cycle(int m);

/// B(C_m) through the path-composition expansion: A(C_m) plus, for each r,
/// (-1)^r (m/r) times the sum over compositions m_1 + ... + m_r = m of
/// prod A(P_{m_i}), with path averages taken by brute force.
Rational break_sum_cycle_by_compositions(int m);

/// Cycles of a permutation, each listed from its smallest element.
std::vector<std::vector<std::size_t>> cycles(const Permutation& sigma);

/// Number of positions i with sigma(i) < i.
int deficiencies(const Permutation& sigma);

/// 2-regular graph G_sigma on {1..k}: for each i an edge between i and sigma(i),
/// directed from the smaller label to the larger. Fixed points are rejected.
DirectedGraph cycle_graph(const Permutation& sigma);

/// B(G_sigma) as the product over cycles of (-1)^def(cycle) B(C_|cycle|).
/// Odd cycles give zero (odd edge count); a fixed point makes the product zero.
Rational break_sum_general(const Permutation& sigma);

// Limiting moments ---------------------------------------------------------------

/// lambda_m = 8^m (2^m - 1) B_m^2 / (2 (m!)^2) for even m, 0 for odd m.
Rational lambda_m(int m);

/// Limiting moment E[W^k], summed over cycle types of S_k with even parts.
Rational mu_k(int k);

/// Same moment from the MGF recurrence mu_k = sum_m (k-1)!/(k-m)! lambda_m mu_{k-m}.
Rational mu_k_recurrence(int k);

/// Closed-form E[w^k] as a polynomial in n (k = 2 or 4), lowest degree first.
RationalPoly exact_moment_poly(int k);

/// Exact E[w^k] over all of S_{2n+1}, n in 1..3.
Rational moment_enumeration(int n, int k);

// Parity vectors -------------------------------------------------------------------

/// Nonempty sequence of +1 / -1 entries.
class ParityVector {
 public:
  explicit ParityVector(std::vector<int> entries);

  /// Parses a string of '+' and '-' characters.
  static ParityVector parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const noexcept { return entries_[i]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

 private:
  std::vector<int> entries_;
};

/// Number of maximal runs of +1 entries.
int runs_z(const ParityVector& eps);

/// #{0 <= t_1 < ... < t_v <= 2n : (-1)^{t_i} = eps_i} = C(n + z(eps), v).
BigInt parity_count(int n, const ParityVector& eps);

}  // namespace writhe
