#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "writhe/permutation.hpp"

namespace writhe {

/// One divide step of the bi-alternating recursion on an even-size permutation:
/// the rank-compressed halves on positions [0, 2l) and [2l, size), and the
/// cross term lk with iota_hathat(sigma) = iota_hathat(left) + iota_hathat(right) + 2 lk.
struct SplitResult {
  Permutation left;
  Permutation right;
  std::int64_t lk;
};

struct FastWritheOptions {
  /// Sub-problems of at least this size evaluate their two halves concurrently.
  /// Zero keeps the recursion sequential.
  std::size_t parallel_cutoff = 0;
};

/// Induced permutations on the first 2l and last size-2l positions. Linear time.
std::pair<Permutation, Permutation> induced_split(const Permutation& sigma, std::size_t l);

/// Cross linking term between the two position blocks, linear time via prefix sums.
std::int64_t lk_split(const Permutation& sigma, std::size_t l);

SplitResult split(const Permutation& sigma, std::size_t l);

/// Bi-alternating inversion number of an even-size permutation in O(N log N).
std::int64_t bialt_fast(const Permutation& sigma, const FastWritheOptions& options = {});

/// Writhe of an odd-size permutation in O(N log N).
std::int64_t writhe_fast(const Permutation& p, const FastWritheOptions& options = {});

/// The even-size permutation sigma with iota_hathat(sigma) = w(p):
/// p composed with the inverse halving map, then reduced from 2n+1 to 2n points.
Permutation writhe_to_bialternating(const Permutation& p);

}  // namespace writhe
