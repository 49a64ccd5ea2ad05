#include "writhe/fast_writhe.hpp"

#include <cassert>
#include <future>
#include <span>
#include <vector>

#include "writhe/errors.hpp"

namespace writhe {

namespace {

using Index = Permutation::value_type;

void require_even_split(std::size_t size, std::size_t l) {
  if (size % 2 != 0) {
    throw SizeParityError("split requires even size, got " + std::to_string(size));
  }
  if (l < 1 || 2 * l >= size) {
    throw DomainError("split requires 1 <= l < size/2, got l = " + std::to_string(l) + " for size " +
                      std::to_string(size));
  }
}

int parity_sign(std::size_t i) { return (i & 1U) ? -1 : 1; }

// One pass over values in increasing order. `inv` maps value -> position.
// Writes the inverse arrays of the two induced permutations into `left_inv`
// (positions < boundary) and `right_inv` (positions re-based at 0), and
// returns lk_LR. Either output may be null when only lk is needed.
std::int64_t partition_pass(std::span<const Index> inv, std::size_t boundary, Index* left_inv,
                            Index* right_inv) {
  std::int64_t left_total = 0;
  for (std::size_t pos = 0; pos < boundary; ++pos) left_total += parity_sign(pos);

  std::int64_t left_prefix = 0;  // sum of (-1)^pos over left positions holding smaller values
  std::int64_t cross = 0;        // the full double sum, equal to 2 lk
  for (const Index pos : inv) {
    if (pos < boundary) {
      if (left_inv) *left_inv++ = pos;
      left_prefix += parity_sign(pos);
    } else {
      if (right_inv) *right_inv++ = static_cast<Index>(pos - boundary);
      cross += parity_sign(pos) * (2 * left_prefix - left_total);
    }
  }
  if (cross % 2 != 0) throw ContractViolation("lk_LR double sum is odd");
  return cross / 2;
}

#ifndef NDEBUG
std::int64_t bialt_from_inverse(std::span<const Index> inv) {
  std::vector<Index> forward(inv.size());
  for (std::size_t v = 0; v < inv.size(); ++v) forward[inv[v]] = static_cast<Index>(v);
  return inversion_stat(make_unchecked(std::move(forward)), InversionVariant::bialternating);
}
#endif

// `inv` holds the inverse of an even-size permutation; it is overwritten.
std::int64_t bialt_recursive(std::span<Index> inv, std::span<Index> scratch, std::size_t cutoff) {
  const std::size_t size = inv.size();
  if (size == 2) return inv[0] == 0 ? -1 : 1;

  const std::size_t half = size / 2;
  const std::size_t boundary = 2 * ((half + 1) / 2);

#ifndef NDEBUG
  const std::int64_t expected = size <= 64 ? bialt_from_inverse(inv) : 0;
#endif

  const std::int64_t lk =
      partition_pass(inv, boundary, scratch.data(), scratch.data() + boundary);
  std::copy(scratch.begin(), scratch.end(), inv.begin());

  auto left = inv.subspan(0, boundary);
  auto right = inv.subspan(boundary);
  auto left_scratch = scratch.subspan(0, boundary);
  auto right_scratch = scratch.subspan(boundary);

  std::int64_t total = 0;
  if (cutoff != 0 && size >= cutoff) {
    auto pending = std::async(std::launch::async, [=] { return bialt_recursive(left, left_scratch, cutoff); });
    const std::int64_t r = bialt_recursive(right, right_scratch, cutoff);
    total = pending.get() + r + 2 * lk;
  } else {
    total = bialt_recursive(left, left_scratch, cutoff) + bialt_recursive(right, right_scratch, cutoff) + 2 * lk;
  }

#ifndef NDEBUG
  assert(size > 64 || total == expected);
#endif
  return total;
}

std::vector<Index> inverse_of(const Permutation& sigma) {
  std::vector<Index> inv(sigma.size());
  for (std::size_t x = 0; x < sigma.size(); ++x) inv[sigma[x]] = static_cast<Index>(x);
  return inv;
}

Permutation forward_of(std::span<const Index> inv) {
  std::vector<Index> forward(inv.size());
  for (std::size_t v = 0; v < inv.size(); ++v) forward[inv[v]] = static_cast<Index>(v);
  return make_unchecked(std::move(forward));
}

}  // namespace

std::pair<Permutation, Permutation> induced_split(const Permutation& sigma, std::size_t l) {
  auto parts = split(sigma, l);
  return {std::move(parts.left), std::move(parts.right)};
}

std::int64_t lk_split(const Permutation& sigma, std::size_t l) {
  require_even_split(sigma.size(), l);
  const auto inv = inverse_of(sigma);
  return partition_pass(inv, 2 * l, nullptr, nullptr);
}

SplitResult split(const Permutation& sigma, std::size_t l) {
  require_even_split(sigma.size(), l);
  const auto inv = inverse_of(sigma);
  const std::size_t boundary = 2 * l;
  std::vector<Index> left_inv(boundary);
  std::vector<Index> right_inv(sigma.size() - boundary);
  const std::int64_t lk = partition_pass(inv, boundary, left_inv.data(), right_inv.data());
  return SplitResult{forward_of(left_inv), forward_of(right_inv), lk};
}

std::int64_t bialt_fast(const Permutation& sigma, const FastWritheOptions& options) {
  if (sigma.size() % 2 != 0) {
    throw SizeParityError("bialt_fast requires even size, got " + std::to_string(sigma.size()));
  }
  auto inv = inverse_of(sigma);
  std::vector<Index> scratch(inv.size());
  return bialt_recursive(inv, scratch, options.parallel_cutoff);
}

Permutation writhe_to_bialternating(const Permutation& p) {
  if (p.size() % 2 == 0) {
    throw SizeParityError("writhe requires odd size, got " + std::to_string(p.size()));
  }
  return reduce_odd_to_even(p.compose(halve_map_inverse(p.size())));
}

std::int64_t writhe_fast(const Permutation& p, const FastWritheOptions& options) {
  if (p.size() % 2 == 0) {
    throw SizeParityError("writhe requires odd size, got " + std::to_string(p.size()));
  }
  if (p.size() == 1) return 0;
  return bialt_fast(writhe_to_bialternating(p), options);
}

}  // namespace writhe
