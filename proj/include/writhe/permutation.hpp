#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace writhe {

/// A bijection on {0, ..., N-1}, stored as its image list p(0), ..., p(N-1).
///
/// Values are immutable: every operation returns a new permutation.
/// Composition follows function notation, `a.compose(b)` is x -> a(b(x)).
class Permutation {
 public:
  using value_type = std::uint32_t;

  /// Validates that `images` is a bijection; throws InvalidInput otherwise.
  explicit Permutation(std::vector<value_type> images);

  static Permutation identity(std::size_t size);

  /// Parses a one-line image list, values separated by spaces and/or commas.
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return map_.size(); }
  value_type operator[](std::size_t x) const noexcept { return map_[x]; }
  std::span<const value_type> images() const noexcept { return map_; }

  Permutation inverse() const;
  Permutation compose(const Permutation& right) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<value_type> images) noexcept : map_(std::move(images)) {}

  friend Permutation make_unchecked(std::vector<value_type> images) noexcept;

  std::vector<value_type> map_;
};

/// Wraps an image list the caller has already proven to be a bijection.
Permutation make_unchecked(std::vector<Permutation::value_type> images) noexcept;

enum class InversionVariant { plain, alternating, bialternating };

enum class Side { left, right };

// Quadratic reference statistics ------------------------------------------------

/// Writhe by its defining double sum over Z_N, N = 2n+1.
std::int64_t writhe_naive(const Permutation& p);

/// Inversion-type sums over pairs y < x by direct O(N^2) summation.
/// plain: 2 inv(p) - C(N, 2). alternating: sum (-1)^y sign(p(x) - p(y)).
/// bialternating: sum (-1)^(x+y) sign(p(x) - p(y)).
std::int64_t inversion_stat(const Permutation& p, InversionVariant variant);

/// Classical inversion count #{x < y : p(x) > p(y)}.
std::int64_t inversion_count(const Permutation& p);

// Constructions -----------------------------------------------------------------

/// x -> 2x mod N for odd N.
Permutation halve_map(std::size_t size);

/// x -> ((N+1)/2) x mod N, the inverse of halve_map.
Permutation halve_map_inverse(std::size_t size);

/// Rotates so that value 2n sits at position 2n, then deletes it. Size 2n+1 -> 2n.
Permutation reduce_odd_to_even(const Permutation& sigma);

/// left: rho^k o p (shift values), right: p o rho^k (shift positions).
Permutation rotate(const Permutation& p, std::int64_t k, Side side);

/// p o tau_x where tau_x swaps positions x and x+1 mod N.
Permutation adjacent_circular_transpose(const Permutation& p, std::size_t x);

/// x -> x for sign = +1, x -> 2n - x for sign = -1, on 2n+1 points.
Permutation extremal_permutation(std::size_t n, int sign);

/// x -> (N-1) - p(x).
Permutation reflect_values(const Permutation& p);

}  // namespace writhe
