#include "writhe/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "writhe/errors.hpp"

namespace writhe {

namespace {

int sign_of(std::int64_t d) {
  if (d == 0) throw ContractViolation("sign(0) on a bijection: repeated value");
  return d > 0 ? 1 : -1;
}

std::int64_t diff(Permutation::value_type a, Permutation::value_type b) {
  return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
}

void require_odd(std::size_t size, const char* what) {
  if (size % 2 == 0) {
    throw SizeParityError(std::string(what) + " requires odd size, got " + std::to_string(size));
  }
}

}  // namespace

Permutation::Permutation(std::vector<value_type> images) : map_(std::move(images)) {
  if (map_.empty()) throw InvalidInput("permutation must have at least one point");
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t x = 0; x < map_.size(); ++x) {
    const auto v = map_[x];
    if (v >= map_.size()) {
      throw InvalidInput("value " + std::to_string(v) + " at position " + std::to_string(x) +
                         " is out of range for size " + std::to_string(map_.size()));
    }
    if (seen[v]) {
      throw InvalidInput("value " + std::to_string(v) + " occurs more than once");
    }
    seen[v] = true;
  }
}

Permutation make_unchecked(std::vector<Permutation::value_type> images) noexcept {
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation Permutation::identity(std::size_t size) {
  if (size == 0) throw InvalidInput("permutation must have at least one point");
  std::vector<value_type> v(size);
  std::iota(v.begin(), v.end(), value_type{0});
  return make_unchecked(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<value_type> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    value_type v{};
    const auto* first = text.data() + i;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) {
      throw InvalidInput("unexpected token at offset " + std::to_string(i) + " in permutation text");
    }
    if (ptr != last && !(*ptr == ' ' || *ptr == ',' || *ptr == '\t' || *ptr == '\n' || *ptr == '\r')) {
      throw InvalidInput("unexpected character '" + std::string(1, *ptr) + "' in permutation text");
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
  std::vector<value_type> inv(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) inv[map_[x]] = static_cast<value_type>(x);
  return make_unchecked(std::move(inv));
}

Permutation Permutation::compose(const Permutation& right) const {
  if (right.size() != size()) throw InvalidInput("cannot compose permutations of different sizes");
  std::vector<value_type> out(size());
  for (std::size_t x = 0; x < size(); ++x) out[x] = map_[right.map_[x]];
  return make_unchecked(std::move(out));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (x) os << ' ';
    os << map_[x];
  }
  return os.str();
}

std::int64_t writhe_naive(const Permutation& p) {
  require_odd(p.size(), "writhe");
  const std::size_t size = p.size();
  const std::size_t n = size / 2;
  const auto images = p.images();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < size; ++i) {
    const auto base = images[i];
    // The n successors of i, split where they wrap past the end.
    const std::size_t first = std::min(n, size - 1 - i);
    std::int64_t up = 0;
    std::int64_t equal = 0;
    for (std::size_t j = i + 1; j <= i + first; ++j) {
      up += images[j] > base;
      equal += images[j] == base;
    }
    for (std::size_t j = 0; j < n - first; ++j) {
      up += images[j] > base;
      equal += images[j] == base;
    }
    if (equal != 0) throw ContractViolation("sign(0) on a bijection: repeated value");
    total += 2 * up - static_cast<std::int64_t>(n);
  }
  return total;
}

std::int64_t inversion_stat(const Permutation& p, InversionVariant variant) {
  std::int64_t total = 0;
  for (std::size_t x = 1; x < p.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      int s = sign_of(diff(p[x], p[y]));
      switch (variant) {
        case InversionVariant::plain:
          s = -s;  // counts inversions positively: 2 inv - C(N, 2)
          break;
        case InversionVariant::alternating:
          if (y % 2) s = -s;
          break;
        case InversionVariant::bialternating:
          if ((x + y) % 2) s = -s;
          break;
      }
      total += s;
    }
  }
  return total;
}

std::int64_t inversion_count(const Permutation& p) {
  std::int64_t count = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) count += p[x] > p[y] ? 1 : 0;
  }
  return count;
}

Permutation halve_map(std::size_t size) {
  require_odd(size, "halve_map");
  std::vector<Permutation::value_type> v(size);
  for (std::size_t x = 0; x < size; ++x) v[x] = static_cast<Permutation::value_type>((2 * x) % size);
  return make_unchecked(std::move(v));
}

Permutation halve_map_inverse(std::size_t size) {
  require_odd(size, "halve_map_inverse");
  const std::uint64_t half = (size + 1) / 2;
  std::vector<Permutation::value_type> v(size);
  for (std::size_t x = 0; x < size; ++x) {
    v[x] = static_cast<Permutation::value_type>((half * x) % size);
  }
  return make_unchecked(std::move(v));
}

Permutation reduce_odd_to_even(const Permutation& sigma) {
  require_odd(sigma.size(), "reduce_odd_to_even");
  if (sigma.size() == 1) throw DomainError("reduce_odd_to_even needs size >= 3");
  const std::size_t size = sigma.size();
  const std::size_t top = size - 1;
  std::size_t q = 0;
  while (sigma[q] != top) ++q;
  // sigma o rho^k with k = q + 1 moves position q to the last index.
  const std::size_t shift = (q + 1) % size;
  std::vector<Permutation::value_type> out(top);
  for (std::size_t x = 0; x < top; ++x) out[x] = sigma[(x + shift) % size];
  return make_unchecked(std::move(out));
}

Permutation rotate(const Permutation& p, std::int64_t k, Side side) {
  const auto size = static_cast<std::int64_t>(p.size());
  const auto shift = static_cast<std::size_t>(((k % size) + size) % size);
  std::vector<Permutation::value_type> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (side == Side::left) {
      out[x] = static_cast<Permutation::value_type>((p[x] + shift) % p.size());
    } else {
      out[x] = p[(x + shift) % p.size()];
    }
  }
  return make_unchecked(std::move(out));
}

Permutation adjacent_circular_transpose(const Permutation& p, std::size_t x) {
  if (x >= p.size()) throw DomainError("transposition position out of range");
  std::vector<Permutation::value_type> out(p.images().begin(), p.images().end());
  std::swap(out[x], out[(x + 1) % p.size()]);
  return make_unchecked(std::move(out));
}

Permutation extremal_permutation(std::size_t n, int sign) {
  if (n == 0) throw DomainError("extremal_permutation needs n >= 1");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const std::size_t size = 2 * n + 1;
  std::vector<Permutation::value_type> v(size);
  for (std::size_t x = 0; x < size; ++x) {
    v[x] = static_cast<Permutation::value_type>(sign > 0 ? x : 2 * n - x);
  }
  return make_unchecked(std::move(v));
}

Permutation reflect_values(const Permutation& p) {
  std::vector<Permutation::value_type> out(p.size());
  const auto top = static_cast<Permutation::value_type>(p.size() - 1);
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = top - p[x];
  return make_unchecked(std::move(out));
}

}  // namespace writhe
