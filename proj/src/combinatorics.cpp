#include "writhe/combinatorics.hpp"

#include <mutex>
#include <vector>

#include "writhe/errors.hpp"

namespace writhe {

Rational bernoulli(unsigned m) {
  if (m >= 3 && m % 2 == 1) {
    throw DomainError("bernoulli: odd index " + std::to_string(m) + " is not supported (value is zero)");
  }
  // Recurrence sum_{k=0}^{j} C(j+1, k) B_k = 0, cached.
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  while (cache.size() <= m) {
    const auto j = static_cast<long long>(cache.size());
    Rational sum = 0;
    for (long long k = 0; k < j; ++k) sum += Rational(binomial(j + 1, k)) * cache[static_cast<std::size_t>(k)];
    cache.push_back(-sum / (j + 1));
  }
  return cache[m];
}

BigInt euler_zigzag(unsigned m) {
  // Seidel-Entringer boustrophedon: E(i, 0) = 0, E(i, k) = E(i, k-1) + E(i-1, i-k).
  std::vector<BigInt> prev{1};
  for (unsigned i = 1; i <= m; ++i) {
    std::vector<BigInt> row(i + 1);
    row[0] = 0;
    for (unsigned k = 1; k <= i; ++k) row[k] = row[k - 1] + prev[i - k];
    prev = std::move(row);
  }
  return prev.back();
}

BigInt eulerian(unsigned m, unsigned d) {
  if (m == 0) throw DomainError("eulerian: m must be positive");
  if (d >= m) {
    throw DomainError("eulerian: descent count " + std::to_string(d) + " out of range for m = " + std::to_string(m));
  }
  std::vector<BigInt> row{1};  // m = 1
  for (unsigned size = 2; size <= m; ++size) {
    std::vector<BigInt> next(size);
    for (unsigned k = 0; k < size; ++k) {
      BigInt value = 0;
      if (k < row.size()) value += BigInt(k + 1) * row[k];
      if (k >= 1) value += BigInt(size - k) * row[k - 1];
      next[k] = value;
    }
    row = std::move(next);
  }
  return row[d];
}

}  // namespace writhe
