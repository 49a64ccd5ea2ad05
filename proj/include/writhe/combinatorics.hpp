#pragma once

#include "writhe/rational.hpp"

namespace writhe {

/// Bernoulli number B_m (B_1 = -1/2 convention). Odd m >= 3 is rejected.
Rational bernoulli(unsigned m);

/// Euler zigzag number A_m: alternating permutations of m points.
BigInt euler_zigzag(unsigned m);

/// Eulerian number A_{m,d}: permutations of m points with d descents. Requires d <= m-1.
BigInt eulerian(unsigned m, unsigned d);

}  // namespace writhe
