#pragma once

#include <random>

#include "connsum/core.hpp"

namespace connsum {

using Rng = std::mt19937_64;

/// a/b + (c/d) i with |a|, |c| <= height and 1 <= b, d <= height.
Scalar random_gaussian(Rng& rng, int height);
/// A non-zero Gaussian rational in the closed unit disk.
Scalar random_disk_scalar(Rng& rng, int height);
/// A non-zero variable with |z| <= 1 and Re z <= 1/2, or z = 1 with the given probability.
Scalar random_alphabet_scalar(Rng& rng, int height, double p_one);

/// A pair satisfying the dual condition.
Pair random_dual_pair(Rng& rng, int max_depth, int max_exponent, int height, double p_one = 0.4);

/// A convergent Z_1 symbol with non-zero variables.
ZTerm random_z1_term(Rng& rng, int max_depth, int max_exponent, int height);

}  // namespace connsum
