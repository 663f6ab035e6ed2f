#pragma once

#include "cauchy/matrix.hpp"

#include <cstdint>
#include <random>

namespace cauchy {

using Rng = std::mt19937_64;

/// Integer uniform on [lo, hi].
long random_integer(Rng& rng, long lo = -9, long hi = 9);
/// p/q with p uniform on [-9, 9] and q uniform on [1, 9].
Rational random_rational(Rng& rng);

ExactMatrix random_integer_matrix(Rng& rng, std::size_t n);
ExactMatrix random_rational_matrix(Rng& rng, std::size_t n);
/// Random integer matrix, redrawn until its determinant is nonzero.
ExactMatrix random_invertible_matrix(Rng& rng, std::size_t n);

} // namespace cauchy
