#include "cauchy/random.hpp"

namespace cauchy {

long random_integer(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational random_rational(Rng& rng) {
  const long num = random_integer(rng, -9, 9);
  const long den = random_integer(rng, 1, 9);
  return Rational(Integer(num), Integer(den));
}

ExactMatrix random_integer_matrix(Rng& rng, std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = random_integer(rng);
  return m;
}

ExactMatrix random_rational_matrix(Rng& rng, std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = random_rational(rng);
  return m;
}

ExactMatrix random_invertible_matrix(Rng& rng, std::size_t n) {
  while (true) {
    auto m = random_integer_matrix(rng, n);
    if (!determinant(m).is_zero())
      return m;
  }
}

} // namespace cauchy
