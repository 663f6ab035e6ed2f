#include "cauchy/symfun.hpp"

#include "cauchy/partitions.hpp"

#include <stdexcept>

namespace cauchy {

namespace {

Rational from_power_sums(std::size_t k, std::span<const Rational> s, bool alternating) {
  if (k == 0)
    throw std::invalid_argument("power-sum conversion requires k >= 1");
  if (s.size() < k)
    throw std::invalid_argument("power-sum conversion of degree " + std::to_string(k) +
                                " needs " + std::to_string(k) + " power sums");
  Rational total;
  for (const auto& lambda : enumerate_partitions(k)) {
    const auto alpha = to_symbol(lambda);
    Rational term(cauchy_h(alpha));
    if (alternating && sign_of_symbol(alpha) < 0)
      term = -term;
    for (std::size_t i = 1; i <= k; ++i)
      if (auto a = alpha.multiplicity(i))
        term *= pow(s[i - 1], a);
    total += term;
  }
  return total / Rational(factorial(k));
}

} // namespace

Rational eval_elementary(std::size_t k, std::span<const Rational> xs) {
  if (k > xs.size())
    return Rational{};
  // e[j] after absorbing x_1..x_m is c_j(x_1..x_m).
  std::vector<Rational> e(k + 1);
  e[0] = 1;
  for (const auto& x : xs)
    for (std::size_t j = k; j >= 1; --j)
      e[j] += x * e[j - 1];
  return e[k];
}

Rational eval_power_sum(std::size_t k, std::span<const Rational> xs) {
  if (k == 0)
    throw std::invalid_argument("power sums start at k = 1");
  Rational total;
  for (const auto& x : xs)
    total += pow(x, k);
  return total;
}

Rational eval_wronski(std::size_t k, std::span<const Rational> xs) {
  // Generating function prod 1/(1 - x t): absorbing x maps h[j] to
  // sum_{i<=j} x^i h[j-i], i.e. h[j] += x * h[j-1] in increasing j.
  std::vector<Rational> h(k + 1);
  h[0] = 1;
  for (const auto& x : xs)
    for (std::size_t j = 1; j <= k; ++j)
      h[j] += x * h[j - 1];
  return h[k];
}

Rational c_from_power_sums(std::size_t k, std::span<const Rational> power_sums) {
  return from_power_sums(k, power_sums, true);
}

Rational w_from_power_sums(std::size_t k, std::span<const Rational> power_sums) {
  return from_power_sums(k, power_sums, false);
}

} // namespace cauchy
