#pragma once

#include "cauchy/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cauchy {

/// Values of x_1, ..., x_n; variables past n are taken to be zero.
using VariableVector = std::vector<Rational>;

/// Elementary symmetric function c_k: sum over strictly increasing index
/// k-tuples. c_0 = 1 and c_k = 0 for k > n.
Rational eval_elementary(std::size_t k, std::span<const Rational> xs);

/// Power sum s_k = x_1^k + ... + x_n^k. Throws std::invalid_argument for k == 0.
Rational eval_power_sum(std::size_t k, std::span<const Rational> xs);

/// Wronski (complete homogeneous) function w_k: sum over weakly increasing
/// index k-tuples. w_0 = 1.
Rational eval_wronski(std::size_t k, std::span<const Rational> xs);

/// c_k from power sums s_1..s_k via Cauchy's signed class-size expansion.
/// Throws std::invalid_argument when k == 0 or fewer than k values are given.
Rational c_from_power_sums(std::size_t k, std::span<const Rational> power_sums);

/// w_k from power sums, same expansion with all signs positive.
Rational w_from_power_sums(std::size_t k, std::span<const Rational> power_sums);

} // namespace cauchy
