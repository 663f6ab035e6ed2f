#pragma once

#include "cauchy/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cauchy {

/// A linear map on polynomials, applied concretely. Composition, sums and
/// brackets build new operators by wrapping the actions.
class LinearOperator {
public:
  using Action = std::function<Polynomial(const Polynomial&)>;

  LinearOperator(Action action, std::string description)
      : action_(std::move(action)), description_(std::move(description)) {}

  Polynomial operator()(const Polynomial& p) const { return action_(p); }
  const std::string& description() const { return description_; }

  /// Composition: (a * b)(p) = a(b(p)).
  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator*(const Rational& c, const LinearOperator& a);
  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);

private:
  Action action_;
  std::string description_;
};

/// delta x_k = k x_{k+1}, extended by the Leibniz rule. On a monomial
/// |n_1, n_2, ...> it emits i*n_i |..., n_i - 1, n_{i+1} + 1, ...> for each
/// i with n_i > 0.
Polynomial delta(const Polynomial& p);

/// x1 * p - delta(p)
Polynomial raising_minus(const Polynomial& p);
/// x1 * p + delta(p)
Polynomial raising_plus(const Polynomial& p);

/// j_1 = x1, j_{k+1} = raising_minus(j_k); j_0 = 1. Results are memoized
/// process-wide behind a mutex.
Polynomial cauchy_j(std::size_t k);
/// k_1 = x1, k_{k+1} = raising_plus(k_k); k_0 = 1. Memoized like cauchy_j.
Polynomial cauchy_k(std::size_t k);

/// Sum over partitions alpha of k of sign(alpha) * h(alpha) * x^(alpha),
/// built without iterating any operator. k == 0 gives 1.
Polynomial cauchy_j_closed(std::size_t k);
/// Unsigned counterpart: sum of h(alpha) * x^(alpha).
Polynomial cauchy_k_closed(std::size_t k);

LinearOperator identity_op();
/// Multiplication by x_i.
LinearOperator times_var_op(Var i);
/// d/dx_i
LinearOperator partial_op(Var i);
LinearOperator delta_op();
LinearOperator raising_minus_op();
LinearOperator raising_plus_op();
/// Weight-grading operator sum_i i x_i d/dx_i; multiplies a homogeneous
/// polynomial of weight k by k, so it acts as the number operator on j_k.
LinearOperator number_op();

/// p -> a(b(p)) - b(a(p))
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

/// All monomials of weight <= max_weight (the constant included), in
/// increasing weight. Weight-w monomials correspond to partitions of w, so
/// only x_1..x_{max_weight} appear.
std::vector<Monomial> basis_monomials(std::size_t max_weight);

inline constexpr std::size_t kDefaultOperatorTestWeight = 10;

/// True iff a(m) == b(m) for every basis monomial of weight <= max_weight.
/// This is the finite surface on which operator identities are decided.
bool op_equal_up_to_weight(const LinearOperator& a, const LinearOperator& b,
                           std::size_t max_weight = kDefaultOperatorTestWeight);

} // namespace cauchy
