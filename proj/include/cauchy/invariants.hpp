#pragma once

#include "cauchy/matrix.hpp"

#include <cstddef>
#include <vector>

namespace cauchy {

/// I_k = Tr A^k. Throws std::invalid_argument for k == 0.
Rational power_trace(const ExactMatrix& a, std::size_t k);

/// J_k as the sum of all C(n,k) principal k x k minor determinants, which
/// is also Tr of the k-th exterior power of A. Throws DimensionError unless
/// 1 <= k <= n.
Rational prodet_minors(const ExactMatrix& a, std::size_t k);

/// J_1..J_n from the Faddeev-LeVerrier recurrence
///   B_1 = A,  J_m = Tr(B_m) / m,  B_{m+1} = A (J_m I - B_m).
std::vector<Rational> leverrier_coefficients(const ExactMatrix& a);
/// Throws DimensionError unless 1 <= k <= n.
Rational prodet_leverrier(const ExactMatrix& a, std::size_t k);

/// J_k = j_k(I_1, ..., I_k) / k!. Defined for every k >= 1; for k > n the
/// result is zero.
Rational prodet_cauchy(const ExactMatrix& a, std::size_t k);

inline constexpr unsigned long kAntisymBudget = 100'000'000;

/// True iff k! * n^k <= budget, the term count of prodet_antisym.
bool antisym_within_budget(std::size_t n, std::size_t k, unsigned long budget = kAntisymBudget);

/// J_k = (1/k!) sum_{sigma in S_k} sgn(sigma) sum_{i_1..i_k} prod_m A[i_m][i_sigma(m)],
/// enumerated term by term. Throws DimensionError unless 1 <= k <= n and
/// BudgetExceeded when antisym_within_budget fails.
Rational prodet_antisym(const ExactMatrix& a, std::size_t k,
                        unsigned long budget = kAntisymBudget);

/// Tr([M, B] M^{k-1}); zero for every input because power traces are
/// conserved along Lax flows. Throws DimensionError on size mismatch.
Rational lax_trace_check(const ExactMatrix& m, const ExactMatrix& b, std::size_t k);

} // namespace cauchy
