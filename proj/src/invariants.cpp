#include "cauchy/invariants.hpp"

#include "cauchy/errors.hpp"
#include "cauchy/operators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cauchy {

namespace {

void require_order(const ExactMatrix& a, std::size_t k) {
  if (k == 0 || k > a.size())
    throw DimensionError("order " + std::to_string(k) + " outside 1.." +
                         std::to_string(a.size()));
}

// Parity of a permutation of 0..k-1 from its cycle count.
int permutation_sign(const std::vector<std::size_t>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = sigma[j])
      seen[j] = true;
  }
  return (sigma.size() - cycles) % 2 == 0 ? 1 : -1;
}

// Sums prod_m D[i_m][i_sigma(m)] over all index tuples. Position d is
// assigned at depth d; factor m joins the product once both of its indices
// are known, i.e. at depth max(m, sigma(m)).
class Contraction {
public:
  Contraction(const std::vector<Integer>& entries, std::size_t n, const std::vector<std::size_t>& sigma)
      : entries_(entries), n_(n), sigma_(sigma), ready_(sigma.size()), index_(sigma.size()) {
    for (std::size_t m = 0; m < sigma.size(); ++m)
      ready_[std::max(m, sigma[m])].push_back(m);
  }

  Integer run() {
    Integer total = 0;
    descend(0, Integer(1), total);
    return total;
  }

private:
  void descend(std::size_t depth, const Integer& partial, Integer& total) {
    if (depth == sigma_.size()) {
      total += partial;
      return;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      index_[depth] = i;
      Integer product = partial;
      for (auto m : ready_[depth]) {
        product *= entries_[index_[m] * n_ + index_[sigma_[m]]];
        if (product == 0)
          break;
      }
      if (product != 0)
        descend(depth + 1, product, total);
    }
  }

  const std::vector<Integer>& entries_;
  std::size_t n_;
  const std::vector<std::size_t>& sigma_;
  std::vector<std::vector<std::size_t>> ready_;
  std::vector<std::size_t> index_;
};

} // namespace

Rational power_trace(const ExactMatrix& a, std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("power traces start at k = 1");
  return matrix_power(a, k).trace();
}

Rational prodet_minors(const ExactMatrix& a, std::size_t k) {
  require_order(a, k);
  const auto n = a.size();
  // Walk k-subsets of 0..n-1 in lexicographic order.
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  Rational total;
  while (true) {
    total += determinant(a.principal_submatrix(subset));
    std::size_t pos = k;
    while (pos > 0 && subset[pos - 1] == n - k + pos - 1)
      --pos;
    if (pos == 0)
      break;
    ++subset[pos - 1];
    for (std::size_t j = pos; j < k; ++j)
      subset[j] = subset[j - 1] + 1;
  }
  return total;
}

std::vector<Rational> leverrier_coefficients(const ExactMatrix& a) {
  const auto n = a.size();
  std::vector<Rational> j(n);
  ExactMatrix b = a;
  for (std::size_t m = 1; m <= n; ++m) {
    j[m - 1] = b.trace() / Rational(m);
    if (m == n)
      break;
    b = a * (ExactMatrix::identity(n) * j[m - 1] - b);
  }
  return j;
}

Rational prodet_leverrier(const ExactMatrix& a, std::size_t k) {
  require_order(a, k);
  return leverrier_coefficients(a)[k - 1];
}

Rational prodet_cauchy(const ExactMatrix& a, std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("prodeterminants start at k = 1");
  std::map<Var, Rational> traces;
  ExactMatrix power = a;
  for (std::size_t i = 1; i <= k; ++i) {
    if (i > 1)
      power = power * a;
    traces[i] = power.trace();
  }
  return evaluate(cauchy_j(k), traces) / Rational(factorial(k));
}

bool antisym_within_budget(std::size_t n, std::size_t k, unsigned long budget) {
  Integer terms;
  mpz_ui_pow_ui(terms.get_mpz_t(), n, k);
  terms *= factorial(k);
  return terms <= Integer(budget);
}

Rational prodet_antisym(const ExactMatrix& a, std::size_t k, unsigned long budget) {
  require_order(a, k);
  const auto n = a.size();
  if (!antisym_within_budget(n, k, budget))
    throw BudgetExceeded("antisymmetrized sum for n=" + std::to_string(n) + ", k=" +
                         std::to_string(k) + " exceeds " + std::to_string(budget) + " terms");

  // Work on the integer matrix d * A; J_k(A) = J_k(d * A) / d^k.
  Integer common = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
  std::vector<Integer> scaled(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      scaled[r * n + c] = a(r, c).numerator() * (common / a(r, c).denominator());

  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Integer total = 0;
  do {
    const Integer sum = Contraction(scaled, n, sigma).run();
    if (permutation_sign(sigma) > 0)
      total += sum;
    else
      total -= sum;
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  Integer denominator;
  mpz_pow_ui(denominator.get_mpz_t(), common.get_mpz_t(), k);
  denominator *= factorial(k);
  return Rational(total, denominator);
}

Rational lax_trace_check(const ExactMatrix& m, const ExactMatrix& b, std::size_t k) {
  if (m.size() != b.size())
    throw DimensionError("Lax pair matrices differ in size");
  if (k == 0)
    throw std::invalid_argument("Lax check requires k >= 1");
  const ExactMatrix bracket = m * b - b * m;
  return (bracket * matrix_power(m, k - 1)).trace();
}

} // namespace cauchy
