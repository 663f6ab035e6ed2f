#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cauchy {

/// Variable index, 1-based: variable 1 is x1.
using Var = std::size_t;

/// A product x_1^{n_1} x_2^{n_2} ... stored as sorted (index, exponent)
/// pairs. Zero exponents are never stored; the empty product is 1.
class Monomial {
public:
  using Factor = std::pair<Var, std::size_t>;

  Monomial() = default;

  /// x_i^e. Throws std::invalid_argument for i == 0.
  static Monomial variable(Var i, std::size_t e = 1);
  /// Dense exponent vector: exponents[0] belongs to x1.
  static Monomial from_exponents(const std::vector<std::size_t>& exponents);

  std::size_t exponent(Var i) const;
  std::span<const Factor> factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  /// Largest variable index present, 0 for the constant monomial.
  Var max_variable() const { return factors_.empty() ? 0 : factors_.back().first; }

  /// Sum of i * n_i.
  std::size_t weight() const;
  std::size_t degree() const;

  /// Copy with the exponent at i replaced (0 removes the factor).
  Monomial with_exponent(Var i, std::size_t e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "x1^2*x2"; the constant monomial renders as "1".
  std::string to_string() const;

private:
  std::vector<Factor> factors_;
};

std::size_t weight(const Monomial& m);

/// Display order: higher weight first, then lexicographically larger
/// exponent sequence (n_1, n_2, ...) first.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

} // namespace cauchy
