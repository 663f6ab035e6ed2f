#pragma once

#include "cauchy/monomial.hpp"
#include "cauchy/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace cauchy {

/// Sparse polynomial over x1, x2, ... with rational coefficients. Terms are
/// kept in GradedOrder and zero coefficients are never stored, so structural
/// equality is mathematical equality.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational, GradedOrder>;

  Polynomial() = default;
  Polynomial(const Rational& constant);
  Polynomial(const Monomial& m, const Rational& coefficient = 1);

  static Polynomial variable(Var i) { return Polynomial(Monomial::variable(i)); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at m, zero when absent.
  Rational coefficient(const Monomial& m) const;

  /// Common weight of all terms; nullopt for zero or inhomogeneous input.
  std::optional<std::size_t> homogeneous_weight() const;
  /// Largest term weight; nullopt for zero.
  std::optional<std::size_t> max_weight() const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// "x1^3 - 3*x1*x2 + 2*x3"; zero renders as "0".
  std::string to_string() const;

private:
  Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Formal derivative d/dx_i. Throws std::invalid_argument for i == 0.
Polynomial partial(const Polynomial& p, Var i);

/// Multiplication by x_i. Throws std::invalid_argument for i == 0.
Polynomial times_var(const Polynomial& p, Var i);

/// Substitutes values for variables. Throws MissingAssignment when a
/// variable of p has no value.
Rational evaluate(const Polynomial& p, const std::map<Var, Rational>& values);

} // namespace cauchy
