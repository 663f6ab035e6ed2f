#include "cauchy/polynomial.hpp"

#include "cauchy/errors.hpp"

#include <stdexcept>

namespace cauchy {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero())
    terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
  if (!coefficient.is_zero())
    terms_.emplace(m, coefficient);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational{} : it->second;
}

std::optional<std::size_t> Polynomial::homogeneous_weight() const {
  if (terms_.empty())
    return std::nullopt;
  // GradedOrder sorts by descending weight, so first and last bound it.
  const auto hi = terms_.begin()->first.weight();
  const auto lo = terms_.rbegin()->first.weight();
  if (hi != lo)
    return std::nullopt;
  return hi;
}

std::optional<std::size_t> Polynomial::max_weight() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.begin()->first.weight();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_)
    c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_)
    v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term(ma * mb, ca * cb);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    const Rational magnitude = negative ? -c : c;
    if (m.is_constant()) {
      out += magnitude.to_string();
    } else if (magnitude == Rational(1)) {
      out += m.to_string();
    } else {
      out += magnitude.to_string();
      out += '*';
      out += m.to_string();
    }
  }
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial(const Polynomial& p, Var i) {
  if (i == 0)
    throw std::invalid_argument("variable indices start at 1");
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    const auto e = m.exponent(i);
    if (e == 0)
      continue;
    r.add_term(m.with_exponent(i, e - 1), c * Rational(e));
  }
  return r;
}

Polynomial times_var(const Polynomial& p, Var i) {
  if (i == 0)
    throw std::invalid_argument("variable indices start at 1");
  Polynomial r;
  for (const auto& [m, c] : p.terms())
    r.add_term(m.with_exponent(i, m.exponent(i) + 1), c);
  return r;
}

Rational evaluate(const Polynomial& p, const std::map<Var, Rational>& values) {
  Rational total;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [i, e] : m.factors()) {
      auto it = values.find(i);
      if (it == values.end())
        throw MissingAssignment("no value for x" + std::to_string(i));
      term *= pow(it->second, e);
    }
    total += term;
  }
  return total;
}

} // namespace cauchy
