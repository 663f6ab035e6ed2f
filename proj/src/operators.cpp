#include "cauchy/operators.hpp"

#include "cauchy/partitions.hpp"

#include <mutex>
#include <stdexcept>

namespace cauchy {

namespace {

// Write-once memo of a sequence s_0 = 1, s_1 = x1, s_{k+1} = step(s_k).
class SequenceMemo {
public:
  explicit SequenceMemo(Polynomial (*step)(const Polynomial&)) : step_(step) {
    values_.emplace_back(Rational(1));
    values_.push_back(Polynomial::variable(1));
  }

  Polynomial get(std::size_t k) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= k)
      values_.push_back(step_(values_.back()));
    return values_[k];
  }

private:
  Polynomial (*step_)(const Polynomial&);
  std::mutex mutex_;
  std::vector<Polynomial> values_;
};

SequenceMemo& j_memo() {
  static SequenceMemo memo(&raising_minus);
  return memo;
}

SequenceMemo& k_memo() {
  static SequenceMemo memo(&raising_plus);
  return memo;
}

} // namespace

Polynomial delta(const Polynomial& p) {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [i, n] : m.factors()) {
      const auto lowered = m.with_exponent(i, n - 1);
      const auto raised = lowered.with_exponent(i + 1, lowered.exponent(i + 1) + 1);
      r.add_term(raised, c * Rational(i * n));
    }
  }
  return r;
}

Polynomial raising_minus(const Polynomial& p) { return times_var(p, 1) - delta(p); }

Polynomial raising_plus(const Polynomial& p) { return times_var(p, 1) + delta(p); }

Polynomial cauchy_j(std::size_t k) { return j_memo().get(k); }

Polynomial cauchy_k(std::size_t k) { return k_memo().get(k); }

namespace {

Polynomial class_size_polynomial(std::size_t k, bool signed_terms) {
  if (k == 0)
    return Polynomial(Rational(1));
  Polynomial r;
  for (const auto& lambda : enumerate_partitions(k)) {
    const auto alpha = to_symbol(lambda);
    Rational c(cauchy_h(alpha));
    if (signed_terms && sign_of_symbol(alpha) < 0)
      c = -c;
    r.add_term(symbol_monomial(alpha), c);
  }
  return r;
}

} // namespace

Polynomial cauchy_j_closed(std::size_t k) { return class_size_polynomial(k, true); }

Polynomial cauchy_k_closed(std::size_t k) { return class_size_polynomial(k, false); }

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  return LinearOperator([a, b](const Polynomial& p) { return a(b(p)); },
                        a.description() + "*" + b.description());
}

LinearOperator operator*(const Rational& c, const LinearOperator& a) {
  return LinearOperator([c, a](const Polynomial& p) { return c * a(p); },
                        c.to_string() + "*" + a.description());
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  return LinearOperator([a, b](const Polynomial& p) { return a(p) + b(p); },
                        "(" + a.description() + " + " + b.description() + ")");
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  return LinearOperator([a, b](const Polynomial& p) { return a(p) - b(p); },
                        "(" + a.description() + " - " + b.description() + ")");
}

LinearOperator identity_op() {
  return LinearOperator([](const Polynomial& p) { return p; }, "Id");
}

LinearOperator times_var_op(Var i) {
  if (i == 0)
    throw std::invalid_argument("variable indices start at 1");
  return LinearOperator([i](const Polynomial& p) { return times_var(p, i); },
                        "X" + std::to_string(i));
}

LinearOperator partial_op(Var i) {
  if (i == 0)
    throw std::invalid_argument("variable indices start at 1");
  return LinearOperator([i](const Polynomial& p) { return partial(p, i); },
                        "D" + std::to_string(i));
}

LinearOperator delta_op() { return LinearOperator(&delta, "delta"); }

LinearOperator raising_minus_op() { return LinearOperator(&raising_minus, "Delta-"); }

LinearOperator raising_plus_op() { return LinearOperator(&raising_plus, "Delta+"); }

LinearOperator number_op() {
  return LinearOperator(
      [](const Polynomial& p) {
        Polynomial r;
        for (const auto& [m, c] : p.terms())
          r.add_term(m, c * Rational(m.weight()));
        return r;
      },
      "N");
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return LinearOperator([a, b](const Polynomial& p) { return a(b(p)) - b(a(p)); },
                        "[" + a.description() + ", " + b.description() + "]");
}

std::vector<Monomial> basis_monomials(std::size_t max_weight) {
  std::vector<Monomial> out{Monomial{}};
  for (std::size_t w = 1; w <= max_weight; ++w)
    for (const auto& lambda : enumerate_partitions(w))
      out.push_back(symbol_monomial(to_symbol(lambda)));
  return out;
}

bool op_equal_up_to_weight(const LinearOperator& a, const LinearOperator& b,
                           std::size_t max_weight) {
  if (max_weight == 0)
    throw std::invalid_argument("op_equal_up_to_weight requires max_weight >= 1");
  for (const auto& m : basis_monomials(max_weight)) {
    const Polynomial p(m);
    if (a(p) != b(p))
      return false;
  }
  return true;
}

} // namespace cauchy
