#include "cauchy/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cauchy {

Monomial Monomial::variable(Var i, std::size_t e) {
  if (i == 0)
    throw std::invalid_argument("variable indices start at 1");
  Monomial m;
  if (e > 0)
    m.factors_.emplace_back(i, e);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<std::size_t>& exponents) {
  Monomial m;
  for (std::size_t k = 0; k < exponents.size(); ++k)
    if (exponents[k] > 0)
      m.factors_.emplace_back(k + 1, exponents[k]);
  return m;
}

std::size_t Monomial::exponent(Var i) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), i,
                             [](const Factor& f, Var v) { return f.first < v; });
  return it != factors_.end() && it->first == i ? it->second : 0;
}

std::size_t Monomial::weight() const {
  std::size_t w = 0;
  for (const auto& [i, e] : factors_)
    w += i * e;
  return w;
}

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (const auto& f : factors_)
    d += f.second;
  return d;
}

Monomial Monomial::with_exponent(Var i, std::size_t e) const {
  if (i == 0)
    throw std::invalid_argument("variable indices start at 1");
  Monomial m = *this;
  auto it = std::lower_bound(m.factors_.begin(), m.factors_.end(), i,
                             [](const Factor& f, Var v) { return f.first < v; });
  if (it != m.factors_.end() && it->first == i) {
    if (e == 0)
      m.factors_.erase(it);
    else
      it->second = e;
  } else if (e > 0) {
    m.factors_.insert(it, Factor{i, e});
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      r.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      r.factors_.push_back(*ib++);
    } else {
      r.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

std::string Monomial::to_string() const {
  if (factors_.empty())
    return "1";
  std::string out;
  for (const auto& [i, e] : factors_) {
    if (!out.empty())
      out += '*';
    out += 'x';
    out += std::to_string(i);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::size_t weight(const Monomial& m) { return m.weight(); }

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto wa = a.weight();
  const auto wb = b.weight();
  if (wa != wb)
    return wa > wb;
  // Walk both sparse sequences in index order; the first index where the
  // exponents differ decides, larger exponent first.
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    const Var va = i < fa.size() ? fa[i].first : static_cast<Var>(-1);
    const Var vb = j < fb.size() ? fb[j].first : static_cast<Var>(-1);
    if (va < vb)
      return true; // a has a positive exponent where b has zero
    if (vb < va)
      return false;
    if (fa[i].second != fb[j].second)
      return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return false;
}

} // namespace cauchy
