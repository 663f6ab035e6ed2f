#include "cauchy/matrix.hpp"

#include "cauchy/errors.hpp"

#include <stdexcept>
#include <utility>

namespace cauchy {

ExactMatrix::ExactMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0)
    throw DimensionError("matrix dimension must be at least 1");
}

ExactMatrix::ExactMatrix(std::size_t n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0)
    throw DimensionError("matrix dimension must be at least 1");
  if (entries_.size() != n * n)
    throw DimensionError("expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(entries_.size()));
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rational> values) {
  ExactMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    m(i, i) = values[i];
  return m;
}

Rational ExactMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < n_; ++i)
    t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  ExactMatrix s(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c)
      s(r, c) = (*this)(indices[r], indices[c]);
  return s;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (o.n_ != n_)
    throw DimensionError("matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (o.n_ != n_)
    throw DimensionError("matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& c) {
  for (auto& e : entries_)
    e *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_)
    throw DimensionError("matrix size mismatch");
  const auto n = a.n_;
  ExactMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) += aik * b(k, j);
    }
  return r;
}

std::string ExactMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < n_; ++r) {
    out += '[';
    for (std::size_t c = 0; c < n_; ++c) {
      if (c)
        out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

ExactMatrix matrix_power(const ExactMatrix& a, std::size_t k) {
  ExactMatrix result = ExactMatrix::identity(a.size());
  ExactMatrix base = a;
  while (k > 0) {
    if (k & 1)
      result = result * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return result;
}

Rational determinant(const ExactMatrix& a) {
  const auto n = a.size();
  std::vector<Integer> m(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c)
      m[r * n + c] = a(r, c).numerator() * (row_lcm / a(r, c).denominator());
    scale *= row_lcm;
  }

  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n + c]; };
  int sign = 1;
  Integer previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0)
        ++swap;
      if (swap == n)
        return Rational{};
      for (std::size_t c = 0; c < n; ++c)
        std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        // Sylvester's identity makes this division exact.
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      at(i, k) = 0;
    }
    previous_pivot = at(k, k);
  }
  Integer det = at(n - 1, n - 1) * sign;
  return Rational(det, scale);
}

Rational determinant_gauss(const ExactMatrix& a) {
  ExactMatrix m = a;
  const auto n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero())
      ++pivot;
    if (pivot == n)
      return Rational{};
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero())
        continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j)
        m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& a) {
  const auto n = a.size();
  ExactMatrix m = a;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero())
      ++pivot;
    if (pivot == n)
      throw std::domain_error("matrix is singular");
    if (pivot != k)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(k, c), m(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    const Rational p = m(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      m(k, c) /= p;
      inv(k, c) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero())
        continue;
      const Rational f = m(i, k);
      for (std::size_t c = 0; c < n; ++c) {
        m(i, c) -= f * m(k, c);
        inv(i, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

} // namespace cauchy
