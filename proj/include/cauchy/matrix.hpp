#pragma once

#include "cauchy/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cauchy {

/// Dense square matrix of exact rationals, row-major.
class ExactMatrix {
public:
  /// n x n zero matrix. Throws DimensionError for n == 0.
  explicit ExactMatrix(std::size_t n);
  /// Throws DimensionError unless entries.size() == n * n and n >= 1.
  ExactMatrix(std::size_t n, std::vector<Rational> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const Rational> values);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  Rational trace() const;
  /// Square submatrix on the given rows and columns (same index set).
  ExactMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Rational& c);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Rational& c) { return a *= c; }
  friend ExactMatrix operator*(const Rational& c, ExactMatrix a) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::string to_string() const;

private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// A^k for k >= 0.
ExactMatrix matrix_power(const ExactMatrix& a, std::size_t k);

/// Fraction-free (Bareiss) elimination on the integer matrix obtained by
/// scaling each row by the lcm of its denominators.
Rational determinant(const ExactMatrix& a);
/// Plain Gaussian elimination over the rationals, kept as a cross-check.
Rational determinant_gauss(const ExactMatrix& a);
/// Gauss-Jordan inverse. Throws std::domain_error for singular input.
ExactMatrix inverse(const ExactMatrix& a);

} // namespace cauchy
