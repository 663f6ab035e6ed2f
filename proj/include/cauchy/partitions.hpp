#pragma once

#include "cauchy/monomial.hpp"
#include "cauchy/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cauchy {

/// Partition of k stored with weakly increasing parts, e.g. (1,1,1,3,4).
class Partition {
public:
  Partition() = default;
  /// Parts in any order; they are sorted on ingestion. Zero parts are
  /// rejected with std::invalid_argument.
  explicit Partition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t total() const;
  std::size_t length() const { return parts_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// "(1,1,1,3,4)"
  std::string to_string() const;

private:
  std::vector<std::size_t> parts_;
};

/// Multiplicity form of a partition: alpha_i counts the parts equal to i.
/// Canonical storage has length exactly k (trailing zeros kept).
class PartitionSymbol {
public:
  PartitionSymbol() = default;
  /// k is taken to be sum(i * alpha_i). Entries beyond index k must be zero.
  explicit PartitionSymbol(std::vector<std::size_t> multiplicities);
  /// Throws InvalidSymbol when sum(i * alpha_i) != k.
  PartitionSymbol(std::vector<std::size_t> multiplicities, std::size_t k);

  std::size_t total() const { return multiplicities_.size(); }
  /// alpha_i for 1-based i; zero outside the stored range.
  std::size_t multiplicity(std::size_t i) const;
  const std::vector<std::size_t>& multiplicities() const { return multiplicities_; }
  /// Number of parts, sum of alpha_i.
  std::size_t length() const;

  friend bool operator==(const PartitionSymbol&, const PartitionSymbol&) = default;
  friend auto operator<=>(const PartitionSymbol&, const PartitionSymbol&) = default;

  /// "[3,0,1,1]" with trailing zeros dropped.
  std::string to_string() const;

private:
  std::vector<std::size_t> multiplicities_;
};

/// Every partition of k once, lexicographic by increasing parts:
/// (1,1,1,1), (1,1,2), (1,3), (2,2), (4). Throws std::invalid_argument for k == 0.
std::vector<Partition> enumerate_partitions(std::size_t k);

PartitionSymbol to_symbol(const Partition& p);
Partition from_symbol(const PartitionSymbol& alpha);

/// x_1^{alpha_1} x_2^{alpha_2} ..., a monomial of weight k.
Monomial symbol_monomial(const PartitionSymbol& alpha);
/// Inverse of symbol_monomial.
PartitionSymbol monomial_symbol(const Monomial& m);

/// Cauchy's count k! / (prod alpha_i! * prod i^{alpha_i}), the size of the
/// conjugacy class of cycle type alpha in S_k.
Integer cauchy_h(const PartitionSymbol& alpha);

/// (-1)^(alpha_2 + alpha_4 + ...).
int sign_of_symbol(const PartitionSymbol& alpha);

} // namespace cauchy
