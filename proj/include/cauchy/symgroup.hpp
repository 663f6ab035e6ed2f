#pragma once

#include "cauchy/partitions.hpp"
#include "cauchy/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace cauchy {

/// Bijection on {1..n}, stored as its images in one-line notation.
class Permutation {
public:
  /// Throws std::invalid_argument unless images is a permutation of 1..n.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  /// Image of 1-based point i.
  std::size_t operator()(std::size_t i) const { return images_[i - 1]; }
  const std::vector<std::size_t>& images() const { return images_; }

private:
  std::vector<std::size_t> images_;
};

/// alpha_i = number of i-cycles, fixed points counting as 1-cycles.
PartitionSymbol cycle_type(const Permutation& p);

using ClassSizes = std::map<PartitionSymbol, Integer>;

inline constexpr std::size_t kClassSizeCeiling = 9;

/// Tally of cycle types over all n! permutations, enumerated in
/// lexicographic order. Work is split across threads by the image of 1 and
/// merged in a fixed order. Throws BudgetExceeded when n > ceiling and
/// std::invalid_argument for n == 0.
ClassSizes class_sizes(std::size_t n, std::size_t ceiling = kClassSizeCeiling);

} // namespace cauchy
