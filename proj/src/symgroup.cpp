#include "cauchy/symgroup.hpp"

#include "cauchy/errors.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace cauchy {

namespace {

// Cycle-length counts of a 0-based permutation, indexed by length - 1.
std::vector<std::size_t> cycle_counts(const std::vector<std::size_t>& zero_based,
                                      std::vector<char>& seen) {
  const auto n = zero_based.size();
  std::vector<std::size_t> alpha(n, 0);
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    std::size_t length = 0;
    for (std::size_t j = i; !seen[j]; j = zero_based[j]) {
      seen[j] = 1;
      ++length;
    }
    ++alpha[length - 1];
  }
  return alpha;
}

// Counts over permutations with 0 -> lead; key is the raw multiplicity vector.
std::map<std::vector<std::size_t>, unsigned long> tally_with_lead(std::size_t n, std::size_t lead) {
  std::map<std::vector<std::size_t>, unsigned long> counts;
  std::vector<std::size_t> perm(n);
  perm[0] = lead;
  std::size_t pos = 1;
  for (std::size_t v = 0; v < n; ++v)
    if (v != lead)
      perm[pos++] = v;
  std::vector<char> seen(n);
  do {
    ++counts[cycle_counts(perm, seen)];
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return counts;
}

} // namespace

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (auto v : images_) {
    if (v < 1 || v > images_.size() || hit[v - 1])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
    hit[v - 1] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  return Permutation(std::move(images));
}

PartitionSymbol cycle_type(const Permutation& p) {
  std::vector<std::size_t> zero_based(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    zero_based[i] = p.images()[i] - 1;
  std::vector<char> seen(p.size());
  return PartitionSymbol(cycle_counts(zero_based, seen), p.size());
}

ClassSizes class_sizes(std::size_t n, std::size_t ceiling) {
  if (n == 0)
    throw std::invalid_argument("class_sizes requires n >= 1");
  if (n > ceiling)
    throw BudgetExceeded("enumerating S_" + std::to_string(n) + " exceeds the ceiling n <= " +
                         std::to_string(ceiling));

  std::vector<std::future<std::map<std::vector<std::size_t>, unsigned long>>> parts;
  for (std::size_t lead = 0; lead < n; ++lead)
    parts.push_back(std::async(std::launch::async, tally_with_lead, n, lead));

  ClassSizes sizes;
  for (auto& part : parts)
    for (const auto& [alpha, count] : part.get())
      sizes[PartitionSymbol(alpha, n)] += count;
  return sizes;
}

} // namespace cauchy
