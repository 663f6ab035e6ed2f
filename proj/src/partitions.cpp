#include "cauchy/partitions.hpp"

#include "cauchy/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cauchy {

namespace {

std::string join(const std::vector<std::size_t>& v, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(v[i]);
  }
  out += close;
  return out;
}

std::size_t weighted_sum(const std::vector<std::size_t>& alpha) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    s += (i + 1) * alpha[i];
  return s;
}

// Appends every partition of `remaining` whose parts are >= `smallest`,
// each prefixed by `prefix`, in lexicographic order.
void extend(std::size_t remaining, std::size_t smallest, std::vector<std::size_t>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t part = smallest; part <= remaining; ++part) {
    // A part that leaves a positive remainder below itself cannot be followed.
    if (remaining - part != 0 && remaining - part < part)
      continue;
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
    throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end());
}

std::size_t Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string Partition::to_string() const { return join(parts_, '(', ')'); }

PartitionSymbol::PartitionSymbol(std::vector<std::size_t> multiplicities)
    : PartitionSymbol(multiplicities, weighted_sum(multiplicities)) {}

PartitionSymbol::PartitionSymbol(std::vector<std::size_t> multiplicities, std::size_t k)
    : multiplicities_(std::move(multiplicities)) {
  const auto sum = weighted_sum(multiplicities_);
  if (sum != k)
    throw InvalidSymbol("partition symbol " + join(multiplicities_, '[', ']') + " sums to " +
                        std::to_string(sum) + ", expected " + std::to_string(k));
  // Any nonzero entry past index k would push the sum over k, so this only
  // drops zeros.
  multiplicities_.resize(k, 0);
}

std::size_t PartitionSymbol::multiplicity(std::size_t i) const {
  return i >= 1 && i <= multiplicities_.size() ? multiplicities_[i - 1] : 0;
}

std::size_t PartitionSymbol::length() const {
  return std::accumulate(multiplicities_.begin(), multiplicities_.end(), std::size_t{0});
}

std::string PartitionSymbol::to_string() const {
  auto trimmed = multiplicities_;
  while (!trimmed.empty() && trimmed.back() == 0)
    trimmed.pop_back();
  return join(trimmed, '[', ']');
}

std::vector<Partition> enumerate_partitions(std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("enumerate_partitions requires k >= 1");
  std::vector<Partition> out;
  std::vector<std::size_t> prefix;
  extend(k, 1, prefix, out);
  return out;
}

PartitionSymbol to_symbol(const Partition& p) {
  std::vector<std::size_t> alpha(p.total(), 0);
  for (auto part : p.parts())
    ++alpha[part - 1];
  return PartitionSymbol(std::move(alpha), p.total());
}

Partition from_symbol(const PartitionSymbol& alpha) {
  std::vector<std::size_t> parts;
  for (std::size_t i = 1; i <= alpha.total(); ++i)
    parts.insert(parts.end(), alpha.multiplicity(i), i);
  return Partition(std::move(parts));
}

Monomial symbol_monomial(const PartitionSymbol& alpha) {
  return Monomial::from_exponents(alpha.multiplicities());
}

PartitionSymbol monomial_symbol(const Monomial& m) {
  std::vector<std::size_t> alpha(m.max_variable(), 0);
  for (const auto& [i, e] : m.factors())
    alpha[i - 1] = e;
  return PartitionSymbol(std::move(alpha));
}

Integer cauchy_h(const PartitionSymbol& alpha) {
  Integer denominator = 1;
  for (std::size_t i = 1; i <= alpha.total(); ++i) {
    const auto a = alpha.multiplicity(i);
    if (a == 0)
      continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, a);
    denominator *= factorial(a) * power;
  }
  const Integer numerator = factorial(alpha.total());
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw std::logic_error("cauchy_h: non-integral class size for " + alpha.to_string());
  return numerator / denominator;
}

int sign_of_symbol(const PartitionSymbol& alpha) {
  std::size_t even_parts = 0;
  for (std::size_t i = 2; i <= alpha.total(); i += 2)
    even_parts += alpha.multiplicity(i);
  return even_parts % 2 == 0 ? 1 : -1;
}

} // namespace cauchy
