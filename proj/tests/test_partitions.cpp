#include "oracles.hpp"

#include "cauchy/errors.hpp"
#include "cauchy/partitions.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cauchy;

TEST_CASE("enumerate_partitions") {
  const auto one = enumerate_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Partition({1}));

  const auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  const std::vector<Partition> expected{Partition({1, 1, 1, 1}), Partition({1, 1, 2}),
                                        Partition({1, 3}), Partition({2, 2}), Partition({4})};
  CHECK(four == expected);

  const auto ten = enumerate_partitions(10);
  CHECK(std::find(ten.begin(), ten.end(), Partition({1, 1, 1, 3, 4})) != ten.end());
  CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
}

TEST_CASE("partition counts match the pentagonal recurrence") {
  for (std::size_t k = 1; k <= 20; ++k) {
    const auto parts = enumerate_partitions(k);
    CHECK(Integer(parts.size()) == oracle::partition_count(k));
    CHECK(std::is_sorted(parts.begin(), parts.end()));
    CHECK(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
    for (const auto& p : parts) {
      CHECK(p.total() == k);
      CHECK(std::is_sorted(p.parts().begin(), p.parts().end()));
    }
  }
}

TEST_CASE("partitions are normalized to increasing parts") {
  CHECK(Partition({4, 1, 3, 1, 1}).parts() == std::vector<std::size_t>{1, 1, 1, 3, 4});
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("to_symbol / from_symbol") {
  const auto alpha = to_symbol(Partition({1, 1, 1, 3, 4}));
  CHECK(alpha.multiplicities() == std::vector<std::size_t>{3, 0, 1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(alpha.to_string() == "[3,0,1,1]");
  CHECK(alpha.length() == 5);

  const auto single = to_symbol(Partition({6}));
  CHECK(single.multiplicity(6) == 1);
  CHECK(single.length() == 1);

  CHECK(from_symbol(PartitionSymbol({2})) == Partition({1, 1}));

  for (std::size_t k = 1; k <= 12; ++k)
    for (const auto& p : enumerate_partitions(k))
      CHECK(from_symbol(to_symbol(p)) == p);
}

TEST_CASE("partition symbols validate their declared total") {
  CHECK_THROWS_AS(PartitionSymbol({3, 0, 1, 1}, 9), InvalidSymbol);
  CHECK_NOTHROW(PartitionSymbol({3, 0, 1, 1}, 10));
  CHECK(PartitionSymbol({3, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}).total() == 10);
  CHECK(PartitionSymbol({3, 0, 1, 1}) == PartitionSymbol({3, 0, 1, 1, 0, 0}, 10));
}

TEST_CASE("cauchy_h") {
  CHECK(cauchy_h(PartitionSymbol({1})) == 1);
  CHECK(cauchy_h(PartitionSymbol({1, 1})) == 3);
  CHECK(cauchy_h(PartitionSymbol({3, 0, 1, 1})) == 50400);
}

TEST_CASE("cauchy_h agrees with a Heap's-algorithm census of S_n") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto census = oracle::cycle_length_census(n);
    for (const auto& p : enumerate_partitions(n)) {
      auto it = census.find(p.parts());
      REQUIRE(it != census.end());
      CHECK(cauchy_h(to_symbol(p)) == it->second);
    }
  }
}

TEST_CASE("class sizes sum to n! up to n = 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    Integer total = 0;
    for (const auto& p : enumerate_partitions(n))
      total += cauchy_h(to_symbol(p));
    CHECK(total == factorial(n));
  }
}

TEST_CASE("sign_of_symbol") {
  CHECK(sign_of_symbol(PartitionSymbol({0, 0, 1})) == 1);
  CHECK(sign_of_symbol(PartitionSymbol({0, 1})) == -1);
  CHECK(sign_of_symbol(PartitionSymbol({0, 2})) == 1);
  CHECK(sign_of_symbol(PartitionSymbol({2, 1})) == -1);
}

TEST_CASE("sign_of_symbol is the sign of a permutation with that cycle type") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const auto alpha = to_symbol(p);
      const int permutation_sign = (n - alpha.length()) % 2 == 0 ? 1 : -1;
      CHECK(sign_of_symbol(alpha) == permutation_sign);
    }
}

TEST_CASE("symbol monomials carry the symbol as exponents") {
  const PartitionSymbol alpha({3, 0, 1, 1});
  const auto m = symbol_monomial(alpha);
  CHECK(m.to_string() == "x1^3*x3*x4");
  CHECK(m.weight() == 10);
  CHECK(monomial_symbol(m) == alpha);
}
