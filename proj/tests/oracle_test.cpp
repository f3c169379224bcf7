#include <doctest.h>

#include "brute.hpp"
#include "coprime/hamilton.hpp"
#include "coprime/oracle.hpp"

using coprime::BigInt;
using coprime::CoprimeGraph;
using coprime::PrimeLabeling;
using coprime::TwoRegularSpec;

namespace {
std::vector<BigInt> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST_CASE("brute_cycle examples") {
  CHECK_FALSE(coprime::brute_cycle(9, 4).has_value());
  CHECK(coprime::brute_cycle(1, 4)->vertices == ints({1, 2, 3, 4}));
  const auto c = coprime::brute_cycle(75, 10);
  REQUIRE(c.has_value());
  CHECK(coprime::verify_cycle(CoprimeGraph(75, 10), *c));
  CHECK(c->vertices.front() == 75);
}

TEST_CASE("brute_decide examples") {
  CHECK_FALSE(coprime::brute_decide(2, 3));
  CHECK(coprime::brute_decide(1, 3));
  CHECK_FALSE(coprime::brute_decide(3, 4));
}

TEST_CASE("brute_cycle limits") {
  CHECK_THROWS_AS(coprime::brute_cycle(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(coprime::brute_cycle(1, 19), std::invalid_argument);
  coprime::SearchLimits wide;
  wide.max_order = 22;
  CHECK(coprime::brute_cycle(1, 19, wide).has_value());
  coprime::SearchLimits tight;
  tight.node_budget = 1;
  CHECK_THROWS_AS(coprime::brute_cycle(3, 12, tight), coprime::SearchBudgetExceeded);
}

TEST_CASE("brute_cycle agrees with permutation enumeration") {
  for (int n = 3; n <= 8; ++n)
    for (long long k = -15; k <= 45; ++k) {
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(coprime::brute_decide(k, n) == brute::hamiltonian(k, n));
    }
}

TEST_CASE("brute_cycle is deterministic and verified") {
  for (int n = 3; n <= 16; ++n)
    for (long long k = -20; k <= 60; k += 3) {
      const auto a = coprime::brute_cycle(k, n);
      const auto b = coprime::brute_cycle(k, n);
      REQUIRE(a.has_value() == b.has_value());
      if (!a) continue;
      REQUIRE(a->vertices == b->vertices);
      REQUIRE(coprime::verify_cycle(CoprimeGraph(k, n), *a));
      REQUIRE(a->vertices.front() == k);
    }
}

TEST_CASE("brute_label examples") {
  CHECK_FALSE(coprime::brute_label(TwoRegularSpec{{3, 3}}).has_value());
  CHECK(coprime::brute_label(TwoRegularSpec{{3}})->blocks == std::vector<std::vector<BigInt>>{ints({1, 2, 3})});
  const TwoRegularSpec three_fours{{4, 4, 4}};
  const auto lab = coprime::brute_label(three_fours);
  REQUIRE(lab.has_value());
  CHECK(coprime::verify_labeling(three_fours, *lab));
  CHECK(coprime::verify_labeling(three_fours, PrimeLabeling{{ints({1, 12, 5, 2}), ints({3, 10, 9, 8}),
                                                              ints({4, 7, 6, 11})}}));
}

TEST_CASE("brute_label limits") {
  CHECK_THROWS_AS(coprime::brute_label(TwoRegularSpec{{12, 13}}), std::invalid_argument);
  CHECK_THROWS_AS(coprime::brute_label(TwoRegularSpec{{2, 4}}), std::invalid_argument);
}

TEST_CASE("brute_label decides small specs by the odd-cycle count") {
  for (const auto& lengths : brute::length_multisets(3, 12, 16)) {
    const TwoRegularSpec spec{lengths};
    const auto lab = coprime::brute_label(spec);
    CAPTURE(lengths.size());
    REQUIRE(lab.has_value() == (spec.odd_count() <= 1));
    if (lab) REQUIRE(coprime::verify_labeling(spec, *lab));
  }
}
