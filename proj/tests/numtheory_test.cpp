#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "coprime/numtheory.hpp"

using coprime::BigInt;

TEST_CASE("gcd examples and conventions") {
  CHECK(coprime::gcd(12, 9) == 3);
  CHECK(coprime::gcd(-7, 0) == 7);
  CHECK(coprime::gcd(75, 84) == brute::gcd(75, 84));
  CHECK(coprime::gcd(75, 84) == 3);
  CHECK(coprime::gcd(0, 0) == 0);
  CHECK(coprime::gcd(0, -5) == 5);
}

TEST_CASE("coprime examples") {
  CHECK(coprime::coprime(9, 10));
  CHECK(coprime::coprime(0, 1));
  CHECK(coprime::coprime(0, -1));
  CHECK_FALSE(coprime::coprime(0, 2));
  CHECK_FALSE(coprime::coprime(0, 0));
}

TEST_CASE("gcd symmetry and sign invariance on random inputs") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long long> dist(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int i = 0; i < 2000; ++i) {
    const BigInt a = dist(rng), b = dist(rng);
    const BigInt g = coprime::gcd(a, b);
    CHECK(g >= 0);
    CHECK(g == coprime::gcd(-a, b));
    CHECK(g == coprime::gcd(b, a));
    CHECK(g == coprime::gcd(a, -b));
  }
  // Beyond 64 bits.
  const BigInt big = BigInt(1) << 200;
  CHECK(coprime::gcd(big * 3, big * 5) == big);
}

TEST_CASE("gcd shift rule, exhaustive for |a|,|b| <= 200") {
  for (int a = -200; a <= 200; ++a)
    for (int b = -200; b <= 200; ++b)
      REQUIRE(coprime::gcd(a, b) == coprime::gcd(a, b - a));
}

TEST_CASE("gcd agrees with divisor enumeration") {
  for (int a = -60; a <= 60; ++a)
    for (int b = -60; b <= 60; ++b)
      REQUIRE(coprime::gcd(a, b) == brute::gcd(a, b));
}

TEST_CASE("primes_below") {
  CHECK(coprime::primes_below(10) == std::vector<int>{2, 3, 5, 7});
  CHECK(coprime::primes_below(2).empty());
  CHECK(coprime::primes_below(0).empty());
  CHECK(coprime::primes_below(13) == std::vector<int>{2, 3, 5, 7, 11});
  for (int n : {3, 100, 1000, 7919, 7920})
    CHECK(coprime::primes_below(n) == brute::primes_below(n));
  // Past the cached sieve.
  CHECK(coprime::primes_below(70000) == brute::primes_below(70000));
}

TEST_CASE("odd_primorial") {
  CHECK(coprime::odd_primorial(6) == 15);
  CHECK(coprime::odd_primorial(7) == 15);
  CHECK(coprime::odd_primorial(8) == 105);
  CHECK(coprime::odd_primorial(3) == 1);
  CHECK(coprime::odd_primorial(0) == 1);
  CHECK(coprime::odd_primorial(4) == 3);
  for (int n : {12, 40, 61, 200, 16384, 16400}) {
    BigInt expected = 1;
    for (int p : brute::primes_below(n))
      if (p != 2) expected *= p;
    CHECK(coprime::odd_primorial(n) == expected);
  }
}

TEST_CASE("prime_count_below") {
  CHECK(coprime::prime_count_below(12) == 5);
  CHECK(coprime::prime_count_below(16) == 6);
  CHECK(coprime::prime_count_below(3) == 1);
  CHECK(coprime::prime_count_below(10001) == 1229);
}

TEST_CASE("count_distinct_prime_factors") {
  CHECK(coprime::count_distinct_prime_factors(11) == 1);
  CHECK(coprime::count_distinct_prime_factors(30) == 3);
  CHECK(coprime::count_distinct_prime_factors(1) == 0);
  CHECK(coprime::count_distinct_prime_factors(-1) == 0);
  CHECK(coprime::count_distinct_prime_factors(-12) == 2);
  CHECK(coprime::count_distinct_prime_factors(1024) == 1);
  CHECK_THROWS_AS(coprime::count_distinct_prime_factors(0), std::invalid_argument);
}

TEST_CASE("decomposition examples match exhaustive search") {
  using D = coprime::PowDecomposition;
  CHECK(coprime::decompose_pow2_plus_prime_power(5) == D{1, 1, 3});
  CHECK(coprime::decompose_pow2_plus_prime_power(13) == D{3, 1, 5});
  CHECK(coprime::decompose_pow2_plus_prime_power(3) == D{1, 0, 3});

  // The preferred choice is: s >= 1 first, then smallest p, then smallest r.
  for (int x = 3; x <= 147; x += 2) {
    auto all = brute::all_decompositions(x);
    REQUIRE_FALSE(all.empty());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      const bool as = a.s >= 1, bs = b.s >= 1;
      if (as != bs) return as;
      if (a.p != b.p) return a.p < b.p;
      return a.r < b.r;
    });
    const auto got = coprime::decompose_pow2_plus_prime_power(x);
    CAPTURE(x);
    CHECK(got.r == all.front().r);
    CHECK(got.s == all.front().s);
    CHECK(got.p == all.front().p);
    CHECK(coprime::is_valid_decomposition(got, x));
  }
}

TEST_CASE("decomposition has s >= 1 whenever x - 1 is not a power of two (x <= 33)") {
  for (int x = 3; x <= 33; x += 2) {
    const int y = x - 1;
    if ((y & (y - 1)) == 0) continue;
    CAPTURE(x);
    CHECK(coprime::decompose_pow2_plus_prime_power(x).s >= 1);
  }
}

TEST_CASE("decomposition rejects inputs outside the guarantee") {
  for (int x : {4, 1, -3, 149, 151, 0, 2})
    CHECK_THROWS_AS(coprime::decompose_pow2_plus_prime_power(x), std::invalid_argument);
}

TEST_CASE("is_valid_decomposition rejects broken triples") {
  CHECK_FALSE(coprime::is_valid_decomposition({2, 2, 3}, 13));  // 3 | 2^2 - 1
  CHECK_FALSE(coprime::is_valid_decomposition({1, 1, 9}, 11));  // 9 not prime
  CHECK_FALSE(coprime::is_valid_decomposition({1, 1, 3}, 7));   // wrong value
  CHECK(coprime::is_valid_decomposition({1, 1, 11}, 13));
}

TEST_CASE("smallest_odd_prime_not_dividing") {
  CHECK(coprime::smallest_odd_prime_not_dividing(75, 10) == 7);
  CHECK(coprime::smallest_odd_prime_not_dividing(1, 4) == 3);
  CHECK_FALSE(coprime::smallest_odd_prime_not_dividing(105, 8).has_value());
  CHECK_FALSE(coprime::smallest_odd_prime_not_dividing(0, 50).has_value());
  CHECK_FALSE(coprime::smallest_odd_prime_not_dividing(1, 3).has_value());
  for (int x = -300; x <= 300; ++x) {
    for (int bound : {4, 10, 30}) {
      std::optional<int> expected;
      for (int p = 3; p < bound; p += 2)
        if (brute::is_prime(p) && x % p != 0) { expected = p; break; }
      REQUIRE(coprime::smallest_odd_prime_not_dividing(x, bound) == expected);
    }
  }
}

TEST_CASE("parse_bigint round trip") {
  const std::string text = "-123456789012345678901234567890";
  CHECK(coprime::to_decimal(coprime::parse_bigint(text)) == text);
  CHECK(coprime::parse_bigint("+17") == 17);
  for (const char* bad : {"", "-", "1e5", "12a", " 3", "0x10"})
    CHECK_THROWS_AS(coprime::parse_bigint(bad), std::invalid_argument);
}
