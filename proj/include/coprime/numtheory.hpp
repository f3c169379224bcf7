#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coprime {

/// Arbitrary-precision signed integer used for every vertex value.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when a construction detects that one of its own invariants does
/// not hold. Indicates a bug, never a bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Nonnegative gcd; gcd(a, 0) = |a| and gcd(0, 0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

bool coprime(const BigInt& a, const BigInt& b);

/// True iff `d` divides `x` (d != 0).
bool divides(const BigInt& d, const BigInt& x);
bool divides(std::int64_t d, const BigInt& x);

/// Primes p < n in ascending order.
std::vector<int> primes_below(int n);

/// Product of all odd primes below n (empty product is 1).
BigInt odd_primorial(int n);

/// Number of primes below n.
int prime_count_below(int n);

/// Number of distinct primes dividing |x|. Throws std::invalid_argument for 0.
int count_distinct_prime_factors(const BigInt& x);

/// x = 2^r + p^s with r >= 1, s >= 0, p an odd prime and p not dividing 2^r - 1.
struct PowDecomposition {
  int r = 0;
  int s = 0;
  int p = 0;

  BigInt value() const;
  bool operator==(const PowDecomposition&) const = default;
};

/// Decomposes an odd x in [3, 147] as 2^r + p^s.
///
/// Deterministic choice: decompositions with s >= 1 are preferred; among
/// them the smallest p wins, then the smallest r. When x - 1 is a power of
/// two and nothing else works, s = 0 is returned with the smallest odd
/// prime not dividing 2^r - 1.
PowDecomposition decompose_pow2_plus_prime_power(int x);

/// Recomputes all three decomposition invariants for `x`.
bool is_valid_decomposition(const PowDecomposition& d, int x);

/// Smallest odd prime p < bound with p not dividing x, if any.
std::optional<int> smallest_odd_prime_not_dividing(const BigInt& x, int bound);

/// Parses a full decimal integer (optional leading sign). Throws
/// std::invalid_argument on anything else.
BigInt parse_bigint(const std::string& text);

/// Full decimal rendering, never abbreviated.
std::string to_decimal(const BigInt& x);

}  // namespace coprime
