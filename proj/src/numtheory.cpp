#include "coprime/numtheory.hpp"

#include <algorithm>
#include <cctype>

namespace coprime {

namespace {

constexpr int kSieveLimit = 1 << 16;

// Immutable after construction; function-local static init is thread-safe.
const std::vector<bool>& composite_table() {
  static const std::vector<bool> table = [] {
    std::vector<bool> composite(kSieveLimit, false);
    composite[0] = composite[1] = true;
    for (int i = 2; i * i < kSieveLimit; ++i) {
      if (composite[i]) continue;
      for (int j = i * i; j < kSieveLimit; j += i) composite[j] = true;
    }
    return composite;
  }();
  return table;
}

std::vector<bool> sieve(int n) {
  std::vector<bool> composite(std::max(n, 2), false);
  composite[0] = composite[1] = true;
  for (long long i = 2; i * i < n; ++i) {
    if (composite[i]) continue;
    for (long long j = i * i; j < n; j += i) composite[j] = true;
  }
  return composite;
}

constexpr int kPrimorialLimit = 16384;

// prefix[j] is the product of the odd primes among the first j primes
// below kPrimorialLimit.
struct PrimorialTable {
  std::vector<int> primes;
  std::vector<BigInt> prefix;
};

const PrimorialTable& primorial_table() {
  static const PrimorialTable table = [] {
    PrimorialTable t;
    const auto& composite = composite_table();
    t.prefix.emplace_back(1);
    for (int p = 2; p < kPrimorialLimit; ++p) {
      if (composite[p]) continue;
      t.primes.push_back(p);
      t.prefix.push_back(p == 2 ? t.prefix.back() : BigInt(t.prefix.back() * p));
    }
    return t;
  }();
  return table;
}

bool is_prime_small(int x) {
  if (x < 2) return false;
  if (x < kSieveLimit) return !composite_table()[x];
  for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

bool coprime(const BigInt& a, const BigInt& b) { return gcd(a, b) == 1; }

bool divides(const BigInt& d, const BigInt& x) { return x % d == 0; }

bool divides(std::int64_t d, const BigInt& x) { return x % d == 0; }

std::vector<int> primes_below(int n) {
  std::vector<int> out;
  if (n <= 2) return out;
  if (n <= kSieveLimit) {
    const auto& composite = composite_table();
    for (int i = 2; i < n; ++i)
      if (!composite[i]) out.push_back(i);
    return out;
  }
  const auto composite = sieve(n);
  for (int i = 2; i < n; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

BigInt odd_primorial(int n) {
  const auto& table = primorial_table();
  if (n <= kPrimorialLimit) {
    const auto below = std::lower_bound(table.primes.begin(), table.primes.end(), n) - table.primes.begin();
    return table.prefix[below];
  }
  BigInt product = table.prefix.back();
  for (int p : primes_below(n))
    if (p >= kPrimorialLimit) product *= p;
  return product;
}

int prime_count_below(int n) { return static_cast<int>(primes_below(n).size()); }

int count_distinct_prime_factors(const BigInt& x) {
  if (x == 0) throw std::invalid_argument("count_distinct_prime_factors: x must be nonzero");
  BigInt rest = abs(x);
  int count = 0;
  if (rest % 2 == 0) {
    ++count;
    while (rest % 2 == 0) rest /= 2;
  }
  for (BigInt d = 3; d * d <= rest; d += 2) {
    if (rest % d != 0) continue;
    ++count;
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) ++count;
  return count;
}

BigInt PowDecomposition::value() const {
  BigInt v = BigInt(1) << r;
  return v + boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(s));
}

bool is_valid_decomposition(const PowDecomposition& d, int x) {
  if (d.r < 1 || d.s < 0 || d.p < 3 || !is_prime_small(d.p)) return false;
  if (d.value() != x) return false;
  const BigInt mersenne = (BigInt(1) << d.r) - 1;
  return !divides(d.p, mersenne);
}

namespace {

// Returns (p, s) when y = p^s for an odd prime p and s >= 1.
std::optional<std::pair<int, int>> as_odd_prime_power(int y) {
  if (y < 3 || y % 2 == 0) return std::nullopt;
  int p = 3;
  while (y % p != 0) p += 2;
  int s = 0;
  while (y % p == 0) {
    y /= p;
    ++s;
  }
  if (y != 1) return std::nullopt;
  return std::pair{p, s};
}

}  // namespace

PowDecomposition decompose_pow2_plus_prime_power(int x) {
  if (x % 2 == 0 || x < 3 || x > 147)
    throw std::invalid_argument("decompose_pow2_plus_prime_power: x must be odd with 3 <= x <= 147");

  std::optional<PowDecomposition> best;
  for (int r = 1; (1 << r) < x; ++r) {
    const auto power = as_odd_prime_power(x - (1 << r));
    if (!power) continue;
    if ((((1 << r) - 1) % power->first) == 0) continue;
    const PowDecomposition candidate{r, power->second, power->first};
    if (!best || candidate.p < best->p) best = candidate;
  }
  if (best) return *best;

  // Only s = 0 remains, which needs x - 1 = 2^r.
  for (int r = 1; (1 << r) < x; ++r) {
    if ((1 << r) + 1 != x) continue;
    const int mersenne = (1 << r) - 1;
    for (int p = 3;; p += 2)
      if (is_prime_small(p) && mersenne % p != 0) return {r, 0, p};
  }
  throw InternalError("decompose_pow2_plus_prime_power: no decomposition found");
}

std::optional<int> smallest_odd_prime_not_dividing(const BigInt& x, int bound) {
  for (int p : primes_below(bound)) {
    if (p == 2) continue;
    if (!divides(p, x)) return p;
  }
  return std::nullopt;
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("not an integer: '" + text + "'");
  BigInt value(text.substr(i));
  return text[0] == '-' ? BigInt(-value) : value;
}

std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace coprime
