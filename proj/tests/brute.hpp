#pragma once

// Test-only reference computations on machine integers. Deliberately naive
// and independent of the library.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace brute {

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  if (a == 0) return b;
  if (b == 0) return a;
  std::int64_t best = 1;
  for (std::int64_t d = 1; d <= std::min(a, b); ++d)
    if (a % d == 0 && b % d == 0) best = d;
  return best;
}

inline bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  for (std::int64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

inline std::vector<int> primes_below(int n) {
  std::vector<int> out;
  for (int i = 2; i < n; ++i)
    if (is_prime(i)) out.push_back(i);
  return out;
}

// Every (r, s, p) with 2^r + p^s = x, r >= 1, s >= 0, p odd prime < 2x,
// p not dividing 2^r - 1.
struct Triple {
  int r, s, p;
};

inline std::vector<Triple> all_decompositions(int x) {
  std::vector<Triple> out;
  for (int r = 1; (1 << r) < x; ++r) {
    const int rest = x - (1 << r);
    for (int p = 3; p < 2 * x; p += 2) {
      if (!is_prime(p) || ((1 << r) - 1) % p == 0) continue;
      long long power = 1;
      for (int s = 0; power <= rest; ++s, power *= p)
        if (power == rest) out.push_back({r, s, p});
    }
  }
  return out;
}

// Exhaustive Hamiltonian cycle existence on consecutive integers k..k+n-1
// via permutations of the non-start vertices (small n only).
inline bool hamiltonian(std::int64_t k, int n) {
  std::vector<int> perm;
  for (int i = 1; i < n; ++i) perm.push_back(i);
  do {
    if (perm.front() > perm.back()) continue;  // each cycle once per direction
    std::int64_t prev = k;
    bool ok = true;
    for (int i : perm) {
      if (gcd(prev, k + i) != 1) { ok = false; break; }
      prev = k + i;
    }
    if (ok && gcd(prev, k) == 1) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every non-decreasing list of lengths from [lo, hi] with sum <= max_total.
inline std::vector<std::vector<int>> length_multisets(int lo, int hi, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from, int total) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int len = from; len <= hi && total + len <= max_total; ++len) {
      cur.push_back(len);
      self(self, len, total + len);
      cur.pop_back();
    }
  };
  rec(rec, lo, 0);
  return out;
}

}  // namespace brute
