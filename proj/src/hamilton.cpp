#include "coprime/hamilton.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coprime/oracle.hpp"

namespace coprime {

std::string_view to_string(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::kOddOdd: return "ODD_ODD";
    case DecisionRule::kEvenCondition: return "EVEN_COND";
    case DecisionRule::kOddEvenObstruction: return "ODD_EVEN_OBSTRUCTION";
    case DecisionRule::kEvenPrimorialObstruction: return "EVEN_PRIMORIAL_OBSTRUCTION";
    case DecisionRule::kDegenerateSmallN: return "DEGENERATE_SMALL_N";
  }
  return "UNKNOWN";
}

DecisionReport classify(const BigInt& k, int n) {
  if (n < 1) throw std::invalid_argument("order n must be >= 1");
  DecisionReport report;
  if (n < 3) return report;

  const bool k_odd = (k % 2 != 0);
  if (n % 2 == 1) {
    report.hamiltonian = k_odd;
    report.rule = k_odd ? DecisionRule::kOddOdd : DecisionRule::kOddEvenObstruction;
    return report;
  }
  report.first_witness = smallest_odd_prime_not_dividing(k, n);
  report.last_witness = smallest_odd_prime_not_dividing(k + (n - 1), n);
  report.primorial_divides_first = !report.first_witness;
  report.primorial_divides_last = !report.last_witness;
  report.hamiltonian = report.first_witness && report.last_witness;
  report.rule = report.hamiltonian ? DecisionRule::kEvenCondition
                                   : DecisionRule::kEvenPrimorialObstruction;
  return report;
}

DecisionReport decide(const BigInt& k, int n) {
  if (n < 3) throw std::invalid_argument("decide: order n must be >= 3");
  return classify(k, n);
}

bool verify_cycle(const CoprimeGraph& g, const VertexCycle& c) {
  const auto& v = c.vertices;
  const int n = g.order();
  if (n < 3 || static_cast<int>(v.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto& x : v) {
    if (!g.contains(x)) return false;
    const int i = g.offset_of(x);
    if (seen[i]) return false;
    seen[i] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!coprime(v[i], v[(i + 1) % n])) return false;
  return true;
}

bool is_special(const VertexCycle& c, const BigInt& k, int n) {
  const auto& v = c.vertices;
  const std::size_t size = v.size();
  if (size < 2) return false;
  auto has_edge = [&](const BigInt& x, const BigInt& y) {
    for (std::size_t i = 0; i < size; ++i) {
      const auto& u = v[i];
      const auto& w = v[(i + 1) % size];
      if ((u == x && w == y) || (u == y && w == x)) return true;
    }
    return false;
  };
  const BigInt last = k + (n - 1);
  return has_edge(k, k + 1) && has_edge(last - 1, last);
}

std::vector<std::pair<BigInt, BigInt>> chords_of(const ChordPlan& plan) {
  const auto& p = plan.path.vertices;
  std::vector<std::pair<BigInt, BigInt>> chords;
  if (p.empty()) return chords;
  std::size_t from = 0;
  for (int cut : plan.cuts) {
    chords.emplace_back(p[from], p[cut + 1]);
    from = static_cast<std::size_t>(cut);
  }
  chords.emplace_back(p[from], p.back());
  return chords;
}

VertexCycle lemma_edges_cycle(const ChordPlan& plan, const CoprimeGraph& g) {
  const auto& p = plan.path.vertices;
  const int n = g.order();
  if (n < 3 || static_cast<int>(p.size()) != n)
    throw std::invalid_argument("chord plan: path length must equal the graph order (>= 3)");
  std::vector<bool> seen(n, false);
  for (const auto& x : p) {
    if (!g.contains(x) || seen[g.offset_of(x)])
      throw std::invalid_argument("chord plan: path is not a Hamiltonian path of the graph");
    seen[g.offset_of(x)] = true;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!adjacent(g, p[i], p[i + 1]))
      throw std::invalid_argument("chord plan: consecutive path vertices are not adjacent");
  int previous = 0;
  for (int cut : plan.cuts) {
    if (cut <= previous || cut > n - 2)
      throw std::invalid_argument("chord plan: cut positions must satisfy 1 <= c1 < ... < ck <= n-2");
    previous = cut;
  }
  const auto chords = chords_of(plan);
  for (const auto& [u, w] : chords)
    if (!adjacent(g, u, w))
      throw std::invalid_argument("chord plan: chord {" + to_decimal(u) + "," + to_decimal(w) +
                                  "} is not an edge");

  // Degree-2 multigraph on path positions: path edges minus cut edges, plus chords.
  std::vector<std::array<int, 2>> link(n, {-1, -1});
  auto connect = [&](int a, int b) {
    for (int x : {a, b}) {
      const int y = (x == a) ? b : a;
      auto& slot = link[x];
      if (slot[0] < 0) slot[0] = y;
      else if (slot[1] < 0) slot[1] = y;
      else throw InternalError("chord surgery produced a vertex of degree > 2");
    }
  };
  std::vector<bool> cut_after(n, false);
  for (int cut : plan.cuts) cut_after[cut] = true;
  for (int i = 0; i + 1 < n; ++i)
    if (!cut_after[i]) connect(i, i + 1);
  auto position = [&](const BigInt& x) {
    return static_cast<int>(std::find(p.begin(), p.end(), x) - p.begin());
  };
  for (const auto& [u, w] : chords) connect(position(u), position(w));

  VertexCycle cycle;
  cycle.vertices.reserve(n);
  int prev = -1;
  int cur = 0;
  for (int step = 0; step < n; ++step) {
    cycle.vertices.push_back(p[cur]);
    int next = link[cur][0];
    if (step == 0) {
      next = (link[cur][0] == 1 || link[cur][1] != 1) ? link[cur][0] : link[cur][1];
    } else if (next == prev) {
      next = link[cur][1];
    }
    prev = cur;
    cur = next;
  }
  if (cur != 0 || !verify_cycle(g, cycle))
    throw InternalError("chord surgery did not close a single Hamiltonian cycle");
  return cycle;
}

GreedySequence greedy_sequence(const BigInt& k, int n) {
  if (k % 2 == 0 || n % 2 == 0 || n < 3)
    throw std::invalid_argument("greedy_sequence: k and n must be odd with n >= 3");
  const BigInt ceiling = k + (n - 2);
  GreedySequence seq{{k}};
  for (;;) {
    const BigInt& cur = seq.terms.back();
    // gcd(cur + d, cur) = gcd(d, cur): next term is cur + d - 1 for the
    // smallest odd d >= 3 coprime to cur.
    std::optional<BigInt> next;
    for (int d = 3; cur + (d - 1) <= ceiling; d += 2) {
      const int residue = static_cast<int>(abs(cur % d));
      if (std::gcd(residue, d) == 1) {
        next = cur + (d - 1);
        break;
      }
    }
    if (!next) break;
    seq.terms.push_back(std::move(*next));
  }
  return seq;
}

namespace {

void append_run(std::vector<BigInt>& out, const BigInt& from, const BigInt& to) {
  if (from <= to) {
    for (BigInt x = from; x <= to; ++x) out.push_back(x);
  } else {
    for (BigInt x = from; x >= to; --x) out.push_back(x);
  }
}

VertexPath ascending_path(const BigInt& k, int n) {
  VertexPath path;
  path.vertices.reserve(n);
  for (int i = 0; i < n; ++i) path.vertices.push_back(k + i);
  return path;
}

VertexCycle from_offsets(const BigInt& k, std::initializer_list<int> offsets) {
  VertexCycle c;
  for (int d : offsets) c.vertices.push_back(k + d);
  return c;
}

VertexCycle consecutive(const BigInt& k, int n) { return VertexCycle{ascending_path(k, n).vertices}; }

// Hamiltonian path of `c` from `from` to `to`, where {from, to} is a cycle
// edge that the path does not use.
std::vector<BigInt> open_cycle(const VertexCycle& c, const BigInt& from, const BigInt& to) {
  const auto& v = c.vertices;
  const int size = static_cast<int>(v.size());
  const int i = static_cast<int>(std::find(v.begin(), v.end(), from) - v.begin());
  if (i == size) throw InternalError("open_cycle: vertex missing from sub-cycle");
  int step = 0;
  if (v[(i + 1) % size] == to) step = size - 1;
  else if (v[(i + size - 1) % size] == to) step = 1;
  else throw InternalError("open_cycle: sub-cycle lacks the required edge");
  std::vector<BigInt> out;
  out.reserve(size);
  for (int j = 0, idx = i; j < size; ++j, idx = (idx + step) % size) out.push_back(v[idx]);
  return out;
}

// Rotates (and possibly reverses) c so it starts with k, k+1.
VertexCycle starting_with_edge(VertexCycle c, const BigInt& k) {
  auto& v = c.vertices;
  const auto it = std::find(v.begin(), v.end(), k);
  if (it == v.end()) return c;
  std::rotate(v.begin(), it, v.end());
  if (v.size() > 1 && v[1] != k + 1) std::reverse(v.begin() + 1, v.end());
  return c;
}

VertexCycle special_impl(const BigInt& k, int n, std::vector<SubproblemCall>* trace);

VertexCycle special_recurse(int parent_order, const BigInt& k, int n,
                            std::vector<SubproblemCall>* trace) {
  if (n >= parent_order || n < 4 || n % 2 != 0)
    throw InternalError("special cycle recursion does not shrink to a valid even order");
  const BigInt va = odd_primorial(n);
  if (divides(va, k) || divides(va, k + (n - 1)))
    throw InternalError("special cycle recursion violates the primorial precondition");
  if (trace) trace->push_back({parent_order, k, n});
  return special_impl(k, n, trace);
}

// Even n <= 10; k even, k+n-1 odd, and the witness for k+n-1 is no larger
// than the witness for k.
VertexCycle special_base(const BigInt& k, int n) {
  switch (n) {
    case 4:
      return consecutive(k, 4);
    case 6:
      if (!divides(5, k)) return consecutive(k, 6);
      return from_offsets(k, {0, 1, 2, 5, 4, 3});
    case 8:
      if (!divides(7, k)) return consecutive(k, 8);
      if (!divides(5, k)) return from_offsets(k, {0, 1, 2, 3, 4, 7, 6, 5});
      return from_offsets(k, {0, 3, 4, 5, 6, 7, 2, 1});
    case 10:
      if (!divides(3, k)) return consecutive(k, 10);
      if (!divides(5, k)) return from_offsets(k, {0, 1, 2, 3, 4, 9, 8, 7, 6, 5});
      if (!divides(7, k + 2)) return from_offsets(k, {0, 1, 2, 9, 8, 3, 4, 5, 6, 7});
      // k = 75 (mod 105): the fixed cycle through 75..84, translated.
      return from_offsets(k, {0, 1, 6, 5, 2, 3, 8, 9, 4, 7});
    default:
      throw InternalError("special_base called with n > 10");
  }
}

// k >= 1 even, k+n-1 odd, last_witness <= first_witness.
VertexCycle special_core(const BigInt& k, int n, int first_witness, int last_witness,
                         std::vector<SubproblemCall>* trace) {
  if (n <= 10) return special_base(k, n);

  const BigInt last = k + (n - 1);
  const BigInt ell = k + first_witness;          // smallest odd neighbour of k beyond k+1
  const BigInt ell_last = last - last_witness;   // largest even neighbour of last below last-1
  std::vector<BigInt> out;
  out.reserve(n);

  if (ell_last > ell) {
    const int sub_order = n + 1 - last_witness;  // CPG(k, sub_order) ends at ell_last + 1
    if (!divides(odd_primorial(sub_order), ell_last + 1)) {
      const auto sub = special_recurse(n, k, sub_order, trace);
      out = open_cycle(sub, ell_last + 1, ell_last);
      append_run(out, last, ell_last + 2);
    } else {
      if (last_witness != 3) throw InternalError("case 1 fallback requires last witness 3");
      append_run(out, k, ell - 1);
      append_run(out, last, ell);
    }
    return VertexCycle{std::move(out)};
  }

  if (ell_last == ell - 1) {
    out.push_back(k);
    append_run(out, ell, last);
    append_run(out, ell_last, k + 1);
    return VertexCycle{std::move(out)};
  }

  std::optional<int> q;
  for (int p : primes_below(n)) {
    if (p == 2 || p == first_witness || p == last_witness || (n - 1) % p == 0) continue;
    q = p;
    break;
  }
  if (!q) throw InternalError("no auxiliary prime q below n");

  BigInt a;       // neighbour of k, odd
  BigInt a_last;  // neighbour of last, even
  if (!divides(*q, k)) {
    a = k + *q;
    a_last = ell_last;
  } else {
    a = ell;
    a_last = last - *q;
  }
  if (a == last || a_last == k) {
    // k and last are adjacent, so the plain run k..last closes.
    if (!coprime(k, last)) throw InternalError("expected k and k+n-1 to be coprime");
    return consecutive(k, n);
  }
  const int m = static_cast<int>(a - a_last) + 1;
  if (m < 6) throw InternalError("auxiliary pair too close");
  const BigInt va_m = odd_primorial(m);
  if (!divides(va_m, a + 1) && !divides(va_m, a_last + 1)) {
    const auto sub = special_recurse(n, a_last + 1, m, trace);
    out = open_cycle(sub, a, a + 1);
    append_run(out, a + 2, last);
    append_run(out, a_last, k);
  } else if (!divides(va_m, a - 1) && !divides(va_m, a_last - 1)) {
    const auto sub = special_recurse(n, a_last - 1, m, trace);
    out = open_cycle(sub, a_last, a_last - 1);
    append_run(out, a_last - 2, k);
    append_run(out, a, last);
  } else {
    throw InternalError("neither shifted window satisfies the primorial condition");
  }
  return VertexCycle{std::move(out)};
}

VertexCycle special_impl(const BigInt& k, int n, std::vector<SubproblemCall>* trace) {
  const BigInt last = k + (n - 1);
  const auto first_witness = smallest_odd_prime_not_dividing(k, n);
  const auto last_witness = smallest_odd_prime_not_dividing(last, n);
  if (!first_witness || !last_witness)
    throw InternalError("special cycle requested where the primorial divides an endpoint");

  if (*last_witness > *first_witness)
    return negate_cycle(special_impl(-last, n, trace));

  // Translation by multiples of va(n) preserves both witnesses. Pick the
  // smallest multiple that makes the range positive with an odd last vertex.
  const BigInt va = odd_primorial(n);
  BigInt multiple = 0;
  if (k < 1) multiple = (1 - k + va - 1) / va;
  if ((last + multiple * va) % 2 == 0) ++multiple;
  if (multiple == 0) return special_core(k, n, *first_witness, *last_witness, trace);
  const BigInt shift = multiple * va;
  return translate_cycle(special_core(k + shift, n, *first_witness, *last_witness, trace), -shift);
}

}  // namespace

VertexCycle cycle_odd_odd(const BigInt& k, int n) {
  if (k < 1 || k % 2 == 0 || n < 3 || n % 2 == 0)
    throw std::invalid_argument("cycle_odd_odd: need odd k >= 1 and odd n >= 3");
  const CoprimeGraph g(k, n);
  const BigInt last = g.last();
  const auto seq = greedy_sequence(k, n);
  const auto& terms = seq.terms;
  const BigInt& a = terms.back();

  auto offset = [&](const BigInt& x) { return static_cast<int>(x - k); };
  ChordPlan plan;

  if (coprime(a, last)) {
    plan.path = ascending_path(k, n);
    for (std::size_t i = 1; i < terms.size(); ++i) plan.cuts.push_back(offset(terms[i]));
    return lemma_edges_cycle(plan, g);
  }

  const int gap = static_cast<int>(last - a);
  if (gap <= 32) {
    const auto d = decompose_pow2_plus_prime_power(gap + 1);
    if (d.s < 1) throw InternalError("odd/odd surgery needs a decomposition with s >= 1");
    plan.path = ascending_path(k, n);
    for (std::size_t i = 1; i < terms.size(); ++i) plan.cuts.push_back(offset(terms[i]));
    plan.cuts.push_back(offset(a + ((1 << d.r) - 1)));
    return lemma_edges_cycle(plan, g);
  }

  // Every odd prime below last - a divides a; a+2, a+4, a+8, a+16, a+32 are
  // coprime to everything else in a..last.
  std::vector<BigInt> tail;  // a+4 .. a+32, a+3, a+2, a+33 .. last, a+1, a
  append_run(tail, a + 4, a + 32);
  tail.push_back(a + 3);
  tail.push_back(a + 2);
  append_run(tail, a + 33, last);
  tail.push_back(a + 1);
  tail.push_back(a);

  if (a == k) {
    VertexCycle c{{tail.rbegin(), tail.rend()}};
    if (!verify_cycle(g, c)) throw InternalError("odd/odd long-gap cycle failed verification");
    return c;
  }
  plan.path.vertices.reserve(n);
  append_run(plan.path.vertices, k, a - 1);
  plan.path.vertices.insert(plan.path.vertices.end(), tail.begin(), tail.end());
  for (std::size_t i = 1; i + 1 < terms.size(); ++i) plan.cuts.push_back(offset(terms[i]));
  return lemma_edges_cycle(plan, g);
}

VertexCycle special_cycle_even(const BigInt& k, int n, std::vector<SubproblemCall>* trace) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("special_cycle_even: n must be even and >= 4");
  const BigInt va = odd_primorial(n);
  if (divides(va, k) || divides(va, k + (n - 1)))
    throw std::invalid_argument("special_cycle_even: odd primorial of n divides k or k+n-1");
  auto c = starting_with_edge(special_impl(k, n, trace), k);
  if (!verify_cycle(CoprimeGraph(k, n), c) || !is_special(c, k, n))
    throw InternalError("special_cycle_even produced an invalid certificate");
  return c;
}

std::optional<VertexCycle> find_cycle(const BigInt& k, int n) {
  const auto report = decide(k, n);
  if (!report.hamiltonian) return std::nullopt;
  const CoprimeGraph g(k, n);

  if (n % 2 == 0) return special_cycle_even(k, n);

  if (g.contains_zero()) {
    if (n > kZeroRangeOracleLimit)
      throw UnsupportedError("odd-order ranges containing 0 are certified by search only up to n = " +
                             std::to_string(kZeroRangeOracleLimit));
    SearchLimits limits;
    limits.max_order = kZeroRangeOracleLimit;
    auto c = brute_cycle(k, n, limits);
    if (!c) throw InternalError("search found no cycle where one must exist");
    return c;
  }
  if (g.last() < 0) {
    auto c = negate_cycle(cycle_odd_odd(-g.last(), n));
    std::reverse(c.vertices.begin(), c.vertices.end());
    if (!verify_cycle(g, c)) throw InternalError("negated odd/odd cycle failed verification");
    return c;
  }
  auto c = cycle_odd_odd(k, n);
  if (!verify_cycle(g, c)) throw InternalError("odd/odd cycle failed verification");
  return c;
}

}  // namespace coprime
