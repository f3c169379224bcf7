#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "coprime/cpg.hpp"

namespace coprime {

/// find_cycle cannot certify this input (zero-containing odd range beyond
/// the oracle's reach).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DecisionRule {
  kOddOdd,                    // n and k odd
  kEvenCondition,             // n even, odd primes p, q < n with p∤k, q∤k+n-1
  kOddEvenObstruction,        // n odd, k even: (n+1)/2 independent even vertices
  kEvenPrimorialObstruction,  // n even, va(n) divides k or k+n-1
  kDegenerateSmallN,          // n < 3, no cycle possible
};

std::string_view to_string(DecisionRule rule);

struct DecisionReport {
  bool hamiltonian = false;
  DecisionRule rule = DecisionRule::kDegenerateSmallN;
  // Set for even n: smallest odd prime below n not dividing k (resp. k+n-1).
  std::optional<int> first_witness;
  std::optional<int> last_witness;
  bool primorial_divides_first = false;
  bool primorial_divides_last = false;
};

/// Hamiltonicity verdict for CPG(k, n), n >= 3, with the rule that
/// justifies it. Throws std::invalid_argument for n < 3.
DecisionReport decide(const BigInt& k, int n);

/// Same as decide() but total over n >= 1; n = 1, 2 yield kDegenerateSmallN.
DecisionReport classify(const BigInt& k, int n);

/// Certificate checker: c visits every vertex of g exactly once and every
/// cyclically consecutive pair is adjacent.
bool verify_cycle(const CoprimeGraph& g, const VertexCycle& c);

/// True iff {k, k+1} and {k+n-2, k+n-1} are both cyclic edges of c.
bool is_special(const VertexCycle& c, const BigInt& k, int n);

/// A Hamiltonian path plus the positions at which it is cut. Cutting at
/// position c removes the path edge (path[c], path[c+1]); the chords that
/// replace those edges are path[0]-path[c1+1], path[c1]-path[c2+1], ...,
/// path[c_last]-path[n-1]. Positions are zero-based, strictly increasing,
/// and lie in [1, n-2].
struct ChordPlan {
  VertexPath path;
  std::vector<int> cuts;
};

/// Chords required by a plan, in order.
std::vector<std::pair<BigInt, BigInt>> chords_of(const ChordPlan& plan);

/// Performs the chord surgery and traces the resulting cycle, starting at
/// path[0] and moving toward path[1]. Throws std::invalid_argument if the
/// path is not a Hamiltonian path of g, a cut position is out of order, or
/// a chord is not an edge.
VertexCycle lemma_edges_cycle(const ChordPlan& plan, const CoprimeGraph& g);

struct GreedySequence {
  std::vector<BigInt> terms;  // odd, ascending, terms.front() == k
};

/// a_0 = k and each next term is the smallest odd a with a_prev < a <= k+n-2
/// and gcd(a+1, a_prev) = 1; stops when none exists.
GreedySequence greedy_sequence(const BigInt& k, int n);

/// Hamiltonian cycle of CPG(k, n) for odd k >= 1 and odd n >= 3.
VertexCycle cycle_odd_odd(const BigInt& k, int n);

/// One recursive step taken by special_cycle_even.
struct SubproblemCall {
  int parent_order;
  BigInt k;
  int n;
};

/// Special Hamiltonian cycle (contains {k, k+1} and {k+n-2, k+n-1}) of
/// CPG(k, n) for even n >= 4 when the odd primorial of n divides neither k
/// nor k+n-1. The result starts with k, k+1. Optionally records every
/// recursive subproblem into `trace`.
VertexCycle special_cycle_even(const BigInt& k, int n,
                               std::vector<SubproblemCall>* trace = nullptr);

/// Order limit for the brute-force fallback used on zero-containing ranges.
inline constexpr int kZeroRangeOracleLimit = 20;

/// A verified Hamiltonian cycle of CPG(k, n), or nullopt when decide() says
/// there is none. Throws UnsupportedError for odd-order ranges containing 0
/// above kZeroRangeOracleLimit.
std::optional<VertexCycle> find_cycle(const BigInt& k, int n);

}  // namespace coprime
