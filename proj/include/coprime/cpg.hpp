#pragma once

#include <vector>

#include "coprime/numtheory.hpp"

namespace coprime {

/// The k-coprime graph of order n: vertices k, k+1, ..., k+n-1, two distinct
/// vertices adjacent iff they are coprime. Adjacency is computed on demand.
class CoprimeGraph {
 public:
  /// Throws std::invalid_argument when n < 1.
  CoprimeGraph(BigInt k, int n);

  const BigInt& first() const { return k_; }
  BigInt last() const { return k_ + (n_ - 1); }
  int order() const { return n_; }

  bool contains(const BigInt& v) const;
  /// Zero-based position of v in the vertex range; v must be contained.
  int offset_of(const BigInt& v) const;
  BigInt vertex(int offset) const { return k_ + offset; }
  /// True iff 0 is one of the vertices.
  bool contains_zero() const { return k_ <= 0 && last() >= 0; }

  bool operator==(const CoprimeGraph&) const = default;

 private:
  BigInt k_;
  int n_;
};

struct VertexCycle {
  std::vector<BigInt> vertices;  // closing edge from back() to front() is implicit
  bool operator==(const VertexCycle&) const = default;
};

struct VertexPath {
  std::vector<BigInt> vertices;
  bool operator==(const VertexPath&) const = default;
};

CoprimeGraph make_graph(const BigInt& k, int n);

/// u != v and gcd(u, v) = 1. Throws std::out_of_range if either argument is
/// not a vertex of g.
bool adjacent(const CoprimeGraph& g, const BigInt& u, const BigInt& v);

/// Ascending list of the neighbours of v.
std::vector<BigInt> neighbors(const CoprimeGraph& g, const BigInt& v);

/// Result of mapping CPG(k, n) onto CPG(-(k+n-1), n) through x -> -x.
struct Negation {
  CoprimeGraph graph;
  static BigInt map(const BigInt& x) { return -x; }
};

Negation negate(const CoprimeGraph& g);

/// Maps every entry through x -> -x.
VertexCycle negate_cycle(const VertexCycle& c);

/// Adds delta to every entry. Valid Hamiltonian cycles of CPG(k, n) with n even
/// map to valid cycles of CPG(k + delta, n) when delta is a multiple of the odd
/// primorial of n; enforcing that is the caller's job.
VertexCycle translate_cycle(const VertexCycle& c, const BigInt& delta);

}  // namespace coprime
