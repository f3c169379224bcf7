#include "coprime/cpg.hpp"

#include <stdexcept>

namespace coprime {

CoprimeGraph::CoprimeGraph(BigInt k, int n) : k_(std::move(k)), n_(n) {
  if (n < 1) throw std::invalid_argument("coprime graph order must be >= 1");
}

bool CoprimeGraph::contains(const BigInt& v) const { return v >= k_ && v < k_ + n_; }

int CoprimeGraph::offset_of(const BigInt& v) const {
  if (!contains(v)) throw std::out_of_range("vertex " + to_decimal(v) + " not in graph");
  return static_cast<int>(v - k_);
}

CoprimeGraph make_graph(const BigInt& k, int n) { return CoprimeGraph(k, n); }

bool adjacent(const CoprimeGraph& g, const BigInt& u, const BigInt& v) {
  if (!g.contains(u) || !g.contains(v))
    throw std::out_of_range("adjacent: argument outside vertex range");
  return u != v && coprime(u, v);
}

std::vector<BigInt> neighbors(const CoprimeGraph& g, const BigInt& v) {
  if (!g.contains(v)) throw std::out_of_range("neighbors: vertex outside range");
  std::vector<BigInt> out;
  for (int i = 0; i < g.order(); ++i) {
    BigInt u = g.vertex(i);
    if (u != v && coprime(u, v)) out.push_back(std::move(u));
  }
  return out;
}

Negation negate(const CoprimeGraph& g) { return Negation{CoprimeGraph(-g.last(), g.order())}; }

VertexCycle negate_cycle(const VertexCycle& c) {
  VertexCycle out;
  out.vertices.reserve(c.vertices.size());
  for (const auto& v : c.vertices) out.vertices.push_back(-v);
  return out;
}

VertexCycle translate_cycle(const VertexCycle& c, const BigInt& delta) {
  VertexCycle out;
  out.vertices.reserve(c.vertices.size());
  for (const auto& v : c.vertices) out.vertices.push_back(v + delta);
  return out;
}

}  // namespace coprime
