#include "coprime/oracle.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "coprime/hamilton.hpp"

namespace coprime {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

class NodeCounter {
 public:
  explicit NodeCounter(std::optional<std::uint64_t> budget) : budget_(budget) {}
  void tick() {
    if (budget_ && ++used_ > *budget_) throw SearchBudgetExceeded("search node budget exhausted");
  }

 private:
  std::optional<std::uint64_t> budget_;
  std::uint64_t used_ = 0;
};

class CycleSearch {
 public:
  CycleSearch(const BigInt& k, int n, NodeCounter& counter) : n_(n), counter_(counter) {
    adj_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      if ((k + i) % 2 == 0) even_ |= bit(i);
      for (int j = i + 1; j < n; ++j) {
        if (coprime(k + i, k + j)) {
          adj_[i] |= bit(j);
          adj_[j] |= bit(i);
        }
      }
    }
    all_ = (n == 64) ? ~Mask{0} : bit(n) - 1;
  }

  std::optional<std::vector<int>> run() {
    order_.assign(1, 0);
    if (dfs(0, bit(0))) return order_;
    return std::nullopt;
  }

 private:
  bool is_even(int i) const { return (even_ >> i) & 1; }

  bool dfs(int v, Mask visited) {
    counter_.tick();
    const Mask rest = all_ & ~visited;
    if (rest == 0) return (adj_[v] & bit(0)) != 0;

    // Even vertices are independent: they need odd separators in the
    // remaining stretch v, rest..., start.
    const int evens = std::popcount(rest & even_);
    const int odds = std::popcount(rest) - evens;
    const int end_evens = static_cast<int>(is_even(v)) + (v != 0 ? static_cast<int>(is_even(0)) : 0);
    if (evens > odds + 1 - end_evens) return false;

    const Mask ends = bit(v) | bit(0);
    for (Mask m = rest; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (std::popcount(adj_[u] & (rest | ends)) < 2) return false;
    }
    if (v != 0 && (adj_[0] & rest) == 0) return false;

    for (Mask m = adj_[v] & rest; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      order_.push_back(w);
      if (dfs(w, visited | bit(w))) return true;
      order_.pop_back();
    }
    return false;
  }

  int n_;
  NodeCounter& counter_;
  std::vector<Mask> adj_;
  Mask even_ = 0;
  Mask all_ = 0;
  std::vector<int> order_;
};

class LabelSearch {
 public:
  LabelSearch(const std::vector<int>& lengths, NodeCounter& counter)
      : lengths_(lengths), counter_(counter) {
    total_ = std::accumulate(lengths.begin(), lengths.end(), 0);
    adj_.assign(total_ + 1, 0);
    for (int a = 1; a <= total_; ++a)
      for (int b = 1; b <= total_; ++b)
        if (a != b && std::gcd(a, b) == 1) adj_[a] |= bit(b);
    for (int a = 2; a <= total_; a += 2) even_labels_ |= bit(a);
    blocks_.resize(lengths.size());
  }

  std::optional<std::vector<std::vector<int>>> run() {
    if (fill(0, 0, 0)) return blocks_;
    return std::nullopt;
  }

 private:
  // Upper bound on even labels that still fit, given what is placed.
  int even_capacity(std::size_t block, int position) const {
    int capacity = 0;
    for (std::size_t b = block + 1; b < lengths_.size(); ++b) capacity += lengths_[b] / 2;
    if (block >= lengths_.size()) return capacity;
    const int len = lengths_[block];
    if (position == 0) return capacity + len / 2;
    const auto& cur = blocks_[block];
    const int slots = len - position - (cur.back() % 2 == 0) - (cur.front() % 2 == 0);
    return capacity + (slots > 0 ? (slots + 1) / 2 : 0);
  }

  bool fill(std::size_t block, int position, Mask used) {
    counter_.tick();
    if (block == lengths_.size()) return true;
    const int len = lengths_[block];
    if (position == len) {
      if ((adj_[blocks_[block].back()] & bit(blocks_[block].front())) == 0) return false;
      return fill(block + 1, 0, used);
    }
    const int evens_left = std::popcount(even_labels_ & ~used);
    if (evens_left > even_capacity(block, position)) return false;

    auto& cur = blocks_[block];
    for (int label = 1; label <= total_; ++label) {
      if (used & bit(label)) continue;
      if (position > 0) {
        // Each cycle is rotated to start at its smallest label.
        if (label < cur.front()) continue;
        if ((adj_[cur.back()] & bit(label)) == 0) continue;
      }
      cur.push_back(label);
      if (fill(block, position + 1, used | bit(label))) return true;
      cur.pop_back();
    }
    return false;
  }

  const std::vector<int>& lengths_;
  NodeCounter& counter_;
  int total_ = 0;
  std::vector<Mask> adj_;
  Mask even_labels_ = 0;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace

std::optional<VertexCycle> brute_cycle(const BigInt& k, int n, const SearchLimits& limits) {
  if (n < 3 || n > limits.max_order || n > 64)
    throw std::invalid_argument("brute_cycle: order outside search limits");
  NodeCounter counter(limits.node_budget);
  CycleSearch search(k, n, counter);
  const auto order = search.run();
  if (!order) return std::nullopt;
  VertexCycle c;
  for (int i : *order) c.vertices.push_back(k + i);
  if (!verify_cycle(CoprimeGraph(k, n), c)) throw InternalError("brute_cycle produced an invalid cycle");
  return c;
}

bool brute_decide(const BigInt& k, int n, const SearchLimits& limits) {
  return brute_cycle(k, n, limits).has_value();
}

std::optional<PrimeLabeling> brute_label(const TwoRegularSpec& spec, const SearchLimits& limits) {
  validate(spec);
  if (spec.total() > limits.max_labels || spec.total() > 63)
    throw std::invalid_argument("brute_label: label count outside search limits");
  NodeCounter counter(limits.node_budget);
  LabelSearch search(spec.lengths, counter);
  const auto blocks = search.run();
  if (!blocks) return std::nullopt;
  PrimeLabeling labeling;
  for (const auto& block : *blocks) {
    auto& out = labeling.blocks.emplace_back();
    for (int label : block) out.emplace_back(label);
  }
  if (!verify_labeling(spec, labeling)) throw InternalError("brute_label produced an invalid labeling");
  return labeling;
}

}  // namespace coprime
