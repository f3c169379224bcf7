#pragma once

#include <cstdint>
#include <optional>

#include "coprime/cpg.hpp"
#include "coprime/labeling_types.hpp"

namespace coprime {

struct SearchLimits {
  int max_order = 18;   // largest n accepted by brute_cycle
  int max_labels = 24;  // largest total label count accepted by brute_label
  std::optional<std::uint64_t> node_budget;
};

/// Thrown when a search exceeds SearchLimits::node_budget.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Depth-first Hamiltonian cycle search on CPG(k, n) starting at k, trying
/// neighbours in ascending order. Prunes on the even-vertex count (even
/// vertices are pairwise non-adjacent) and on residual degrees. Throws
/// std::invalid_argument unless 3 <= n <= limits.max_order (and n <= 64).
std::optional<VertexCycle> brute_cycle(const BigInt& k, int n, const SearchLimits& limits = {});

bool brute_decide(const BigInt& k, int n, const SearchLimits& limits = {});

/// Exhaustive search for a prime labeling of the 2-regular graph `spec`.
/// Throws std::invalid_argument if the label count exceeds limits.max_labels
/// or a length is below 3.
std::optional<PrimeLabeling> brute_label(const TwoRegularSpec& spec, const SearchLimits& limits = {});

}  // namespace coprime
