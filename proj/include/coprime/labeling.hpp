#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "coprime/labeling_types.hpp"

namespace coprime {

enum class LabelingFailure {
  kIndependenceBound,   // two or more odd cycles: evens cannot be independent
  kStrategyExhausted,   // consecutive blocks failed and the search is out of range
  kInfeasible,          // exhaustive search found nothing
};

enum class LabelingMethod { kConsecutiveBlocks, kOracle, kNone };

std::string_view to_string(LabelingFailure failure);
std::string_view to_string(LabelingMethod method);

struct LabelingOutcome {
  std::optional<PrimeLabeling> labeling;
  LabelingMethod method = LabelingMethod::kNone;
  std::optional<LabelingFailure> failure;
};

struct LabelingOptions {
  int oracle_max_labels = 24;
  // Caps ordering attempts once there are more than 8 even blocks.
  std::uint64_t ordering_budget = 200000;
};

/// Prime labeling of C_{n_1} ∪ ... ∪ C_{n_m} using {1, ..., N}.
///
/// Tries consecutive label blocks first: even cycles in some order, each on
/// a window where the construction for even coprime ranges applies, then the
/// odd cycle (if any) on the remaining window, which starts at an odd label.
/// Falls back to exhaustive search when N <= options.oracle_max_labels.
LabelingOutcome label_two_regular(const TwoRegularSpec& spec, const LabelingOptions& options = {});

/// Cyclic order of k, ..., k+n-1 (k, n odd, k >= 1) with coprime neighbours.
std::vector<BigInt> label_single_odd_cycle(const BigInt& k, int n);

}  // namespace coprime
