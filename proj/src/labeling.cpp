#include "coprime/labeling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "coprime/hamilton.hpp"
#include "coprime/oracle.hpp"

namespace coprime {

int TwoRegularSpec::total() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

int TwoRegularSpec::odd_count() const {
  return static_cast<int>(std::count_if(lengths.begin(), lengths.end(), [](int l) { return l % 2 != 0; }));
}

void validate(const TwoRegularSpec& spec) {
  for (int length : spec.lengths)
    if (length < 3) throw std::invalid_argument("cycle lengths must be >= 3");
}

bool verify_labeling(const TwoRegularSpec& spec, const PrimeLabeling& labeling) {
  if (labeling.blocks.size() != spec.lengths.size()) return false;
  const int total = spec.total();
  std::vector<bool> seen(total + 1, false);
  for (std::size_t b = 0; b < spec.lengths.size(); ++b) {
    const auto& block = labeling.blocks[b];
    if (static_cast<int>(block.size()) != spec.lengths[b]) return false;
    for (const auto& label : block) {
      if (label < 1 || label > total) return false;
      const int x = static_cast<int>(label);
      if (seen[x]) return false;
      seen[x] = true;
    }
    for (std::size_t i = 0; i < block.size(); ++i)
      if (!coprime(block[i], block[(i + 1) % block.size()])) return false;
  }
  return true;
}

std::string_view to_string(LabelingFailure failure) {
  switch (failure) {
    case LabelingFailure::kIndependenceBound: return "independence bound";
    case LabelingFailure::kStrategyExhausted: return "strategy exhausted";
    case LabelingFailure::kInfeasible: return "infeasible";
  }
  return "unknown";
}

std::string_view to_string(LabelingMethod method) {
  switch (method) {
    case LabelingMethod::kConsecutiveBlocks: return "consecutive-blocks";
    case LabelingMethod::kOracle: return "oracle";
    case LabelingMethod::kNone: return "none";
  }
  return "unknown";
}

std::vector<BigInt> label_single_odd_cycle(const BigInt& k, int n) {
  return cycle_odd_odd(k, n).vertices;
}

namespace {

class BlockOrdering {
 public:
  BlockOrdering(const std::vector<int>& even_lengths, std::optional<std::uint64_t> budget)
      : budget_(budget) {
    for (int l : even_lengths) ++remaining_[l];
    blocks_left_ = static_cast<int>(even_lengths.size());
  }

  // Lengths in placement order, starting at label 1.
  std::optional<std::vector<int>> run() {
    if (place(1)) return order_;
    return std::nullopt;
  }

 private:
  bool place(int start) {
    if (budget_ && ++nodes_ > *budget_) return false;
    if (blocks_left_ == 0) return true;
    for (auto& [length, count] : remaining_) {
      if (count == 0) continue;
      const BigInt va = odd_primorial(length);
      if (divides(va, BigInt(start)) || divides(va, BigInt(start + length - 1))) continue;
      --count;
      --blocks_left_;
      order_.push_back(length);
      if (place(start + length)) return true;
      order_.pop_back();
      ++blocks_left_;
      ++count;
    }
    return false;
  }

  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  std::map<int, int> remaining_;
  int blocks_left_ = 0;
  std::vector<int> order_;
};

std::optional<PrimeLabeling> consecutive_blocks(const TwoRegularSpec& spec, const LabelingOptions& options) {
  std::vector<int> evens;
  std::optional<std::size_t> odd_index;
  for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
    if (spec.lengths[i] % 2 == 0) evens.push_back(spec.lengths[i]);
    else odd_index = i;
  }
  std::optional<std::uint64_t> budget;
  if (evens.size() > 8) budget = options.ordering_budget;
  const auto order = BlockOrdering(evens, budget).run();
  if (!order) return std::nullopt;

  // Hand out the placed windows to the spec's cycles, matching by length.
  std::multimap<int, std::vector<BigInt>> by_length;
  int start = 1;
  for (int length : *order) {
    by_length.emplace(length, special_cycle_even(start, length).vertices);
    start += length;
  }
  PrimeLabeling labeling;
  for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
    if (odd_index && i == *odd_index) {
      labeling.blocks.push_back(label_single_odd_cycle(start, spec.lengths[i]));
      continue;
    }
    const auto it = by_length.find(spec.lengths[i]);
    labeling.blocks.push_back(std::move(it->second));
    by_length.erase(it);
  }
  return labeling;
}

}  // namespace

LabelingOutcome label_two_regular(const TwoRegularSpec& spec, const LabelingOptions& options) {
  validate(spec);
  LabelingOutcome outcome;
  if (spec.odd_count() > 1) {
    outcome.failure = LabelingFailure::kIndependenceBound;
    return outcome;
  }
  if (spec.lengths.empty()) {
    outcome.labeling = PrimeLabeling{};
    outcome.method = LabelingMethod::kConsecutiveBlocks;
    return outcome;
  }
  if (auto labeling = consecutive_blocks(spec, options)) {
    if (!verify_labeling(spec, *labeling)) throw InternalError("consecutive-block labeling failed verification");
    outcome.labeling = std::move(labeling);
    outcome.method = LabelingMethod::kConsecutiveBlocks;
    return outcome;
  }
  if (spec.total() > options.oracle_max_labels) {
    outcome.failure = LabelingFailure::kStrategyExhausted;
    return outcome;
  }
  SearchLimits limits;
  limits.max_labels = options.oracle_max_labels;
  if (auto labeling = brute_label(spec, limits)) {
    outcome.labeling = std::move(labeling);
    outcome.method = LabelingMethod::kOracle;
  } else {
    outcome.failure = LabelingFailure::kInfeasible;
  }
  return outcome;
}

}  // namespace coprime
