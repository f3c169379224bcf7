#pragma once

#include <vector>

#include "coprime/numtheory.hpp"

namespace coprime {

/// C_{n_1} ∪ ... ∪ C_{n_m}; every length at least 3.
struct TwoRegularSpec {
  std::vector<int> lengths;

  int total() const;
  int odd_count() const;
};

/// One cyclic label sequence per cycle, block i belonging to lengths[i].
struct PrimeLabeling {
  std::vector<std::vector<BigInt>> blocks;
  bool operator==(const PrimeLabeling&) const = default;
};

/// Throws std::invalid_argument when a length is below 3.
void validate(const TwoRegularSpec& spec);

bool verify_labeling(const TwoRegularSpec& spec, const PrimeLabeling& labeling);

}  // namespace coprime
