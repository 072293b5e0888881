#pragma once

// Skeleton-by-skeleton construction of an m-sparse map of a d-complex into R^n.

#include <cstdint>
#include <optional>

#include "sparsemap/extension.hpp"
#include "sparsemap/placement.hpp"

namespace sparsemap {

struct EmbedOptions {
  /// first trial constant c in R = ceil(c V^{1/(n-m)})
  double trial_constant = 1.0;
  /// doublings of c allowed after the first attempt
  int retry_budget = 8;
  std::optional<std::uint64_t> order_seed;
  /// vertex order for level 0
  TieBreak tie_break = TieBreak::diagonal();
  int base_case_cap = 64;
};

/// Vertices go to the first n-d axes with sparsity m-d; level k then extends
/// inside the first n-d+k axes with sparsity m-d+k.  Throws LabelRangeExhausted
/// when options.retry_budget doublings do not suffice.
LatticeMap embed(const SimplicialComplex& Y, int m, int n, const EmbedOptions& options = {});

/// Same construction, throwing RetryBudgetExhausted after `retry_budget` doublings.
LatticeMap embed_with_retries(const SimplicialComplex& Y, int m, int n, int retry_budget,
                              const EmbedOptions& options = {});

/// Single attempt at a fixed trial constant.
LatticeMap embed_at(const SimplicialComplex& Y, int m, int n, double trial_constant,
                    const EmbedOptions& options = {});

}  // namespace sparsemap
