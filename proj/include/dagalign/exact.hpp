#pragma once

#include <chrono>
#include <cstdint>

#include "dagalign/alignment.hpp"
#include "dagalign/instance.hpp"

namespace dagalign {

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  // Upper bound proven at termination; equals the optimum after a full search.
  double best_bound = 0.0;
  std::chrono::nanoseconds elapsed{0};
};

struct ExactOptions {
  // Search nodes allowed before Error{kBudgetExceeded} is raised.
  std::uint64_t node_budget = 100'000'000;
};

struct ExactResult {
  Alignment alignment;
  SearchStats stats;
};

// Maximum-weight conflict-free matching by branch and bound over β sorted by
// descending weight. Zero-weight edges never appear in the result. Among
// optima (equal within kWeightTolerance) the lexicographically smallest
// ascending index list wins.
ExactResult exact_align(const AlignmentInstance& instance, const ExactOptions& options = {});

// Is there a valid matching M with w(M) >= min_weight (within tolerance) and
// |M| <= max_size?
bool decide_alignment(const AlignmentInstance& instance, double min_weight,
                      std::size_t max_size, const ExactOptions& options = {});

// Same search restricted to ancestry-isomorphic matchings: every chosen pair
// (a,b), (f,g) has a ∈ anc(f) ⟺ b ∈ anc(g) and a ∈ desc(f) ⟺ b ∈ desc(g).
ExactResult exact_align_isomorphic(const AlignmentInstance& instance,
                                   const ExactOptions& options = {});

}  // namespace dagalign
