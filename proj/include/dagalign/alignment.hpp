#pragma once

#include <span>
#include <vector>

#include "dagalign/conflict.hpp"
#include "dagalign/instance.hpp"

namespace dagalign {

// A subset of β. `chosen` is kept ascending; total_weight is the plain sum
// of the chosen weights.
struct Alignment {
  std::vector<EdgeIndex> chosen;
  double total_weight = 0.0;
};

// Sorts the indices and sums their weights. Throws Error{kIndexOutOfRange}.
Alignment make_alignment(const AlignmentInstance& instance, std::vector<EdgeIndex> chosen);

struct ConflictViolation {
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  ConflictCondition condition = ConflictCondition::kAncestorNotPreserved;

  friend bool operator==(const ConflictViolation&, const ConflictViolation&) = default;
};

struct ValidationReport {
  bool valid = true;
  // Pairs of chosen β indices that share a vertex (or repeat the same index).
  std::vector<std::pair<EdgeIndex, EdgeIndex>> duplicate_vertex_violations;
  // Every conflicting pair, tagged with its lowest-numbered condition.
  std::vector<ConflictViolation> conflict_violations;
  double recomputed_weight = 0.0;
};

// O(|chosen|²) pairwise check. Pairs are reported in the order the indices
// appear in `chosen`. Throws Error{kIndexOutOfRange}.
ValidationReport validate_alignment(const AlignmentInstance& instance,
                                    std::span<const EdgeIndex> chosen);

// Drops chosen edges whose weight is exactly 0.
Alignment strip_zero(const Alignment& alignment, const AlignmentInstance& instance);

}  // namespace dagalign
