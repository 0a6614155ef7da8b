#pragma once

#include <optional>
#include <vector>

#include "dagalign/instance.hpp"

namespace dagalign {

// The four edge-conflict conditions for e = (a, b) against d = (f, g).
enum class ConflictCondition : int {
  kAncestorNotPreserved = 1,    // a ∈ anc(f) and b ∉ anc(g)
  kDescendantNotPreserved = 2,  // a ∈ desc(f) and b ∉ desc(g)
  kSameLeft = 3,                // a = f
  kSameRight = 4,               // b = g
};

// Lowest-numbered condition that holds, or nullopt when e and d are
// compatible. Throws Error{kSameEdge} if e and d name the same pair.
std::optional<ConflictCondition> conflict_condition(const AlignmentInstance& instance,
                                                    const CandidateEdge& e,
                                                    const CandidateEdge& d);

inline bool is_conflict(const AlignmentInstance& instance, const CandidateEdge& e,
                        const CandidateEdge& d) {
  return conflict_condition(instance, e, d).has_value();
}

// conf(e): indices of every β entry that conflicts with β[edge_index], ascending.
std::vector<EdgeIndex> conflict_set(const AlignmentInstance& instance, EdgeIndex edge_index);

// Stricter relation used by the restricted oracle: besides sharing an endpoint,
// e and d clash unless ancestry is preserved in both directions
// (a ∈ anc(f) ⟺ b ∈ anc(g) and a ∈ desc(f) ⟺ b ∈ desc(g)).
bool breaks_ancestry_isomorphism(const AlignmentInstance& instance, const CandidateEdge& e,
                                 const CandidateEdge& d);

}  // namespace dagalign
