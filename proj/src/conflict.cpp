#include "dagalign/conflict.hpp"

#include <string>

#include "dagalign/error.hpp"

namespace dagalign {

std::optional<ConflictCondition> conflict_condition(const AlignmentInstance& instance,
                                                    const CandidateEdge& e,
                                                    const CandidateEdge& d) {
  if (e.left == d.left && e.right == d.right) {
    throw Error(ErrorCode::kSameEdge, "edge (" + std::to_string(e.left) + "," +
                                          std::to_string(e.right) + ") compared with itself");
  }
  const DagGraph& g1 = instance.g1();
  const DagGraph& g2 = instance.g2();
  if (g1.is_ancestor(e.left, d.left) && !g2.is_ancestor(e.right, d.right)) {
    return ConflictCondition::kAncestorNotPreserved;
  }
  if (g1.is_descendant(e.left, d.left) && !g2.is_descendant(e.right, d.right)) {
    return ConflictCondition::kDescendantNotPreserved;
  }
  if (e.left == d.left) return ConflictCondition::kSameLeft;
  if (e.right == d.right) return ConflictCondition::kSameRight;
  return std::nullopt;
}

std::vector<EdgeIndex> conflict_set(const AlignmentInstance& instance, EdgeIndex edge_index) {
  if (edge_index >= instance.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "edge index " + std::to_string(edge_index));
  }
  const CandidateEdge& e = instance.edge(edge_index);
  std::vector<EdgeIndex> out;
  for (EdgeIndex j = 0; j < instance.size(); ++j) {
    if (j != edge_index && is_conflict(instance, e, instance.edge(j))) out.push_back(j);
  }
  return out;
}

bool breaks_ancestry_isomorphism(const AlignmentInstance& instance, const CandidateEdge& e,
                                 const CandidateEdge& d) {
  if (e.left == d.left || e.right == d.right) return true;
  const DagGraph& g1 = instance.g1();
  const DagGraph& g2 = instance.g2();
  return g1.is_ancestor(e.left, d.left) != g2.is_ancestor(e.right, d.right) ||
         g1.is_descendant(e.left, d.left) != g2.is_descendant(e.right, d.right);
}

}  // namespace dagalign
