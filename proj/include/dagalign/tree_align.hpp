#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dagalign/alignment.hpp"
#include "dagalign/instance.hpp"

namespace dagalign {

// Vertices of a rooted tree numbered deepest level first; within a level by
// ascending vertex id. Children therefore always precede their parent and
// the root comes last.
struct TreeOrder {
  std::vector<VertexId> order;
  std::vector<std::size_t> depth;     // by vertex id
  std::vector<std::size_t> position;  // inverse of order

  VertexId root() const { return order.back(); }
};

// Throws Error{kNotATree} unless the graph has exactly one in-degree-0 vertex
// and every other vertex has exactly one parent.
TreeOrder level_order(const DagGraph& dag);

// The subtree-pair table C(i, j) of the bottom-up tree alignment, filled in
// lexicographic cell order. Every cell stores the choice that realised its
// value, so M(i, j) can be rebuilt on demand.
class TreeAlignmentTable {
 public:
  // Both graphs must be rooted trees. Pairs missing from β count as weight 0.
  // The instance must outlive the table.
  explicit TreeAlignmentTable(const AlignmentInstance& instance);

  const TreeOrder& order1() const { return order1_; }
  const TreeOrder& order2() const { return order2_; }

  // C for the subtrees rooted at v1 (tree 1) and v2 (tree 2).
  double value(VertexId v1, VertexId v2) const {
    return cells_[order1_.position[v1] * cols_ + order2_.position[v2]].value;
  }
  double optimum() const { return value(order1_.root(), order2_.root()); }

  // M for the subtrees rooted at v1 and v2: the vertex pairs realising C,
  // ascending, including pairs of weight 0 that carry structure.
  std::vector<std::pair<VertexId, VertexId>> matching(VertexId v1, VertexId v2) const;

  // C as CSV: header row of tree-2 vertex ids in table order, then one row per
  // tree-1 vertex.
  std::string to_csv() const;

 private:
  enum class Choice { kEmpty, kSkip, kMap };
  struct Cell {
    double value = 0.0;
    Choice choice = Choice::kEmpty;
    VertexId target = 0;  // child of v1 for kSkip, image of v1 for kMap
  };

  double read(std::size_t i, std::size_t j, std::size_t at_i, std::size_t at_j) const;
  void collect(VertexId v1, VertexId v2, std::vector<std::pair<VertexId, VertexId>>& out) const;

  const AlignmentInstance* instance_;
  TreeOrder order1_;
  TreeOrder order2_;
  std::size_t cols_ = 0;
  std::vector<Cell> cells_;
};

struct TreeAlignOptions {
  // Pad a partial β with zero-weight pairs first; when false a partial β is
  // rejected with Error{kBetaIncomplete}.
  bool auto_complete = true;
};

Alignment tree_align(const AlignmentInstance& instance, const TreeAlignOptions& options = {});

// Chain vertices from the head (in-degree 0) to the tail. Throws
// Error{kNotAChain} unless the graph is a single directed path.
std::vector<VertexId> chain_order(const DagGraph& dag);

// Order-preserving alignment of two chains by the LCS-style recurrence
// C[i][j] = max(C[i-1][j], C[i][j-1], C[i-1][j-1] + w(i, j)).
Alignment chain_align(const AlignmentInstance& instance);

// The (n+1)×(k+1) chain table as CSV, for debugging.
std::string chain_table_csv(const AlignmentInstance& instance);

}  // namespace dagalign
