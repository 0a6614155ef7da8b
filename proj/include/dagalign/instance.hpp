#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dagalign/dag.hpp"

namespace dagalign {

using EdgeIndex = std::size_t;

// Absolute tolerance for every weight comparison in the library.
inline constexpr double kWeightTolerance = 1e-9;

/// A permissible vertex pairing (left in g1, right in g2) with weight in [0,1].
struct CandidateEdge {
  VertexId left = 0;
  VertexId right = 0;
  double weight = 0.0;

  friend bool operator==(const CandidateEdge&, const CandidateEdge&) = default;
};

// Two DAGs plus the weighted candidate set β. Immutable once built; the
// constructor enforces index ranges, weights in [0,1] and uniqueness of
// (left, right) pairs.
class AlignmentInstance {
 public:
  AlignmentInstance() = default;
  AlignmentInstance(DagGraph g1, DagGraph g2, std::vector<CandidateEdge> beta,
                    std::vector<std::string> labels1 = {},
                    std::vector<std::string> labels2 = {});

  const DagGraph& g1() const { return g1_; }
  const DagGraph& g2() const { return g2_; }
  const std::vector<CandidateEdge>& beta() const { return beta_; }
  const CandidateEdge& edge(EdgeIndex i) const { return beta_.at(i); }
  std::size_t size() const { return beta_.size(); }

  // Optional external vertex names; empty when absent.
  const std::vector<std::string>& labels1() const { return labels1_; }
  const std::vector<std::string>& labels2() const { return labels2_; }

  std::optional<EdgeIndex> find(VertexId left, VertexId right) const;
  // Weight of the pair, or 0 when the pair is not in β.
  double weight_or_zero(VertexId left, VertexId right) const;

  // β holds all |V1|·|V2| pairs (pairs are unique, so a count suffices).
  bool is_complete() const {
    return beta_.size() == g1_.vertex_count() * g2_.vertex_count();
  }

  friend bool operator==(const AlignmentInstance& a, const AlignmentInstance& b);

 private:
  static std::uint64_t key(VertexId l, VertexId r) {
    return (static_cast<std::uint64_t>(l) << 32) | r;
  }

  DagGraph g1_;
  DagGraph g2_;
  std::vector<CandidateEdge> beta_;
  std::vector<std::string> labels1_;
  std::vector<std::string> labels2_;
  std::unordered_map<std::uint64_t, EdgeIndex> index_;
};

// Adds every missing (left, right) pair with weight 0, appended in row-major
// order after the existing entries. Existing entries keep their indices.
AlignmentInstance complete_beta(const AlignmentInstance& instance);

// Same graphs, every weight multiplied by factor (factor in [0,1]).
AlignmentInstance scale_weights(const AlignmentInstance& instance, double factor);

}  // namespace dagalign
