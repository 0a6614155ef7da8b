#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dagalign {

using VertexId = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

struct DagEdge {
  VertexId from = 0;
  VertexId to = 0;

  friend bool operator==(const DagEdge&, const DagEdge&) = default;
};

// A directed acyclic graph over the dense vertex ids 0..n-1. The full
// ancestor/descendant closure is computed once on construction and stored as
// one bitset row per vertex, so ancestry queries are O(1).
class DagGraph {
 public:
  DagGraph() = default;

  // Throws Error{kIndexOutOfRange} for endpoints >= vertex_count and
  // Error{kCyclicGraph} when the edges contain a directed cycle (self loops
  // included).
  DagGraph(std::size_t vertex_count, std::vector<DagEdge> edges);

  std::size_t vertex_count() const { return children_.size(); }
  const std::vector<DagEdge>& edges() const { return edges_; }

  // a ∈ anc(v): there is a directed path a ⇝ v of length >= 1.
  bool is_ancestor(VertexId a, VertexId v) const { return ancestors_[v].test(a); }
  // d ∈ desc(v): there is a directed path v ⇝ d of length >= 1.
  bool is_descendant(VertexId d, VertexId v) const { return descendants_[v].test(d); }
  bool comparable(VertexId u, VertexId v) const {
    return is_ancestor(u, v) || is_descendant(u, v);
  }

  const VertexSet& ancestors(VertexId v) const { return ancestors_.at(v); }
  const VertexSet& descendants(VertexId v) const { return descendants_.at(v); }
  // Direct successors / predecessors, ascending and deduplicated.
  const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }
  const std::vector<VertexId>& parents(VertexId v) const { return parents_.at(v); }

  // Kahn order; among ready vertices the smallest id goes first.
  const std::vector<VertexId>& topological_order() const { return topo_; }

 private:
  std::vector<DagEdge> edges_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::vector<VertexId>> parents_;
  std::vector<VertexSet> ancestors_;
  std::vector<VertexSet> descendants_;
  std::vector<VertexId> topo_;
};

DagGraph build_dag(std::size_t vertex_count, std::span<const DagEdge> edges);

struct Reachability {
  std::vector<VertexId> ancestors;
  std::vector<VertexId> descendants;
  std::vector<VertexId> children;
};

// Throws Error{kIndexOutOfRange} if v is not a vertex of dag.
Reachability reachability(const DagGraph& dag, VertexId v);

std::vector<VertexId> to_vector(const VertexSet& set);

}  // namespace dagalign
