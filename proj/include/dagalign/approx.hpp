#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "dagalign/alignment.hpp"
#include "dagalign/instance.hpp"

namespace dagalign {

using NodeIndex = std::size_t;

// One node per β entry; nodes i and j are adjacent iff β[i] and β[j]
// conflict. Independent sets are exactly the valid alignments.
struct ConflictGraph {
  std::size_t node_count = 0;
  std::vector<double> node_weights;
  std::vector<VertexSet> adjacency;  // symmetric, irreflexive

  bool adjacent(NodeIndex u, NodeIndex v) const { return adjacency[u].test(v); }
  std::size_t degree(NodeIndex v) const { return adjacency[v].count(); }
};

ConflictGraph build_conflict_graph(const AlignmentInstance& instance);

// Repeatedly takes the surviving node with the largest weight/(degree+1),
// degree counted in the surviving graph, then deletes it and its neighbours.
std::vector<NodeIndex> wis_greedy(const ConflictGraph& graph);

// Called on every exit of the Ramsey recursion with the node set it ran on and
// the (clique, independent set) pair it returns.
using RamseyObserver = std::function<void(const std::vector<NodeIndex>& nodes,
                                          const std::vector<NodeIndex>& clique,
                                          const std::vector<NodeIndex>& independent)>;

// Weighted CliqueRemoval: run Ramsey, remember its independent set, delete its
// clique, repeat until the graph is empty; return the heaviest remembered set.
std::vector<NodeIndex> wis_ramsey(const ConflictGraph& graph,
                                  const RamseyObserver& observer = {});

struct WeightedSet {
  std::vector<EdgeIndex> members;  // ascending
  double weight = 0.0;
};

// Set packing view: base elements are the β indices, set i = {i} ∪ conf(i)
// carrying β[i].weight.
struct WspInstance {
  std::size_t base_count = 0;
  std::vector<WeightedSet> sets;
};

WspInstance build_wsp(const AlignmentInstance& instance);

// Picks the surviving set maximising weight/√|members|, then discards every
// set intersecting it. Returned indices are in selection order.
std::vector<std::size_t> wsp_greedy(const WspInstance& wsp);

enum class ApproxStrategy { kWisGreedy, kWisRamsey, kWspGreedy };

// Accepts "wis-greedy", "wis-ramsey", "wsp-greedy"; Error{kUnknownSolver} otherwise.
ApproxStrategy parse_strategy(std::string_view name);
std::string_view to_string(ApproxStrategy strategy);

// Runs the pipeline, maps the selection back to β, drops zero-weight edges
// and checks the result against validate_alignment.
Alignment approx_align(const AlignmentInstance& instance, ApproxStrategy strategy);

}  // namespace dagalign
