#include "dagalign/approx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dagalign/conflict.hpp"
#include "dagalign/error.hpp"

namespace dagalign {

namespace {

double total_weight(const ConflictGraph& graph, const std::vector<NodeIndex>& nodes) {
  double w = 0.0;
  for (NodeIndex v : nodes) w += graph.node_weights[v];
  return w;
}

struct RamseyPair {
  std::vector<NodeIndex> clique;
  std::vector<NodeIndex> independent;
};

std::vector<NodeIndex> with_node(std::vector<NodeIndex> nodes, NodeIndex v) {
  nodes.insert(std::upper_bound(nodes.begin(), nodes.end(), v), v);
  return nodes;
}

// `nodes` is ascending. The pivot is the heaviest node, lowest index on ties.
RamseyPair ramsey(const ConflictGraph& graph, const std::vector<NodeIndex>& nodes,
                  const RamseyObserver& observer) {
  RamseyPair out;
  if (!nodes.empty()) {
    NodeIndex pivot = nodes.front();
    for (NodeIndex v : nodes) {
      if (graph.node_weights[v] > graph.node_weights[pivot]) pivot = v;
    }
    std::vector<NodeIndex> neighbours;
    std::vector<NodeIndex> others;
    for (NodeIndex v : nodes) {
      if (v == pivot) continue;
      (graph.adjacent(pivot, v) ? neighbours : others).push_back(v);
    }
    RamseyPair inside = ramsey(graph, neighbours, observer);
    RamseyPair outside = ramsey(graph, others, observer);

    // Ties favour the candidate that contains the pivot.
    std::vector<NodeIndex> clique_with = with_node(std::move(inside.clique), pivot);
    out.clique = total_weight(graph, clique_with) >= total_weight(graph, outside.clique)
                     ? std::move(clique_with)
                     : std::move(outside.clique);
    std::vector<NodeIndex> independent_with = with_node(std::move(outside.independent), pivot);
    out.independent =
        total_weight(graph, independent_with) >= total_weight(graph, inside.independent)
            ? std::move(independent_with)
            : std::move(inside.independent);
  }
  if (observer) observer(nodes, out.clique, out.independent);
  return out;
}

}  // namespace

ConflictGraph build_conflict_graph(const AlignmentInstance& instance) {
  ConflictGraph graph;
  graph.node_count = instance.size();
  graph.node_weights.reserve(instance.size());
  for (const CandidateEdge& e : instance.beta()) graph.node_weights.push_back(e.weight);
  graph.adjacency.assign(graph.node_count, VertexSet(graph.node_count));
  for (NodeIndex i = 0; i < graph.node_count; ++i) {
    for (NodeIndex j = i + 1; j < graph.node_count; ++j) {
      if (is_conflict(instance, instance.edge(i), instance.edge(j))) {
        graph.adjacency[i].set(j);
        graph.adjacency[j].set(i);
      }
    }
  }
  return graph;
}

std::vector<NodeIndex> wis_greedy(const ConflictGraph& graph) {
  VertexSet alive(graph.node_count);
  alive.set();
  std::vector<NodeIndex> picked;
  while (alive.any()) {
    NodeIndex best = VertexSet::npos;
    double best_score = -1.0;
    for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
      const double degree = static_cast<double>((graph.adjacency[v] & alive).count());
      const double score = graph.node_weights[v] / (degree + 1.0);
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    picked.push_back(best);
    alive -= graph.adjacency[best];
    alive.reset(best);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<NodeIndex> wis_ramsey(const ConflictGraph& graph, const RamseyObserver& observer) {
  std::vector<NodeIndex> remaining(graph.node_count);
  for (NodeIndex v = 0; v < graph.node_count; ++v) remaining[v] = v;
  std::vector<NodeIndex> best;
  double best_weight = -1.0;
  while (!remaining.empty()) {
    RamseyPair pair = ramsey(graph, remaining, observer);
    const double w = total_weight(graph, pair.independent);
    if (w > best_weight) {
      best_weight = w;
      best = pair.independent;
    }
    std::vector<NodeIndex> next;
    std::set_difference(remaining.begin(), remaining.end(), pair.clique.begin(),
                        pair.clique.end(), std::back_inserter(next));
    remaining = std::move(next);
  }
  return best;
}

WspInstance build_wsp(const AlignmentInstance& instance) {
  WspInstance wsp;
  wsp.base_count = instance.size();
  wsp.sets.reserve(instance.size());
  for (EdgeIndex i = 0; i < instance.size(); ++i) {
    WeightedSet set;
    set.members = conflict_set(instance, i);
    set.members.insert(std::lower_bound(set.members.begin(), set.members.end(), i), i);
    set.weight = instance.edge(i).weight;
    wsp.sets.push_back(std::move(set));
  }
  return wsp;
}

std::vector<std::size_t> wsp_greedy(const WspInstance& wsp) {
  const std::size_t n = wsp.sets.size();
  std::vector<VertexSet> members(n, VertexSet(wsp.base_count));
  for (std::size_t s = 0; s < n; ++s) {
    for (EdgeIndex e : wsp.sets[s].members) members[s].set(e);
  }
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> picked;
  for (;;) {
    std::size_t best = n;
    double best_score = -1.0;
    for (std::size_t s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      const double size = static_cast<double>(wsp.sets[s].members.size());
      const double score = size > 0 ? wsp.sets[s].weight / std::sqrt(size) : wsp.sets[s].weight;
      if (score > best_score) {
        best_score = score;
        best = s;
      }
    }
    if (best == n) break;
    picked.push_back(best);
    for (std::size_t s = 0; s < n; ++s) {
      if (alive[s] && members[s].intersects(members[best])) alive[s] = false;
    }
    alive[best] = false;
  }
  return picked;
}

ApproxStrategy parse_strategy(std::string_view name) {
  if (name == "wis-greedy") return ApproxStrategy::kWisGreedy;
  if (name == "wis-ramsey") return ApproxStrategy::kWisRamsey;
  if (name == "wsp-greedy") return ApproxStrategy::kWspGreedy;
  throw Error(ErrorCode::kUnknownSolver, "unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(ApproxStrategy strategy) {
  switch (strategy) {
    case ApproxStrategy::kWisGreedy: return "wis-greedy";
    case ApproxStrategy::kWisRamsey: return "wis-ramsey";
    case ApproxStrategy::kWspGreedy: return "wsp-greedy";
  }
  return "?";
}

Alignment approx_align(const AlignmentInstance& instance, ApproxStrategy strategy) {
  std::vector<EdgeIndex> chosen;
  switch (strategy) {
    case ApproxStrategy::kWisGreedy:
      chosen = wis_greedy(build_conflict_graph(instance));
      break;
    case ApproxStrategy::kWisRamsey:
      chosen = wis_ramsey(build_conflict_graph(instance));
      break;
    case ApproxStrategy::kWspGreedy: {
      const WspInstance wsp = build_wsp(instance);
      // Set i stands for β[i].
      chosen = wsp_greedy(wsp);
      break;
    }
  }
  Alignment alignment = strip_zero(make_alignment(instance, std::move(chosen)), instance);
  if (!validate_alignment(instance, alignment.chosen).valid) {
    throw std::logic_error("approximation produced an alignment with conflicts");
  }
  return alignment;
}

}  // namespace dagalign
