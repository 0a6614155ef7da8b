#include "dagalign/dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "dagalign/error.hpp"

namespace dagalign {

DagGraph::DagGraph(std::size_t vertex_count, std::vector<DagEdge> edges)
    : edges_(std::move(edges)),
      children_(vertex_count),
      parents_(vertex_count),
      ancestors_(vertex_count, VertexSet(vertex_count)),
      descendants_(vertex_count, VertexSet(vertex_count)) {
  for (const DagEdge& e : edges_) {
    if (e.from >= vertex_count || e.to >= vertex_count) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                      ") with vertex_count " + std::to_string(vertex_count));
    }
    children_[e.from].push_back(e.to);
    parents_[e.to].push_back(e.from);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto dedupe = [](std::vector<VertexId>& xs) {
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    };
    dedupe(children_[v]);
    dedupe(parents_[v]);
  }

  std::vector<std::size_t> indegree(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) indegree[v] = parents_[v].size();
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (indegree[v] == 0) ready.push(static_cast<VertexId>(v));
  }
  topo_.reserve(vertex_count);
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (VertexId c : children_[v]) {
      if (--indegree[c] == 0) ready.push(c);
    }
  }
  if (topo_.size() != vertex_count) {
    throw Error(ErrorCode::kCyclicGraph, "edges contain a directed cycle");
  }

  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    for (VertexId c : children_[*it]) {
      descendants_[*it].set(c);
      descendants_[*it] |= descendants_[c];
    }
  }
  for (VertexId v : topo_) {
    for (VertexId p : parents_[v]) {
      ancestors_[v].set(p);
      ancestors_[v] |= ancestors_[p];
    }
  }
}

DagGraph build_dag(std::size_t vertex_count, std::span<const DagEdge> edges) {
  return DagGraph(vertex_count, std::vector<DagEdge>(edges.begin(), edges.end()));
}

std::vector<VertexId> to_vector(const VertexSet& set) {
  std::vector<VertexId> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

Reachability reachability(const DagGraph& dag, VertexId v) {
  if (v >= dag.vertex_count()) {
    throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(v));
  }
  return {to_vector(dag.ancestors(v)), to_vector(dag.descendants(v)), dag.children(v)};
}

}  // namespace dagalign
