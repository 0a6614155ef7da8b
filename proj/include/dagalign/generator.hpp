#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "dagalign/instance.hpp"

namespace dagalign {

enum class GraphKind { kTree, kChain, kDag };

GraphKind parse_graph_kind(std::string_view name);  // "tree" | "chain" | "dag"
std::string_view to_string(GraphKind kind);

struct GenSpec {
  GraphKind kind = GraphKind::kDag;
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  double edge_prob = 0.3;  // dag only
  double beta_density = 1.0;
  std::uint64_t seed = 0;
};

// Throws Error{kInvalidSpec} for zero vertex counts or probabilities outside [0,1].
void check_spec(const GenSpec& spec);

// Deterministic in the spec. The stream is std::mt19937_64 seeded with
// spec.seed; a uniform draw u is (next() >> 11) * 2^-53. Draw order:
//   1. graph 1, then graph 2:
//        chain: path 0→1→…→n-1, no draws;
//        tree:  for i = 1..n-1, parent floor(u·i), edge (parent, i);
//        dag:   for i < j in row-major order, edge (i, j) when u < edge_prob;
//   2. β in row-major (left, right) order: pair included when u < beta_density,
//      then weight round(u·1000)/1000 from the next draw.
AlignmentInstance gen_instance(const GenSpec& spec);

}  // namespace dagalign
