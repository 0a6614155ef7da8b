#include "dagalign/generator.hpp"

#include <cmath>
#include <random>
#include <string>

#include "dagalign/error.hpp"

namespace dagalign {

namespace {

class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

DagGraph random_graph(GraphKind kind, std::size_t n, double edge_prob, UniformStream& draw) {
  std::vector<DagEdge> edges;
  switch (kind) {
    case GraphKind::kChain:
      for (VertexId i = 1; i < n; ++i) edges.push_back({i - 1, i});
      break;
    case GraphKind::kTree:
      for (VertexId i = 1; i < n; ++i) {
        edges.push_back({static_cast<VertexId>(std::floor(draw.next() * i)), i});
      }
      break;
    case GraphKind::kDag:
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
          if (draw.next() < edge_prob) edges.push_back({i, j});
        }
      }
      break;
  }
  return DagGraph(n, std::move(edges));
}

}  // namespace

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "tree") return GraphKind::kTree;
  if (name == "chain") return GraphKind::kChain;
  if (name == "dag") return GraphKind::kDag;
  throw Error(ErrorCode::kInvalidSpec, "unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kTree: return "tree";
    case GraphKind::kChain: return "chain";
    case GraphKind::kDag: return "dag";
  }
  return "?";
}

void check_spec(const GenSpec& spec) {
  if (spec.n1 == 0 || spec.n2 == 0) throw Error(ErrorCode::kInvalidSpec, "vertex counts must be >= 1");
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(spec.edge_prob)) throw Error(ErrorCode::kInvalidSpec, "edge_prob outside [0,1]");
  if (!in_unit(spec.beta_density)) {
    throw Error(ErrorCode::kInvalidSpec, "beta_density outside [0,1]");
  }
}

AlignmentInstance gen_instance(const GenSpec& spec) {
  check_spec(spec);
  UniformStream draw(spec.seed);
  DagGraph g1 = random_graph(spec.kind, spec.n1, spec.edge_prob, draw);
  DagGraph g2 = random_graph(spec.kind, spec.n2, spec.edge_prob, draw);
  std::vector<CandidateEdge> beta;
  for (VertexId l = 0; l < spec.n1; ++l) {
    for (VertexId r = 0; r < spec.n2; ++r) {
      if (draw.next() < spec.beta_density) {
        beta.push_back({l, r, std::round(draw.next() * 1000.0) / 1000.0});
      }
    }
  }
  return AlignmentInstance(std::move(g1), std::move(g2), std::move(beta));
}

}  // namespace dagalign
