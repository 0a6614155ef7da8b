#include "dagalign/instance.hpp"

#include <string>

#include "dagalign/error.hpp"

namespace dagalign {

AlignmentInstance::AlignmentInstance(DagGraph g1, DagGraph g2, std::vector<CandidateEdge> beta,
                                     std::vector<std::string> labels1,
                                     std::vector<std::string> labels2)
    : g1_(std::move(g1)),
      g2_(std::move(g2)),
      beta_(std::move(beta)),
      labels1_(std::move(labels1)),
      labels2_(std::move(labels2)) {
  if (!labels1_.empty() && labels1_.size() != g1_.vertex_count()) {
    throw Error(ErrorCode::kParseError, "labels1 length differs from g1 vertex count");
  }
  if (!labels2_.empty() && labels2_.size() != g2_.vertex_count()) {
    throw Error(ErrorCode::kParseError, "labels2 length differs from g2 vertex count");
  }
  index_.reserve(beta_.size());
  for (EdgeIndex i = 0; i < beta_.size(); ++i) {
    const CandidateEdge& e = beta_[i];
    if (e.left >= g1_.vertex_count() || e.right >= g2_.vertex_count()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "beta[" + std::to_string(i) + "] = (" + std::to_string(e.left) + "," +
                      std::to_string(e.right) + ")");
    }
    // Negated form also rejects NaN.
    if (!(e.weight >= 0.0 && e.weight <= 1.0)) {
      throw Error(ErrorCode::kWeightOutOfRange,
                  "beta[" + std::to_string(i) + "] weight " + std::to_string(e.weight));
    }
    if (!index_.emplace(key(e.left, e.right), i).second) {
      throw Error(ErrorCode::kDuplicatePair, "pair (" + std::to_string(e.left) + "," +
                                                 std::to_string(e.right) + ") repeated");
    }
  }
}

std::optional<EdgeIndex> AlignmentInstance::find(VertexId left, VertexId right) const {
  auto it = index_.find(key(left, right));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double AlignmentInstance::weight_or_zero(VertexId left, VertexId right) const {
  auto i = find(left, right);
  return i ? beta_[*i].weight : 0.0;
}

bool operator==(const AlignmentInstance& a, const AlignmentInstance& b) {
  return a.g1_.vertex_count() == b.g1_.vertex_count() && a.g1_.edges() == b.g1_.edges() &&
         a.g2_.vertex_count() == b.g2_.vertex_count() && a.g2_.edges() == b.g2_.edges() &&
         a.beta_ == b.beta_ && a.labels1_ == b.labels1_ && a.labels2_ == b.labels2_;
}

AlignmentInstance complete_beta(const AlignmentInstance& instance) {
  if (instance.is_complete()) return instance;
  std::vector<CandidateEdge> beta = instance.beta();
  const auto n1 = static_cast<VertexId>(instance.g1().vertex_count());
  const auto n2 = static_cast<VertexId>(instance.g2().vertex_count());
  beta.reserve(static_cast<std::size_t>(n1) * n2);
  for (VertexId l = 0; l < n1; ++l) {
    for (VertexId r = 0; r < n2; ++r) {
      if (!instance.find(l, r)) beta.push_back({l, r, 0.0});
    }
  }
  return AlignmentInstance(instance.g1(), instance.g2(), std::move(beta), instance.labels1(),
                           instance.labels2());
}

AlignmentInstance scale_weights(const AlignmentInstance& instance, double factor) {
  std::vector<CandidateEdge> beta = instance.beta();
  for (CandidateEdge& e : beta) e.weight *= factor;
  return AlignmentInstance(instance.g1(), instance.g2(), std::move(beta), instance.labels1(),
                           instance.labels2());
}

}  // namespace dagalign
