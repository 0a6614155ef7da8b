#include "dagalign/alignment.hpp"

#include <algorithm>
#include <string>

#include "dagalign/error.hpp"

namespace dagalign {

namespace {

void check_indices(const AlignmentInstance& instance, std::span<const EdgeIndex> chosen) {
  for (EdgeIndex i : chosen) {
    if (i >= instance.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge index " + std::to_string(i) + " with |beta| = " +
                      std::to_string(instance.size()));
    }
  }
}

}  // namespace

Alignment make_alignment(const AlignmentInstance& instance, std::vector<EdgeIndex> chosen) {
  check_indices(instance, chosen);
  std::sort(chosen.begin(), chosen.end());
  Alignment out;
  out.chosen = std::move(chosen);
  for (EdgeIndex i : out.chosen) out.total_weight += instance.edge(i).weight;
  return out;
}

ValidationReport validate_alignment(const AlignmentInstance& instance,
                                    std::span<const EdgeIndex> chosen) {
  check_indices(instance, chosen);
  ValidationReport report;
  for (std::size_t x = 0; x < chosen.size(); ++x) {
    const CandidateEdge& e = instance.edge(chosen[x]);
    report.recomputed_weight += e.weight;
    for (std::size_t y = x + 1; y < chosen.size(); ++y) {
      const CandidateEdge& d = instance.edge(chosen[y]);
      if (chosen[x] == chosen[y]) {
        report.duplicate_vertex_violations.emplace_back(chosen[x], chosen[y]);
        continue;
      }
      if (e.left == d.left || e.right == d.right) {
        report.duplicate_vertex_violations.emplace_back(chosen[x], chosen[y]);
      }
      if (auto cond = conflict_condition(instance, e, d)) {
        report.conflict_violations.push_back({chosen[x], chosen[y], *cond});
      }
    }
  }
  report.valid =
      report.duplicate_vertex_violations.empty() && report.conflict_violations.empty();
  return report;
}

Alignment strip_zero(const Alignment& alignment, const AlignmentInstance& instance) {
  Alignment out;
  out.total_weight = alignment.total_weight;
  for (EdgeIndex i : alignment.chosen) {
    if (instance.edge(i).weight != 0.0) out.chosen.push_back(i);
  }
  return out;
}

}  // namespace dagalign
