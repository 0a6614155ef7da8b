#include "dagalign/tree_align.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dagalign/error.hpp"
#include "dagalign/hungarian.hpp"
#include "dagalign/serialize.hpp"

namespace dagalign {

TreeOrder level_order(const DagGraph& dag) {
  const std::size_t n = dag.vertex_count();
  if (n == 0) throw Error(ErrorCode::kNotATree, "empty graph");
  std::size_t roots = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t indegree = dag.parents(v).size();
    if (indegree == 0) ++roots;
    if (indegree > 1) {
      throw Error(ErrorCode::kNotATree, "vertex " + std::to_string(v) + " has several parents");
    }
  }
  if (roots != 1) {
    throw Error(ErrorCode::kNotATree, std::to_string(roots) + " vertices without a parent");
  }

  TreeOrder out;
  out.depth.assign(n, 0);
  for (VertexId v : dag.topological_order()) {
    if (!dag.parents(v).empty()) out.depth[v] = out.depth[dag.parents(v).front()] + 1;
  }
  out.order.resize(n);
  for (VertexId v = 0; v < n; ++v) out.order[v] = v;
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](VertexId a, VertexId b) { return out.depth[a] > out.depth[b]; });
  out.position.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) out.position[out.order[i]] = i;
  return out;
}

TreeAlignmentTable::TreeAlignmentTable(const AlignmentInstance& instance)
    : instance_(&instance),
      order1_(level_order(instance.g1())),
      order2_(level_order(instance.g2())),
      cols_(instance.g2().vertex_count()),
      cells_(instance.g1().vertex_count() * instance.g2().vertex_count()) {
  const DagGraph& t1 = instance.g1();
  const DagGraph& t2 = instance.g2();
  const std::size_t rows = t1.vertex_count();

  // mapped[k] = S for "v1 mapped to k": the best bipartite matching of
  // children(v1) against children(k). It only depends on the row, so it is
  // computed once per row; every read lands in an earlier row.
  std::vector<double> mapped(cols_);
  for (std::size_t i = 0; i < rows; ++i) {
    const VertexId v1 = order1_.order[i];
    const auto& kids1 = t1.children(v1);
    for (std::size_t k = 0; k < cols_; ++k) {
      const VertexId v2 = order2_.order[k];
      const auto& kids2 = t2.children(v2);
      WeightMatrix sub(kids1.size(), kids2.size());
      for (std::size_t s = 0; s < kids1.size(); ++s) {
        for (std::size_t t = 0; t < kids2.size(); ++t) {
          sub(s, t) = read(order1_.position[kids1[s]], order2_.position[kids2[t]], i, 0);
        }
      }
      mapped[k] = instance.weight_or_zero(v1, v2) + hungarian_max(sub).value;
    }

    for (std::size_t j = 0; j < cols_; ++j) {
      const VertexId v2 = order2_.order[j];
      Cell best;
      // Case 1: v1 stays unmapped and one child subtree carries the alignment.
      for (VertexId child : kids1) {
        const double c = read(order1_.position[child], j, i, j);
        if (c > best.value) best = {c, Choice::kSkip, child};
      }
      // Case 2: v1 maps to v2 itself or to one of its descendants.
      auto consider = [&](VertexId target) {
        const double c = mapped[order2_.position[target]];
        if (c > best.value) best = {c, Choice::kMap, target};
      };
      consider(v2);
      const VertexSet& below = t2.descendants(v2);
      for (auto d = below.find_first(); d != VertexSet::npos; d = below.find_next(d)) {
        consider(static_cast<VertexId>(d));
      }
      cells_[i * cols_ + j] = best;
    }
  }
}

double TreeAlignmentTable::read(std::size_t i, std::size_t j, std::size_t at_i,
                                std::size_t at_j) const {
  if (i > at_i || (i == at_i && j >= at_j)) {
    throw std::logic_error("tree DP read cell (" + std::to_string(i) + "," +
                           std::to_string(j) + ") while filling (" + std::to_string(at_i) +
                           "," + std::to_string(at_j) + ")");
  }
  return cells_[i * cols_ + j].value;
}

std::vector<std::pair<VertexId, VertexId>> TreeAlignmentTable::matching(VertexId v1,
                                                                        VertexId v2) const {
  std::vector<std::pair<VertexId, VertexId>> out;
  collect(v1, v2, out);
  std::sort(out.begin(), out.end());
  return out;
}

void TreeAlignmentTable::collect(VertexId v1, VertexId v2,
                                 std::vector<std::pair<VertexId, VertexId>>& out) const {
  const Cell& cell = cells_[order1_.position[v1] * cols_ + order2_.position[v2]];
  switch (cell.choice) {
    case Choice::kEmpty:
      return;
    case Choice::kSkip:
      collect(cell.target, v2, out);
      return;
    case Choice::kMap: {
      out.emplace_back(v1, cell.target);
      const auto& kids1 = instance_->g1().children(v1);
      const auto& kids2 = instance_->g2().children(cell.target);
      WeightMatrix sub(kids1.size(), kids2.size());
      for (std::size_t s = 0; s < kids1.size(); ++s) {
        for (std::size_t t = 0; t < kids2.size(); ++t) sub(s, t) = value(kids1[s], kids2[t]);
      }
      for (const auto& [s, t] : hungarian_max(sub).pairs) collect(kids1[s], kids2[t], out);
      return;
    }
  }
}

std::string TreeAlignmentTable::to_csv() const {
  std::ostringstream os;
  os << "v1\\v2";
  for (VertexId v2 : order2_.order) os << ',' << v2;
  os << '\n';
  for (std::size_t i = 0; i < order1_.order.size(); ++i) {
    os << order1_.order[i];
    for (std::size_t j = 0; j < cols_; ++j) os << ',' << format_weight(cells_[i * cols_ + j].value);
    os << '\n';
  }
  return os.str();
}

namespace {

// Maps vertex pairs back onto the caller's β, keeping positive weights only.
Alignment to_alignment(const AlignmentInstance& instance,
                       const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<EdgeIndex> chosen;
  for (const auto& [l, r] : pairs) {
    auto idx = instance.find(l, r);
    if (idx && instance.edge(*idx).weight > 0.0) chosen.push_back(*idx);
  }
  Alignment alignment = make_alignment(instance, std::move(chosen));
  if (!validate_alignment(instance, alignment.chosen).valid) {
    throw std::logic_error("alignment DP produced conflicting pairs");
  }
  return alignment;
}

}  // namespace

Alignment tree_align(const AlignmentInstance& instance, const TreeAlignOptions& options) {
  level_order(instance.g1());
  level_order(instance.g2());
  if (!instance.is_complete() && !options.auto_complete) {
    throw Error(ErrorCode::kBetaIncomplete, std::to_string(instance.size()) + " of " +
                                                std::to_string(instance.g1().vertex_count() *
                                                               instance.g2().vertex_count()) +
                                                " pairs present");
  }
  const AlignmentInstance complete = complete_beta(instance);
  const TreeAlignmentTable table(complete);
  Alignment alignment =
      to_alignment(instance, table.matching(table.order1().root(), table.order2().root()));
  if (std::abs(alignment.total_weight - table.optimum()) > kWeightTolerance) {
    throw std::logic_error("tree DP backtracking disagrees with the table value");
  }
  return alignment;
}

std::vector<VertexId> chain_order(const DagGraph& dag) {
  const std::size_t n = dag.vertex_count();
  if (n == 0) throw Error(ErrorCode::kNotAChain, "empty graph");
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (dag.children(v).size() > 1 || dag.parents(v).size() > 1) {
      throw Error(ErrorCode::kNotAChain, "vertex " + std::to_string(v) + " branches");
    }
    if (dag.parents(v).empty()) out.push_back(v);
  }
  if (out.size() != 1) {
    throw Error(ErrorCode::kNotAChain, std::to_string(out.size()) + " path heads");
  }
  while (!dag.children(out.back()).empty()) out.push_back(dag.children(out.back()).front());
  return out;
}

namespace {

struct ChainTable {
  std::vector<VertexId> chain1;
  std::vector<VertexId> chain2;
  std::vector<std::vector<double>> c;
};

ChainTable fill_chain_table(const AlignmentInstance& instance) {
  ChainTable t{chain_order(instance.g1()), chain_order(instance.g2()), {}};
  const std::size_t n = t.chain1.size();
  const std::size_t k = t.chain2.size();
  t.c.assign(n + 1, std::vector<double>(k + 1, 0.0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      const double diag =
          t.c[i - 1][j - 1] + instance.weight_or_zero(t.chain1[i - 1], t.chain2[j - 1]);
      t.c[i][j] = std::max({t.c[i - 1][j], t.c[i][j - 1], diag});
    }
  }
  return t;
}

}  // namespace

Alignment chain_align(const AlignmentInstance& instance) {
  const ChainTable t = fill_chain_table(instance);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::size_t i = t.chain1.size();
  std::size_t j = t.chain2.size();
  while (i > 0 && j > 0) {
    if (t.c[i][j] == t.c[i - 1][j]) {
      --i;
    } else if (t.c[i][j] == t.c[i][j - 1]) {
      --j;
    } else {
      pairs.emplace_back(t.chain1[i - 1], t.chain2[j - 1]);
      --i;
      --j;
    }
  }
  return to_alignment(instance, pairs);
}

std::string chain_table_csv(const AlignmentInstance& instance) {
  const ChainTable t = fill_chain_table(instance);
  std::ostringstream os;
  os << "v1\\v2,-";
  for (VertexId v : t.chain2) os << ',' << v;
  os << '\n';
  for (std::size_t i = 0; i < t.c.size(); ++i) {
    os << (i == 0 ? std::string("-") : std::to_string(t.chain1[i - 1]));
    for (double x : t.c[i]) os << ',' << format_weight(x);
    os << '\n';
  }
  return os.str();
}

}  // namespace dagalign
