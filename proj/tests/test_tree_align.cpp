#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dagalign/alignment.hpp"
#include "dagalign/error.hpp"
#include "dagalign/exact.hpp"
#include "dagalign/generator.hpp"
#include "dagalign/hungarian.hpp"
#include "dagalign/tree_align.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace dagalign {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

double brute_matching(const WeightMatrix& w) {
  const std::size_t n = std::max(w.rows(), w.cols());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double total = 0.0;
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (perm[r] < w.cols()) total += w(r, perm[r]);
    }
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no dagalign::Error thrown";
  return ErrorCode::kParseError;
}

TEST(Hungarian, Examples) {
  BipartiteMatching m = hungarian_max({{1, 0}, {0, 1}});
  EXPECT_DOUBLE_EQ(m.value, 2.0);
  EXPECT_THAT(m.pairs, ElementsAre(std::pair<std::size_t, std::size_t>{0, 0},
                                   std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_DOUBLE_EQ(hungarian_max({{0.2, 0.9, 0.1}}).value, 0.9);
  EXPECT_DOUBLE_EQ(hungarian_max(WeightMatrix(0, 3)).value, 0.0);
  EXPECT_THAT(hungarian_max(WeightMatrix(2, 2)).pairs, IsEmpty());
  EXPECT_EQ(code_of([] { hungarian_max({{-0.1}}); }), ErrorCode::kNegativeWeight);
}

TEST(Hungarian, MatchesPermutationBruteForce) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 250; ++trial) {
    WeightMatrix w(rng() % 8, rng() % 8);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      for (std::size_t c = 0; c < w.cols(); ++c) w(r, c) = rng() % 3 == 0 ? 0.0 : unit(rng);
    }
    const BipartiteMatching m = hungarian_max(w);
    ASSERT_NEAR(m.value, brute_matching(w), 1e-9) << "trial " << trial;
    double sum = 0.0;
    std::vector<bool> row_used(w.rows()), col_used(w.cols());
    for (const auto& [r, c] : m.pairs) {
      ASSERT_FALSE(row_used[r] || col_used[c]);
      row_used[r] = col_used[c] = true;
      sum += w(r, c);
    }
    ASSERT_NEAR(sum, m.value, 1e-9);
  }
}

TEST(LevelOrder, DeepestFirstThenById) {
  DagGraph t(5, {{2, 0}, {2, 4}, {0, 1}, {0, 3}});
  TreeOrder o = level_order(t);
  EXPECT_THAT(o.order, ElementsAre(1u, 3u, 0u, 4u, 2u));
  EXPECT_EQ(o.root(), 2u);
  EXPECT_EQ(o.depth[3], 2u);
  EXPECT_EQ(code_of([] { level_order(DagGraph(2, {})); }), ErrorCode::kNotATree);
  EXPECT_EQ(code_of([] { level_order(DagGraph(3, {{0, 2}, {1, 2}})); }), ErrorCode::kNotATree);
}

TEST(TreeAlign, E1) {
  const AlignmentInstance e1 = fixture::e1();
  const Alignment a = tree_align(e1);
  EXPECT_THAT(a.chosen, ElementsAre(fixture::e1_as));
  EXPECT_DOUBLE_EQ(a.total_weight, 1.0);
  EXPECT_DOUBLE_EQ(exact_align(e1).alignment.total_weight, 2.0);
}

TEST(TreeAlign, SingleVertexTrees) {
  AlignmentInstance in(DagGraph(1, {}), DagGraph(1, {}), {{0, 0, 0.7}});
  EXPECT_THAT(tree_align(in).chosen, ElementsAre(0u));
}

TEST(TreeAlign, IncompleteBeta) {
  AlignmentInstance in(DagGraph(2, {{0, 1}}), DagGraph(1, {}), {{1, 0, 0.6}});
  EXPECT_EQ(code_of([&] { tree_align(in, TreeAlignOptions{false}); }),
            ErrorCode::kBetaIncomplete);
  EXPECT_DOUBLE_EQ(tree_align(in).total_weight, 0.6);
  EXPECT_EQ(code_of([] {
              tree_align(AlignmentInstance(DagGraph(2, {}), DagGraph(1, {}), {}));
            }),
            ErrorCode::kNotATree);
}

// The DP only maps distinct child subtrees of a node to distinct child
// subtrees of its image, so the ancestry-isomorphic optimum can be larger.
TEST(TreeAlign, CrossingSubtreesAreMissed) {
  const AlignmentInstance in = fixture::crossing();
  EXPECT_DOUBLE_EQ(exact_align_isomorphic(in).alignment.total_weight, 3.0);
  EXPECT_DOUBLE_EQ(tree_align(in).total_weight, 2.0);
}

TEST(TreeAlign, ValidAndBoundedOnRandomTrees) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    DagGraph t1 = oracle::random_tree(rng, 1 + rng() % 6);
    DagGraph t2 = oracle::random_tree(rng, 1 + rng() % 6);
    const AlignmentInstance in = oracle::random_instance(rng, std::move(t1), std::move(t2), 12);
    const Alignment a = tree_align(in);
    ASSERT_TRUE(validate_alignment(in, a.chosen).valid) << "trial " << trial;
    const double iso = oracle::best_isomorphic(in).weight;
    ASSERT_LE(a.total_weight, iso + 1e-9) << "trial " << trial;
    ASSERT_LE(iso, exact_align(in).alignment.total_weight + 1e-9);
  }
}

TEST(TreeAlignmentTable, MonotoneAndConsistent) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const AlignmentInstance in = gen_instance({GraphKind::kTree, 2 + seed % 7, 2 + seed % 5,
                                               0.3, 0.8, seed});
    const AlignmentInstance full = complete_beta(in);
    const TreeAlignmentTable table(full);
    const DagGraph& t1 = full.g1();
    const DagGraph& t2 = full.g2();
    for (VertexId v1 = 0; v1 < t1.vertex_count(); ++v1) {
      for (VertexId v2 = 0; v2 < t2.vertex_count(); ++v2) {
        const double c = table.value(v1, v2);
        ASSERT_GE(c, full.weight_or_zero(v1, v2) - 1e-12);
        for (VertexId k : t1.children(v1)) ASSERT_GE(c, table.value(k, v2) - 1e-12);
        for (VertexId k : t2.children(v2)) ASSERT_GE(c, table.value(v1, k) - 1e-12);
        double sum = 0.0;
        std::vector<EdgeIndex> chosen;
        for (const auto& [l, r] : table.matching(v1, v2)) {
          sum += full.weight_or_zero(l, r);
          chosen.push_back(*full.find(l, r));
          ASSERT_TRUE(l == v1 || t1.is_descendant(l, v1));
          ASSERT_TRUE(r == v2 || t2.is_descendant(r, v2));
        }
        ASSERT_NEAR(sum, c, 1e-9);
        ASSERT_TRUE(validate_alignment(full, chosen).valid);
      }
    }
    EXPECT_NEAR(table.optimum(), tree_align(in).total_weight, 1e-9);
  }
}

TEST(TreeAlignmentTable, Csv) {
  const AlignmentInstance in(DagGraph(2, {{0, 1}}), DagGraph(1, {}),
                             {{0, 0, 0.25}, {1, 0, 0.5}});
  EXPECT_EQ(TreeAlignmentTable(in).to_csv(), "v1\\v2,0\n1,0.5\n0,0.5\n");
}

TEST(ChainAlign, Examples) {
  const AlignmentInstance in(DagGraph(3, {{0, 1}, {1, 2}}), DagGraph(2, {{0, 1}}),
                             {{0, 1, 0.6}, {1, 0, 0.5}, {2, 1, 0.4}});
  const Alignment a = chain_align(in);
  EXPECT_THAT(a.chosen, ElementsAre(1u, 2u));
  EXPECT_DOUBLE_EQ(a.total_weight, 0.9);
  EXPECT_THAT(chain_order(DagGraph(3, {{2, 0}, {0, 1}})), ElementsAre(2u, 0u, 1u));
  EXPECT_EQ(code_of([] { chain_order(DagGraph(3, {{0, 1}, {0, 2}})); }), ErrorCode::kNotAChain);
  EXPECT_EQ(code_of([] { chain_order(DagGraph(2, {})); }), ErrorCode::kNotAChain);
}

TEST(ChainAlign, EqualsExact) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    DagGraph c1 = oracle::random_chain(rng, 1 + rng() % 7);
    DagGraph c2 = oracle::random_chain(rng, 1 + rng() % 7);
    const AlignmentInstance in = oracle::random_instance(rng, std::move(c1), std::move(c2), 14);
    const Alignment a = chain_align(in);
    ASSERT_TRUE(validate_alignment(in, a.chosen).valid);
    ASSERT_NEAR(a.total_weight, oracle::best_alignment(in).weight, 1e-9) << "trial " << trial;
  }
}

TEST(ChainAlign, TableCsv) {
  const AlignmentInstance in(DagGraph(1, {}), DagGraph(1, {}), {{0, 0, 0.5}});
  EXPECT_EQ(chain_table_csv(in), "v1\\v2,-,0\n-,0.0,0.0\n0,0.0,0.5\n");
}

}  // namespace
}  // namespace dagalign
