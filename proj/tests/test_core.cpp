#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "dagalign/alignment.hpp"
#include "dagalign/conflict.hpp"
#include "dagalign/dag.hpp"
#include "dagalign/error.hpp"
#include "dagalign/generator.hpp"
#include "dagalign/instance.hpp"
#include "dagalign/serialize.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace dagalign {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;
using fixture::u1;
using fixture::u2;
using fixture::u3;
using fixture::u4;

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no dagalign::Error thrown";
  return ErrorCode::kParseError;
}

TEST(BuildDag, ChainClosure) {
  const std::vector<DagEdge> edges{{0, 1}, {1, 2}};
  DagGraph g = build_dag(3, edges);
  EXPECT_EQ(to_vector(g.ancestors(2)), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(to_vector(g.descendants(0)), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(g.children(1), std::vector<VertexId>{2});
}

TEST(BuildDag, SingleVertex) {
  DagGraph g = build_dag(1, {});
  EXPECT_TRUE(g.ancestors(0).none());
  EXPECT_TRUE(g.descendants(0).none());
}

TEST(BuildDag, RejectsCyclesAndBadIndices) {
  const std::vector<DagEdge> two_cycle{{0, 1}, {1, 0}};
  EXPECT_EQ(code_of([&] { build_dag(2, two_cycle); }), ErrorCode::kCyclicGraph);
  const std::vector<DagEdge> loop{{0, 0}};
  EXPECT_EQ(code_of([&] { build_dag(1, loop); }), ErrorCode::kCyclicGraph);
  const std::vector<DagEdge> out_of_range{{0, 3}};
  EXPECT_EQ(code_of([&] { build_dag(2, out_of_range); }), ErrorCode::kIndexOutOfRange);
}

TEST(Reachability, Examples) {
  DagGraph chain(3, {{0, 1}, {1, 2}});
  Reachability r = reachability(chain, 1);
  EXPECT_EQ(r.ancestors, std::vector<VertexId>{0});
  EXPECT_EQ(r.descendants, std::vector<VertexId>{2});
  EXPECT_EQ(r.children, std::vector<VertexId>{2});

  DagGraph diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(reachability(diamond, 3).ancestors, (std::vector<VertexId>{0, 1, 2}));

  DagGraph isolated(2, {});
  Reachability none = reachability(isolated, 1);
  EXPECT_THAT(none.ancestors, IsEmpty());
  EXPECT_THAT(none.descendants, IsEmpty());
  EXPECT_THAT(none.children, IsEmpty());

  EXPECT_EQ(code_of([&] { reachability(isolated, 2); }), ErrorCode::kIndexOutOfRange);
}

// Closure soundness against DFS on random DAGs up to 50 vertices.
TEST(Reachability, ClosureMatchesDfsOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const double p = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    DagGraph g = oracle::random_dag(rng, n, p);
    for (VertexId u = 0; u < n; ++u) {
      EXPECT_FALSE(g.ancestors(u).intersects(g.descendants(u)));
      EXPECT_FALSE(g.is_ancestor(u, u));
      for (VertexId v = 0; v < n; ++v) {
        const bool path = oracle::reaches(g, u, v);
        ASSERT_EQ(g.is_ancestor(u, v), path) << "n=" << n << " u=" << u << " v=" << v;
        ASSERT_EQ(g.is_descendant(v, u), path);
      }
    }
  }
}

TEST(Conflict, FixtureE0) {
  const AlignmentInstance e0 = fixture::e0();
  EXPECT_FALSE(conflict_condition(e0, e0.edge(u1), e0.edge(u2)).has_value());
  EXPECT_EQ(conflict_condition(e0, e0.edge(u3), e0.edge(u4)),
            ConflictCondition::kAncestorNotPreserved);
  EXPECT_EQ(conflict_condition(e0, e0.edge(u1), e0.edge(u3)), ConflictCondition::kSameLeft);
  EXPECT_EQ(conflict_condition(e0, e0.edge(u1), e0.edge(u4)),
            ConflictCondition::kAncestorNotPreserved);
  EXPECT_EQ(conflict_condition(e0, e0.edge(u2), e0.edge(u3)),
            ConflictCondition::kDescendantNotPreserved);
  EXPECT_EQ(code_of([&] { is_conflict(e0, e0.edge(u1), e0.edge(u1)); }), ErrorCode::kSameEdge);
}

TEST(Conflict, IncomparableLeftVerticesAreUnconstrained) {
  const AlignmentInstance e1 = fixture::e1();
  EXPECT_FALSE(is_conflict(e1, e1.edge(fixture::e1_as), e1.edge(fixture::e1_bc)));
  EXPECT_TRUE(breaks_ancestry_isomorphism(e1, e1.edge(fixture::e1_as), e1.edge(fixture::e1_bc)));
}

TEST(ConflictSet, FixtureE0) {
  const AlignmentInstance e0 = fixture::e0();
  EXPECT_THAT(conflict_set(e0, u3), ElementsAre(u1, u2, u4));
  EXPECT_THAT(conflict_set(e0, u1), ElementsAre(u3, u4));
  EXPECT_EQ(code_of([&] { conflict_set(e0, 4); }), ErrorCode::kIndexOutOfRange);

  AlignmentInstance single(DagGraph(1, {}), DagGraph(1, {}), {{0, 0, 0.3}});
  EXPECT_THAT(conflict_set(single, 0), IsEmpty());
}

TEST(Conflict, SymmetricAndMatchesOracle) {
  std::mt19937_64 rng(5);
  int pairs = 0;
  while (pairs < 1500) {
    DagGraph g1 = oracle::random_dag(rng, 1 + rng() % 7, 0.4);
    DagGraph g2 = oracle::random_dag(rng, 1 + rng() % 7, 0.4);
    AlignmentInstance in = oracle::random_instance(rng, std::move(g1), std::move(g2), 12);
    for (EdgeIndex i = 0; i < in.size(); ++i) {
      for (EdgeIndex j = 0; j < in.size(); ++j) {
        if (i == j) continue;
        const auto c = conflict_condition(in, in.edge(i), in.edge(j));
        ASSERT_EQ(c.has_value(), is_conflict(in, in.edge(j), in.edge(i)));
        ASSERT_EQ(c ? static_cast<int>(*c) : 0, oracle::conflict(in, in.edge(i), in.edge(j)));
        ++pairs;
      }
    }
  }
}

TEST(Validate, FigureVectors) {
  const AlignmentInstance e0 = fixture::e0();
  const std::vector<EdgeIndex> good{u1, u2};
  ValidationReport ok = validate_alignment(e0, good);
  EXPECT_TRUE(ok.valid);
  EXPECT_DOUBLE_EQ(ok.recomputed_weight, 1.0);

  const std::vector<EdgeIndex> bad{u3, u4};
  ValidationReport no = validate_alignment(e0, bad);
  EXPECT_FALSE(no.valid);
  EXPECT_THAT(no.conflict_violations,
              ElementsAre(ConflictViolation{u3, u4, ConflictCondition::kAncestorNotPreserved}));
  EXPECT_THAT(no.duplicate_vertex_violations, IsEmpty());

  ValidationReport empty = validate_alignment(e0, {});
  EXPECT_TRUE(empty.valid);
  EXPECT_EQ(empty.recomputed_weight, 0.0);
}

TEST(Validate, SharedVerticesAndRepeats) {
  const AlignmentInstance e0 = fixture::e0();
  const std::vector<EdgeIndex> shared{u1, u3};
  ValidationReport r = validate_alignment(e0, shared);
  EXPECT_FALSE(r.valid);
  EXPECT_THAT(r.duplicate_vertex_violations, ElementsAre(std::pair<EdgeIndex, EdgeIndex>{u1, u3}));
  EXPECT_THAT(r.conflict_violations,
              ElementsAre(ConflictViolation{u1, u3, ConflictCondition::kSameLeft}));

  const std::vector<EdgeIndex> repeated{u2, u2};
  EXPECT_FALSE(validate_alignment(e0, repeated).valid);

  const std::vector<EdgeIndex> out_of_range{9};
  EXPECT_EQ(code_of([&] { validate_alignment(e0, out_of_range); }), ErrorCode::kIndexOutOfRange);
}

// Exhaustive over all subsets of small random instances.
TEST(Validate, AgreesWithPairwiseOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    DagGraph g1 = oracle::random_dag(rng, 1 + rng() % 5, 0.5);
    DagGraph g2 = oracle::random_dag(rng, 1 + rng() % 5, 0.5);
    AlignmentInstance in = oracle::random_instance(rng, std::move(g1), std::move(g2), 10);
    const auto clash = oracle::conflict_matrix(in);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << in.size()); ++mask) {
      std::vector<EdgeIndex> subset;
      for (EdgeIndex i = 0; i < in.size(); ++i) {
        if (mask >> i & 1u) subset.push_back(i);
      }
      ASSERT_EQ(validate_alignment(in, subset).valid, oracle::subset_ok(clash, mask));
    }
  }
}

TEST(CompleteBeta, AddsZeroPairs) {
  AlignmentInstance partial(DagGraph(2, {}), DagGraph(2, {}), {{1, 0, 0.4}});
  AlignmentInstance full = complete_beta(partial);
  EXPECT_TRUE(full.is_complete());
  ASSERT_EQ(full.size(), 4u);
  EXPECT_EQ(full.edge(0), (CandidateEdge{1, 0, 0.4}));
  int zeros = 0;
  for (const CandidateEdge& e : full.beta()) zeros += e.weight == 0.0;
  EXPECT_EQ(zeros, 3);

  EXPECT_EQ(complete_beta(full), full);

  AlignmentInstance empty(DagGraph(1, {}), DagGraph(1, {}), {});
  EXPECT_EQ(complete_beta(empty).beta(), (std::vector<CandidateEdge>{{0, 0, 0.0}}));
}

TEST(StripZero, Examples) {
  AlignmentInstance in(DagGraph(2, {}), DagGraph(2, {}), {{0, 0, 0.0}, {1, 1, 0.5}});
  Alignment mixed = make_alignment(in, {0, 1});
  Alignment stripped = strip_zero(mixed, in);
  EXPECT_THAT(stripped.chosen, ElementsAre(1u));
  EXPECT_DOUBLE_EQ(stripped.total_weight, 0.5);

  Alignment positive = make_alignment(in, {1});
  EXPECT_EQ(strip_zero(positive, in).chosen, positive.chosen);

  Alignment zeros = make_alignment(in, {0});
  EXPECT_THAT(strip_zero(zeros, in).chosen, IsEmpty());
  EXPECT_EQ(strip_zero(zeros, in).total_weight, 0.0);
}

TEST(Instance, RejectsBadBeta) {
  EXPECT_EQ(code_of([] { AlignmentInstance(DagGraph(1, {}), DagGraph(1, {}), {{0, 0, 1.5}}); }),
            ErrorCode::kWeightOutOfRange);
  EXPECT_EQ(code_of([] { AlignmentInstance(DagGraph(1, {}), DagGraph(1, {}), {{0, 0, -0.1}}); }),
            ErrorCode::kWeightOutOfRange);
  EXPECT_EQ(code_of([] {
              AlignmentInstance(DagGraph(1, {}), DagGraph(1, {}), {{0, 0, 0.5}, {0, 0, 0.2}});
            }),
            ErrorCode::kDuplicatePair);
  EXPECT_EQ(code_of([] { AlignmentInstance(DagGraph(1, {}), DagGraph(1, {}), {{0, 1, 0.5}}); }),
            ErrorCode::kIndexOutOfRange);
}

TEST(Serialize, E0RoundTrip) {
  const AlignmentInstance e0 = fixture::e0();
  EXPECT_EQ(parse_instance(serialize_instance(e0)), e0);
}

TEST(Serialize, FixturesAreByteStable) {
  for (const char* name : {"E0.json", "E1.json", "diamond.json"}) {
    const std::string text = read_text_file(fixture::path(name));
    EXPECT_EQ(serialize_instance(parse_instance(text)), text) << name;
  }
  EXPECT_EQ(parse_instance(read_text_file(fixture::path("E0.json"))), fixture::e0());
  EXPECT_EQ(parse_instance(read_text_file(fixture::path("E1.json"))), fixture::e1());
}

TEST(Serialize, RejectsInvalidDocuments) {
  auto parse_file = [](const char* name) {
    return [name] { parse_instance(read_text_file(fixture::path(name))); };
  };
  EXPECT_EQ(code_of(parse_file("bad_weight.json")), ErrorCode::kWeightOutOfRange);
  EXPECT_EQ(code_of(parse_file("cyclic.json")), ErrorCode::kCyclicGraph);
  EXPECT_EQ(code_of(parse_file("duplicate.json")), ErrorCode::kDuplicatePair);
  EXPECT_EQ(code_of(parse_file("malformed.json")), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_instance(R"({"g1": {"n": -1}, "g2": {"n": 1}, "beta": []})"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] {
              parse_instance(R"({"g1": {"n": 1}, "g2": {"n": 1}, "beta": [[0, 0]]})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] {
              parse_instance(
                  R"({"g1": {"n": 1}, "g2": {"n": 1}, "beta": [], "labels1": ["a", "b"]})");
            }),
            ErrorCode::kParseError);
}

TEST(Serialize, GeneratedInstancesRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenSpec spec{static_cast<GraphKind>(seed % 3), 1 + seed % 9, 1 + seed % 7, 0.3, 0.7, seed};
    const AlignmentInstance in = gen_instance(spec);
    const std::string text = serialize_instance(in);
    EXPECT_EQ(parse_instance(text), in);
    EXPECT_EQ(serialize_instance(parse_instance(text)), text);
  }
}

TEST(Serialize, WeightFormatting) {
  EXPECT_EQ(format_weight(1.0), "1.0");
  EXPECT_EQ(format_weight(0.9), "0.9");
  EXPECT_EQ(format_weight(0.0), "0.0");
  EXPECT_EQ(format_weight(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_weight(1.0 / 0.9), "1.111111111");
}

TEST(Serialize, AlignmentDocuments) {
  const AlignmentInstance e0 = fixture::e0();
  const Alignment a = make_alignment(e0, {u1, u2});
  EXPECT_EQ(alignment_to_json(e0, a),
            "{\"chosen\": [[0, 0, 0.5], [1, 1, 0.5]], \"weight\": 1.0, \"valid\": true}\n");
  EXPECT_EQ(parse_alignment(e0, alignment_to_json(e0, a)), (std::vector<EdgeIndex>{u1, u2}));
  EXPECT_EQ(code_of([&] { parse_alignment(e0, R"({"chosen": [[5, 0, 1.0]]})"); }),
            ErrorCode::kParseError);
}

}  // namespace
}  // namespace dagalign
