#pragma once

#include <string>

#include "dagalign/instance.hpp"
#include "dagalign/serialize.hpp"

namespace dagalign::fixture {

inline std::string path(const std::string& name) {
  return std::string(DAGALIGN_FIXTURE_DIR) + "/" + name;
}

// G1: a1 -> a2, G2: b1 -> b2,
// β = u1 (a1,b1,0.5), u2 (a2,b2,0.5), u3 (a1,b2,0.9), u4 (a2,b1,0.9).
inline AlignmentInstance e0() {
  return AlignmentInstance(DagGraph(2, {{0, 1}}), DagGraph(2, {{0, 1}}),
                           {{0, 0, 0.5}, {1, 1, 0.5}, {0, 1, 0.9}, {1, 0, 0.9}}, {"a1", "a2"},
                           {"b1", "b2"});
}
inline constexpr EdgeIndex u1 = 0, u2 = 1, u3 = 2, u4 = 3;

// G1: r -> a, r -> b; G2: s -> c; complete β, zero except (a,s) = (b,c) = 1.
inline AlignmentInstance e1() {
  return AlignmentInstance(
      DagGraph(3, {{0, 1}, {0, 2}}), DagGraph(2, {{0, 1}}),
      {{0, 0, 0.0}, {0, 1, 0.0}, {1, 0, 1.0}, {1, 1, 0.0}, {2, 0, 0.0}, {2, 1, 1.0}},
      {"r", "a", "b"}, {"s", "c"});
}
inline constexpr EdgeIndex e1_as = 2, e1_bc = 5;

// Two trees where the ancestry-isomorphic optimum splits one child subtree of
// tree 1 across two child subtrees of tree 2.
//   tree 1: y -> y1, y -> y2, y1 -> m1, y1 -> m2        (y=0 y1=1 y2=2 m1=3 m2=4)
//   tree 2: k -> u1, k -> u2, u1 -> p1, u1 -> p3        (k=0 u1=1 u2=2 p1=3 p3=4)
//   β: (m1,p1), (m2,u2), (y2,p3), all weight 1.
inline AlignmentInstance crossing() {
  return AlignmentInstance(DagGraph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}),
                           DagGraph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}),
                           {{3, 3, 1.0}, {4, 2, 1.0}, {2, 4, 1.0}});
}

}  // namespace dagalign::fixture
