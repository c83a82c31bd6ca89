// Copyright 2026 The altsign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "altsign/spantree.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace altsign {
namespace {

using testing::E;
using testing::make_graph;
using testing::make_tree;
using testing::psi_after_swap;

std::vector<std::uint32_t> depths_of(const RootedTree& t) {
  return {t.depths().begin(), t.depths().end()};
}

TEST(RootedTreeTest, FromEdgesComputesParentsAndDepths) {
  Graph k4 = gen_named("complete", {4});
  RootedTree t = make_tree(k4, 0, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(depths_of(t), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_EQ(t.parent(0), std::nullopt);
  EXPECT_EQ(t.parent(3), 2u);
  EXPECT_EQ(t.lower_endpoint(E(1, 2)), 2u);
  EXPECT_TRUE(t.is_ancestor(1, 3));
  EXPECT_FALSE(t.is_ancestor(3, 1));
}

TEST(RootedTreeTest, RejectsNonTrees) {
  Graph k4 = gen_named("complete", {4});
  // Cycle plus isolated vertex.
  EXPECT_THROW(make_tree(k4, 0, {{0, 1}, {1, 2}, {0, 2}}), TreeError);
  EXPECT_THROW(make_tree(k4, 0, {{0, 1}, {1, 2}}), TreeError);
  Graph p4 = gen_named("path", {4});
  EXPECT_THROW(make_tree(p4, 0, {{0, 1}, {1, 2}, {0, 3}}), TreeError);
  EXPECT_THROW(RootedTree::from_parents(p4, 0, {kNoVertex, 0, 1, 0}), TreeError);
  EXPECT_THROW(RootedTree::from_parents(p4, 0, {kNoVertex, 2, 1, 2}), TreeError);
}

TEST(BfsTreeTest, SpecExamples) {
  RootedTree k3 = bfs_tree(gen_named("complete", {3}), 0);
  EXPECT_EQ(k3.edges(), (std::vector<Edge>{E(0, 1), E(0, 2)}));
  EXPECT_EQ(depths_of(k3), (std::vector<std::uint32_t>{0, 1, 1}));

  RootedTree p4 = bfs_tree(gen_named("path", {4}), 0);
  EXPECT_EQ(p4.edges(), gen_named("path", {4}).edges());
  EXPECT_EQ(depths_of(p4), (std::vector<std::uint32_t>{0, 1, 2, 3}));

  RootedTree k4 = bfs_tree(gen_named("complete", {4}), 0);
  EXPECT_EQ(k4.edges(), (std::vector<Edge>{E(0, 1), E(0, 2), E(0, 3)}));
  EXPECT_EQ(depths_of(k4), (std::vector<std::uint32_t>{0, 1, 1, 1}));
}

TEST(BfsTreeTest, DepthsAreGraphDistances) {
  Graph grid = gen_named("grid", {4, 5});
  RootedTree t = bfs_tree(grid, 0);
  for (VertexId v = 0; v < grid.vertex_count(); ++v) {
    EXPECT_EQ(t.depth(v), v / 5 + v % 5);
  }
}

TEST(BfsTreeTest, Errors) {
  EXPECT_THROW(bfs_tree(Graph(2), 0), DisconnectedGraphError);
  EXPECT_THROW(bfs_tree(gen_named("path", {3}), 3), GraphError);
}

TEST(PotentialTest, SpecExamples) {
  EXPECT_EQ(potential(bfs_tree(gen_named("path", {3}), 0)), 3);
  Graph k4 = gen_named("complete", {4});
  EXPECT_EQ(potential(bfs_tree(k4, 0)), 3);
  EXPECT_EQ(potential(make_tree(k4, 0, {{0, 1}, {1, 2}, {2, 3}})), 6);
}

TEST(FundamentalPathTest, SpecExamples) {
  Graph k3 = gen_named("complete", {3});
  EXPECT_EQ(fundamental_path(k3, bfs_tree(k3, 0), E(1, 2)),
            (std::vector<VertexId>{1, 0, 2}));

  Graph k4 = gen_named("complete", {4});
  EXPECT_EQ(fundamental_path(k4, make_tree(k4, 0, {{0, 1}, {1, 2}, {2, 3}}), E(0, 3)),
            (std::vector<VertexId>{0, 1, 2, 3}));

  Graph c5 = gen_named("cycle", {5});
  RootedTree t = make_tree(c5, 0, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(fundamental_path(c5, t, E(0, 4)), (std::vector<VertexId>{0, 1, 2, 3, 4}));
}

TEST(FundamentalPathTest, Errors) {
  Graph k3 = gen_named("complete", {3});
  RootedTree t = bfs_tree(k3, 0);
  EXPECT_THROW(fundamental_path(k3, t, E(0, 1)), TreeError);
  Graph p3 = gen_named("path", {3});
  EXPECT_THROW(fundamental_path(p3, bfs_tree(p3, 0), E(0, 2)), GraphError);
}

TEST(MonotoneReportTest, SpecExamples) {
  // Root 0 with children 1 and 2; 3 hangs below 1; 4 below 3.
  Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 3}});
  RootedTree t = make_tree(g, 0, {{0, 1}, {0, 2}, {1, 3}, {3, 4}});

  std::vector<VertexId> valley = {1, 0, 2};  // depths 1,0,1
  MonotoneReport r = monotone_report(t, valley);
  EXPECT_FALSE(r.monotone);
  EXPECT_EQ(r.valley_indices, std::vector<std::size_t>{1});
  EXPECT_TRUE(r.peak_indices.empty());
  EXPECT_EQ(r.direction, Direction::kNone);

  std::vector<VertexId> rising = {0, 1, 3, 4};  // depths 0,1,2,3
  r = monotone_report(t, rising);
  EXPECT_TRUE(r.monotone);
  EXPECT_EQ(r.direction, Direction::kIncreasing);

  std::vector<VertexId> falling = {4, 3, 1};
  EXPECT_EQ(monotone_report(t, falling).direction, Direction::kDecreasing);

  // Depths 1,2,1 do not occur along tree paths, but the report is defined
  // on any sequence.
  std::vector<VertexId> peak = {1, 3, 2};
  r = monotone_report(t, peak);
  EXPECT_FALSE(r.monotone);
  EXPECT_EQ(r.peak_indices, std::vector<std::size_t>{1});
  EXPECT_TRUE(r.valley_indices.empty());
}

TEST(DeltaPotentialTest, SpecExamples) {
  Graph k3 = gen_named("complete", {3});
  RootedTree t = bfs_tree(k3, 0);
  ASSERT_EQ(potential(t), 2);
  EXPECT_EQ(delta_potential(k3, t, E(1, 2), E(0, 1)), 1);
  EXPECT_EQ(delta_potential(k3, t, E(1, 2), E(0, 2)), 1);
  // Independent recomputation from the swapped edge set.
  EXPECT_EQ(psi_after_swap(k3, t, E(1, 2), E(0, 1)), 3);
}

TEST(DeltaPotentialTest, AgreesWithRecomputationOnAllCandidates) {
  Graph g = gen_named("grid", {3, 4});
  RootedTree t = bfs_tree(g, 5);
  for (const Edge& e : g.edges()) {
    if (t.has_edge(e)) continue;
    auto path = fundamental_path(g, t, e);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      Edge rm = E(path[j], path[j + 1]);
      EXPECT_EQ(delta_potential(g, t, e, rm),
                psi_after_swap(g, t, e, rm) - potential(t));
    }
  }
}

TEST(DeltaPotentialTest, RejectsInvalidMoves) {
  Graph k4 = gen_named("complete", {4});
  RootedTree star = bfs_tree(k4, 0);
  EXPECT_THROW(delta_potential(k4, star, E(1, 2), E(0, 3)), TreeError);  // off path
  EXPECT_THROW(delta_potential(k4, star, E(0, 1), E(0, 2)), TreeError);  // add in tree
  EXPECT_THROW(delta_potential(k4, star, E(1, 2), E(2, 3)), TreeError);  // remove not in tree
  Graph p3 = gen_named("path", {3});
  EXPECT_THROW(delta_potential(p3, bfs_tree(p3, 0), E(0, 2), E(0, 1)), TreeError);
  EXPECT_THROW(delta_potential(k4, star, Edge{2, 1}, E(0, 1)), TreeError);
}

TEST(ApplySwapTest, SpecExamples) {
  Graph k3 = gen_named("complete", {3});
  RootedTree t = apply_swap(k3, bfs_tree(k3, 0), {E(1, 2), E(0, 1), 1});
  EXPECT_EQ(t.edges(), (std::vector<Edge>{E(0, 2), E(1, 2)}));
  EXPECT_EQ(depths_of(t), (std::vector<std::uint32_t>{0, 2, 1}));

  Graph k4 = gen_named("complete", {4});
  RootedTree u = apply_swap(k4, bfs_tree(k4, 0), {E(1, 2), E(0, 1), 1});
  EXPECT_EQ(u.edges(), (std::vector<Edge>{E(0, 2), E(0, 3), E(1, 2)}));
  EXPECT_EQ(depths_of(u), (std::vector<std::uint32_t>{0, 2, 1, 1}));
  EXPECT_EQ(potential(u), 4);
  EXPECT_EQ(u, RootedTree::from_edges(k4, u.edges(), 0));
}

TEST(ApplySwapTest, UndoRestoresTree) {
  Graph k4 = gen_named("complete", {4});
  RootedTree star = bfs_tree(k4, 0);
  RootedTree moved = apply_swap(k4, star, {E(1, 2), E(0, 1), 1});
  RootedTree back = apply_swap(k4, moved, {E(0, 1), E(1, 2), -1});
  EXPECT_EQ(back.edges(), star.edges());
  EXPECT_EQ(back, star);
}

TEST(ApplySwapTest, WrongDeltaRejected) {
  Graph k3 = gen_named("complete", {3});
  EXPECT_THROW(apply_swap(k3, bfs_tree(k3, 0), {E(1, 2), E(0, 1), 2}), TreeError);
}

TEST(ApplySwapTest, ReRootsDeepComponent) {
  // Path 0-1-2-3-4 plus chord 4-0 and pendant 5 on 3. Removing 1-2 detaches
  // {2,3,4,5}, which re-hangs from 0 through 4.
  Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {3, 5}});
  RootedTree t = make_tree(g, 0, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
  const std::int64_t d = delta_potential(g, t, E(0, 4), E(1, 2));
  RootedTree u = apply_swap(g, t, {E(0, 4), E(1, 2), d});
  EXPECT_EQ(depths_of(u), (std::vector<std::uint32_t>{0, 1, 3, 2, 1, 3}));
  EXPECT_EQ(d, potential(u) - potential(t));
  EXPECT_EQ(u, RootedTree::from_edges(g, u.edges(), 0));
}

}  // namespace
}  // namespace altsign
