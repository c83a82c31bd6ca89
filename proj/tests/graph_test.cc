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

#include "altsign/graph.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace altsign {
namespace {

using testing::E;
using testing::make_graph;

TEST(EdgeTest, CanonicalOrdersEndpoints) {
  EXPECT_EQ(Edge::canonical(3, 1), (Edge{1, 3}));
  EXPECT_EQ(Edge::canonical(1, 3).key(), "1-3");
  EXPECT_THROW(Edge::canonical(2, 2), GraphError);
}

TEST(GraphTest, FromPairsNormalizes) {
  std::vector<std::pair<VertexId, VertexId>> pairs = {{0, 0}, {0, 1}, {1, 0}, {2, 1}};
  NormalizationLog log;
  Graph g = Graph::from_pairs(3, pairs, &log);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{E(0, 1), E(1, 2)}));
  EXPECT_EQ(log.dropped_loops, 1u);
  EXPECT_EQ(log.merged_duplicates, 1u);
}

TEST(GraphTest, AdjacencyIsSortedSymmetricClosure) {
  Graph g = make_graph(5, {{3, 0}, {0, 4}, {2, 0}, {1, 0}, {3, 4}});
  auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<VertexId>(nb.begin(), nb.end()),
            (std::vector<VertexId>{1, 2, 3, 4}));
  std::size_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : g.neighbors(v)) {
      EXPECT_TRUE(g.has_edge(w, v));
      ++total;
    }
  }
  EXPECT_EQ(total, 2 * g.edge_count());
}

TEST(GraphTest, RejectsOutOfRangeVertex) {
  std::vector<std::pair<VertexId, VertexId>> pairs = {{0, 5}};
  EXPECT_THROW(Graph::from_pairs(2, pairs), GraphError);
}

TEST(GraphTest, HasEdge) {
  Graph g = make_graph(3, {{0, 1}});
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 0));
  EXPECT_FALSE(g.has_edge(0, 7));
}

TEST(ConnectivityTest, SpecCases) {
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(gen_named("complete", {4})));
}

TEST(ConnectivityTest, Components) {
  Graph g = make_graph(5, {{0, 1}, {3, 4}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<VertexId>{2}));
  EXPECT_EQ(comps[2], (std::vector<VertexId>{3, 4}));
}

TEST(GraphIdTest, Format) {
  EXPECT_EQ(graph_id(gen_named("complete", {3})), "n=3:0-1,0-2,1-2");
  EXPECT_EQ(graph_id(Graph(1)), "n=1:");
}

}  // namespace
}  // namespace altsign
