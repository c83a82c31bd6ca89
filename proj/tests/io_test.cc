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

#include "altsign/io.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace altsign {
namespace {

using testing::E;

TEST(EdgeListTest, ReadsHeaderAndEdges) {
  ParseResult r = parse_edge_list("3\n0 1\n1 2\n");
  EXPECT_EQ(r.graph.vertex_count(), 3u);
  EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{E(0, 1), E(1, 2)}));
  EXPECT_TRUE(r.log.clean());
}

TEST(EdgeListTest, DropsLoopsAndMergesDuplicates) {
  ParseResult r = parse_edge_list("2\n0 0\n0 1\n1 0\n");
  EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{E(0, 1)}));
  EXPECT_EQ(r.log.dropped_loops, 1u);
  EXPECT_EQ(r.log.merged_duplicates, 1u);
}

TEST(EdgeListTest, IndexOutOfRange) {
  try {
    parse_edge_list("2\n0 5\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(EdgeListTest, NoHeaderUsesMaxIndex) {
  ParseResult r = parse_edge_list("# comment\n\n0 4\n2 1\n");
  EXPECT_EQ(r.graph.vertex_count(), 5u);
  EXPECT_EQ(r.graph.edge_count(), 2u);
}

TEST(EdgeListTest, Errors) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n-1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1\n4\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0\n"), ParseError);
}

TEST(EdgeListTest, MalformedLineNumber) {
  try {
    parse_edge_list("4\n0 1\n\n# c\n1 2 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
  }
}

TEST(EdgeListTest, HeaderOnlyGivesIsolatedVertices) {
  ParseResult r = parse_edge_list("3\n");
  EXPECT_EQ(r.graph.vertex_count(), 3u);
  EXPECT_EQ(r.graph.edge_count(), 0u);
}

TEST(EdgeListTest, CrlfLineEndings) {
  ParseResult r = parse_edge_list("3\r\n0 1\r\n1 2\r\n");
  EXPECT_EQ(r.graph.edge_count(), 2u);
}

TEST(DimacsTest, Triangle) {
  ParseResult r = parse_dimacs("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  EXPECT_EQ(r.graph, gen_named("complete", {3}));
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_EQ(r.vertex_labels, (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(DimacsTest, Path) {
  ParseResult r = parse_dimacs("c a path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  EXPECT_EQ(r.graph, gen_named("path", {4}));
}

TEST(DimacsTest, MissingHeader) {
  EXPECT_THROW(parse_dimacs("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("c nothing\n"), ParseError);
}

TEST(DimacsTest, EdgeCountMismatchIsWarning) {
  ParseResult r = parse_dimacs("p edge 3 5\ne 1 2\n");
  EXPECT_EQ(r.graph.edge_count(), 1u);
  ASSERT_EQ(r.warnings.size(), 1u);
}

TEST(DimacsTest, MalformedDescriptors) {
  EXPECT_THROW(parse_dimacs("p col 3 1\ne 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 1 4\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 3 1\nx 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 3 1\np edge 3 1\n"), ParseError);
}

TEST(DimacsTest, NormalizesLikeEdgeList) {
  ParseResult r = parse_dimacs("p edge 2 3\ne 1 1\ne 1 2\ne 2 1\n");
  EXPECT_EQ(r.graph.edge_count(), 1u);
  EXPECT_EQ(r.log.dropped_loops, 1u);
  EXPECT_EQ(r.log.merged_duplicates, 1u);
}

TEST(EmitTest, Format) {
  EXPECT_EQ(emit_edge_list(gen_named("path", {4})), "4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(emit_edge_list(gen_named("complete", {3})), "3\n0 1\n0 2\n1 2\n");
}

TEST(FormatNameTest, RoundTrip) {
  EXPECT_EQ(parse_format_name("dimacs"), GraphFormat::kDimacs);
  EXPECT_EQ(format_name(GraphFormat::kEdgeList), "edgelist");
  EXPECT_THROW(parse_format_name("gml"), ParseError);
}

}  // namespace
}  // namespace altsign
