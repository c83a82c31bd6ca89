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

#include "altsign/dot.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace altsign {
namespace {

using testing::E;
using testing::make_tree;

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(DotTest, PlainGraph) {
  std::string dot = to_dot(gen_named("complete", {3}));
  EXPECT_EQ(dot,
            "graph G {\n  0;\n  1;\n  2;\n"
            "  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
}

TEST(DotTest, TreeWithSigns) {
  Graph k3 = gen_named("complete", {3});
  RootedTree t = make_tree(k3, 0, {{0, 2}, {1, 2}});
  SignLabeling phi({{E(0, 2), Sign::kMinus}, {E(1, 2), Sign::kPlus}});
  std::string dot = to_dot(k3, &t, &phi);
  EXPECT_NE(dot.find("0 -- 2 [label=\"-\", style=solid]"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [label=\"+\", style=solid]"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1 [style=dashed]"), std::string::npos);
  EXPECT_NE(dot.find("1 [label=\"1\\nd=2\"]"), std::string::npos);
  EXPECT_EQ(count(dot, "--"), 3u);
}

TEST(DotTest, SingleVertex) {
  Graph g(1);
  std::string dot = to_dot(g);
  EXPECT_EQ(count(dot, "--"), 0u);
  EXPECT_EQ(dot, "graph G {\n  0;\n}\n");
}

TEST(DotTest, RejectsForeignLabels) {
  Graph k3 = gen_named("complete", {3});
  RootedTree t = make_tree(k3, 0, {{0, 2}, {1, 2}});
  SignLabeling phi({{E(0, 1), Sign::kMinus}});
  EXPECT_THROW(to_dot(k3, &t, &phi), TreeError);
  EXPECT_THROW(to_dot(k3, nullptr, &phi), TreeError);
  Graph p4 = gen_named("path", {4});
  EXPECT_THROW(to_dot(p4, &t), TreeError);
}

}  // namespace
}  // namespace altsign
