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

#ifndef ALTSIGN_DOT_H_
#define ALTSIGN_DOT_H_

#include <string>

#include "altsign/graph.h"
#include "altsign/sign.h"
#include "altsign/spantree.h"

namespace altsign {

// Graphviz "graph" text. With a tree, vertices carry their depth, tree edges
// are solid and cotree edges dashed; with signs, tree edges are labeled "+"
// or "-". Throws TreeError if the tree does not belong to g or the labeling
// names an edge outside the tree.
std::string to_dot(const Graph& g, const RootedTree* tree = nullptr,
                   const SignLabeling* signs = nullptr);

}  // namespace altsign

#endif  // ALTSIGN_DOT_H_
