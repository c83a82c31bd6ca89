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

#include <sstream>

namespace altsign {

std::string to_dot(const Graph& g, const RootedTree* tree, const SignLabeling* signs) {
  if (signs != nullptr && tree == nullptr) {
    throw TreeError("a sign labeling needs its tree");
  }
  if (tree != nullptr) {
    if (tree->vertex_count() != g.vertex_count()) {
      throw TreeError("tree and graph have different vertex counts");
    }
    for (const Edge& e : tree->edges()) {
      if (!g.has_edge(e)) throw TreeError("tree edge " + e.key() + " is not in the graph");
    }
  }
  if (signs != nullptr) {
    for (const auto& [e, s] : signs->assignment()) {
      if (!tree->has_edge(e)) {
        throw TreeError("labeled edge " + e.key() + " is not a tree edge");
      }
    }
  }

  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (tree != nullptr) {
      os << " [label=\"" << v << "\\nd=" << tree->depth(v) << "\"";
      if (v == tree->root()) os << ", shape=doublecircle";
      os << "]";
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (tree != nullptr) {
      if (tree->has_edge(e)) {
        os << " [";
        if (signs != nullptr) {
          if (auto s = signs->get(e)) os << "label=\"" << to_string(*s) << "\", ";
        }
        os << "style=solid]";
      } else {
        os << " [style=dashed]";
      }
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace altsign
