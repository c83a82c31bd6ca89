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

#ifndef ALTSIGN_SPANTREE_H_
#define ALTSIGN_SPANTREE_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "altsign/graph.h"

namespace altsign {

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// A tree (or move) that does not fit the graph or the operation's contract.
class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SwapMove;

// Spanning tree of a graph, rooted at a fixed vertex, with the parent and
// depth of every vertex. The depth of v is its tree distance from the root.
//
// Invariants, checked on construction:
//   - exactly n-1 edges, all of them graph edges, every vertex reachable
//     from the root;
//   - depth(root) == 0 and depth(v) == depth(parent(v)) + 1 otherwise.
class RootedTree {
 public:
  // `parent[root]` must be kNoVertex.
  static RootedTree from_parents(const Graph& g, VertexId root,
                                 std::vector<VertexId> parent);
  // Edges may come in any order or orientation.
  static RootedTree from_edges(const Graph& g, std::span<const Edge> edges,
                               VertexId root);

  VertexId root() const { return root_; }
  std::size_t vertex_count() const { return parent_.size(); }

  std::optional<VertexId> parent(VertexId v) const;
  std::uint32_t depth(VertexId v) const { return depth_.at(v); }
  std::span<const VertexId> parents() const { return parent_; }
  std::span<const std::uint32_t> depths() const { return depth_; }
  // Sorted ascending.
  std::span<const VertexId> children(VertexId v) const { return children_.at(v); }

  // Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(const Edge& e) const;

  // The endpoint of tree edge `e` farther from the root.
  VertexId lower_endpoint(const Edge& e) const;

  // True iff `a` lies on the root path of `b` (a vertex is its own ancestor).
  bool is_ancestor(VertexId a, VertexId b) const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_;
  }

 private:
  friend RootedTree apply_swap(const Graph&, const RootedTree&,
                               const SwapMove&);
  RootedTree() = default;
  void index_children();

  VertexId root_ = 0;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<Edge> edges_;
};

// Breadth-first tree from `root`, neighbors explored in ascending order.
// Depths equal graph distances. Throws DisconnectedGraphError.
RootedTree bfs_tree(const Graph& g, VertexId root);

// Sum of all depths.
std::int64_t potential(const RootedTree& t);

// Tree path from a to b, both ends included.
std::vector<VertexId> tree_path(const RootedTree& t, VertexId a, VertexId b);

// Tree path from e.u to e.v for a cotree edge e. Throws TreeError if e is a
// tree edge and GraphError if e is not an edge of g.
std::vector<VertexId> fundamental_path(const Graph& g, const RootedTree& t,
                                       const Edge& e);

enum class Direction { kIncreasing, kDecreasing, kNone };

// Shape of the depth sequence along a tree path. Interior positions only;
// consecutive depths on a tree path differ by exactly one, so the path is
// monotone iff it has no valley and no peak.
struct MonotoneReport {
  bool monotone = true;
  Direction direction = Direction::kNone;
  std::vector<std::size_t> valley_indices;
  std::vector<std::size_t> peak_indices;
};

MonotoneReport monotone_report(const RootedTree& t,
                               std::span<const VertexId> path);

// Replace tree edge `removed` by cotree edge `added`.
struct SwapMove {
  Edge added;
  Edge removed;
  std::int64_t delta_psi = 0;

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

// psi(T + add - remove) - psi(T) without building the new tree. Only the
// component cut off from the root by `remove` changes depth; it is re-rooted
// at the endpoint of `add` it contains. Throws TreeError unless `add` is a
// cotree edge of g and `remove` lies on its fundamental path.
std::int64_t delta_potential(const Graph& g, const RootedTree& t, const Edge& add,
                             const Edge& remove);

// New tree T + added - removed; parents and depths change only in the
// detached component. Throws TreeError if the move is invalid for t or its
// delta_psi is wrong.
RootedTree apply_swap(const Graph& g, const RootedTree& t, const SwapMove& move);

}  // namespace altsign

#endif  // ALTSIGN_SPANTREE_H_
