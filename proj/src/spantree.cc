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

#include <algorithm>
#include <string>

namespace altsign {
namespace {

// Inserts/removes x in an ascending vector.
void sorted_insert(std::vector<VertexId>& v, VertexId x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}
void sorted_erase(std::vector<VertexId>& v, VertexId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

// Where a swap cuts the tree: `cut` is the lower endpoint of the removed
// edge (root of the detached component), `inner` the endpoint of the added
// edge inside that component, `outer` the one outside.
struct Cut {
  VertexId cut;
  VertexId inner;
  VertexId outer;
};

Cut locate_cut(const Graph& g, const RootedTree& t, const Edge& add,
               const Edge& remove) {
  if (add.u >= add.v || remove.u >= remove.v) {
    throw TreeError("swap edges must be given as u < v");
  }
  if (!g.has_edge(add)) {
    throw TreeError("added edge " + add.key() + " is not an edge of the graph");
  }
  if (t.has_edge(add)) {
    throw TreeError("added edge " + add.key() + " is already a tree edge");
  }
  if (!t.has_edge(remove)) {
    throw TreeError("removed edge " + remove.key() + " is not a tree edge");
  }
  const VertexId cut = t.lower_endpoint(remove);
  const bool u_inside = t.is_ancestor(cut, add.u);
  const bool v_inside = t.is_ancestor(cut, add.v);
  if (u_inside == v_inside) {
    throw TreeError("removed edge " + remove.key() +
                    " is not on the fundamental path of " + add.key());
  }
  return u_inside ? Cut{cut, add.u, add.v} : Cut{cut, add.v, add.u};
}

struct Relabel {
  VertexId vertex;
  VertexId new_parent;
  std::uint32_t new_depth;
};

// BFS over the detached component starting at the inner endpoint, which
// hangs off the outer endpoint once the swap is made.
std::vector<Relabel> reroot_detached(const RootedTree& t, const Cut& c) {
  std::vector<Relabel> out;
  out.push_back({c.inner, c.outer, t.depth(c.outer) + 1});
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Relabel cur = out[head];
    auto visit = [&](VertexId y) {
      if (y != cur.new_parent) out.push_back({y, cur.vertex, cur.new_depth + 1});
    };
    for (VertexId y : t.children(cur.vertex)) visit(y);
    if (cur.vertex != c.cut) visit(*t.parent(cur.vertex));
  }
  return out;
}

}  // namespace

void RootedTree::index_children() {
  children_.assign(parent_.size(), {});
  for (VertexId v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != kNoVertex) children_[parent_[v]].push_back(v);
  }
}

RootedTree RootedTree::from_parents(const Graph& g, VertexId root,
                                    std::vector<VertexId> parent) {
  const std::size_t n = g.vertex_count();
  if (parent.size() != n) throw TreeError("parent map size differs from n");
  if (root >= n) throw TreeError("root " + std::to_string(root) + " out of range");
  if (parent[root] != kNoVertex) throw TreeError("root has a parent");
  RootedTree t;
  t.root_ = root;
  t.parent_ = std::move(parent);
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    VertexId p = t.parent_[v];
    if (p == kNoVertex) {
      throw TreeError("vertex " + std::to_string(v) + " has no parent");
    }
    if (!g.has_edge(v, p)) {
      throw TreeError("tree edge " + Edge::canonical(v, p).key() +
                      " is not an edge of the graph");
    }
  }
  t.index_children();

  t.depth_.assign(n, 0);
  std::vector<VertexId> order{root};
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId x = order[head];
    for (VertexId y : t.children_[x]) {
      t.depth_[y] = t.depth_[x] + 1;
      order.push_back(y);
    }
  }
  if (order.size() != n) throw TreeError("parent links contain a cycle");

  t.edges_.reserve(n == 0 ? 0 : n - 1);
  for (VertexId v = 0; v < n; ++v) {
    if (v != root) t.edges_.push_back(Edge::canonical(v, t.parent_[v]));
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  return t;
}

RootedTree RootedTree::from_edges(const Graph& g, std::span<const Edge> edges,
                                  VertexId root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw TreeError("root " + std::to_string(root) + " out of range");
  if (edges.size() + 1 != n) {
    throw TreeError("a spanning tree on " + std::to_string(n) + " vertices needs " +
                    std::to_string(n - 1) + " edges, got " +
                    std::to_string(edges.size()));
  }
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) {
      throw TreeError("tree edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                      " is not an edge of the graph");
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order{root};
  seen[root] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId x = order[head];
    for (VertexId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        order.push_back(y);
      }
    }
  }
  if (order.size() != n) throw TreeError("edges do not span the graph");
  return from_parents(g, root, std::move(parent));
}

std::optional<VertexId> RootedTree::parent(VertexId v) const {
  VertexId p = parent_.at(v);
  if (p == kNoVertex) return std::nullopt;
  return p;
}

bool RootedTree::has_edge(const Edge& e) const {
  const std::size_t n = parent_.size();
  if (e.u >= n || e.v >= n) return false;
  return parent_[e.u] == e.v || parent_[e.v] == e.u;
}

VertexId RootedTree::lower_endpoint(const Edge& e) const {
  if (!has_edge(e)) throw TreeError(e.key() + " is not a tree edge");
  return parent_[e.u] == e.v ? e.u : e.v;
}

bool RootedTree::is_ancestor(VertexId a, VertexId b) const {
  while (depth_.at(b) > depth_.at(a)) b = parent_[b];
  return a == b;
}

RootedTree bfs_tree(const Graph& g, VertexId root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw GraphError("root " + std::to_string(root) + " out of range");
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order{root};
  seen[root] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId x = order[head];
    for (VertexId y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        order.push_back(y);
      }
    }
  }
  if (order.size() != n) {
    throw DisconnectedGraphError(connected_components(g).size());
  }
  return RootedTree::from_parents(g, root, std::move(parent));
}

std::int64_t potential(const RootedTree& t) {
  std::int64_t sum = 0;
  for (std::uint32_t d : t.depths()) sum += d;
  return sum;
}

std::vector<VertexId> tree_path(const RootedTree& t, VertexId a, VertexId b) {
  std::vector<VertexId> left{a};
  std::vector<VertexId> right{b};
  while (a != b) {
    if (t.depth(a) >= t.depth(b)) {
      a = *t.parent(a);
      left.push_back(a);
    } else {
      b = *t.parent(b);
      right.push_back(b);
    }
  }
  // Both lists end at the meeting vertex; keep it once.
  right.pop_back();
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

std::vector<VertexId> fundamental_path(const Graph& g, const RootedTree& t,
                                       const Edge& e) {
  if (t.vertex_count() != g.vertex_count()) {
    throw TreeError("tree and graph have different vertex counts");
  }
  if (!g.has_edge(e)) throw GraphError(e.key() + " is not an edge of the graph");
  if (t.has_edge(e)) throw TreeError(e.key() + " is a tree edge, not a cotree edge");
  return tree_path(t, e.u, e.v);
}

MonotoneReport monotone_report(const RootedTree& t,
                               std::span<const VertexId> path) {
  MonotoneReport r;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const auto prev = t.depth(path[i - 1]);
    const auto cur = t.depth(path[i]);
    const auto next = t.depth(path[i + 1]);
    if (prev > cur && cur < next) r.valley_indices.push_back(i);
    if (prev < cur && cur > next) r.peak_indices.push_back(i);
  }
  r.monotone = r.valley_indices.empty() && r.peak_indices.empty();
  if (r.monotone && path.size() >= 2) {
    r.direction = t.depth(path.front()) < t.depth(path.back())
                      ? Direction::kIncreasing
                      : Direction::kDecreasing;
  }
  return r;
}

std::int64_t delta_potential(const Graph& g, const RootedTree& t, const Edge& add,
                             const Edge& remove) {
  const Cut c = locate_cut(g, t, add, remove);
  std::int64_t delta = 0;
  for (const Relabel& r : reroot_detached(t, c)) {
    delta += static_cast<std::int64_t>(r.new_depth) -
             static_cast<std::int64_t>(t.depth(r.vertex));
  }
  return delta;
}

RootedTree apply_swap(const Graph& g, const RootedTree& t, const SwapMove& move) {
  const Cut c = locate_cut(g, t, move.added, move.removed);
  const std::vector<Relabel> relabel = reroot_detached(t, c);

  std::int64_t delta = 0;
  for (const Relabel& r : relabel) {
    delta += static_cast<std::int64_t>(r.new_depth) -
             static_cast<std::int64_t>(t.depth(r.vertex));
  }
  if (delta != move.delta_psi) {
    throw TreeError("swap " + move.added.key() + " for " + move.removed.key() +
                    " changes psi by " + std::to_string(delta) + ", move says " +
                    std::to_string(move.delta_psi));
  }

  RootedTree out = t;
  for (const Relabel& r : relabel) {
    const VertexId old_parent = t.parent_[r.vertex];
    if (old_parent != r.new_parent) {
      sorted_erase(out.children_[old_parent], r.vertex);
      sorted_insert(out.children_[r.new_parent], r.vertex);
      out.parent_[r.vertex] = r.new_parent;
    }
    out.depth_[r.vertex] = r.new_depth;
  }
  out.edges_.erase(std::lower_bound(out.edges_.begin(), out.edges_.end(), move.removed));
  out.edges_.insert(std::lower_bound(out.edges_.begin(), out.edges_.end(), move.added),
                    move.added);
  return out;
}

}  // namespace altsign
