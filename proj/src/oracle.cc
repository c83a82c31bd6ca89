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

#include "altsign/oracle.h"

#include <numeric>
#include <sstream>

#include "altsign/altsign.h"

namespace altsign::oracle {
namespace {

// Union-find with undo, for backtracking.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    VertexId b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::size_t> size_;
  std::vector<VertexId> history_;
};

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, VertexId root,
                 const std::function<void(const RootedTree&)>& visit,
                 std::uint64_t cap)
      : g_(g), root_(root), visit_(visit), cap_(cap), dsu_(g.vertex_count()) {}

  std::uint64_t run() {
    chosen_.reserve(g_.vertex_count());
    recurse(0);
    return count_;
  }

 private:
  void recurse(std::size_t i) {
    const std::size_t need = g_.vertex_count() - 1;
    if (chosen_.size() == need) {
      if (++count_ > cap_) {
        throw LimitError("more than " + std::to_string(cap_) + " spanning trees");
      }
      visit_(RootedTree::from_edges(g_, chosen_, root_));
      return;
    }
    const auto& edges = g_.edges();
    if (edges.size() - i < need - chosen_.size()) return;

    const Edge& e = edges[i];
    if (dsu_.unite(e.u, e.v)) {
      chosen_.push_back(e);
      recurse(i + 1);
      chosen_.pop_back();
      dsu_.undo();
    }
    if (still_connectable(i + 1)) recurse(i + 1);
  }

  // Can the chosen edges plus edges[from..] still span the graph?
  bool still_connectable(std::size_t from) const {
    RollbackDsu probe(g_.vertex_count());
    std::size_t components = g_.vertex_count();
    for (const Edge& e : chosen_) components -= probe.unite(e.u, e.v) ? 1 : 0;
    const auto& edges = g_.edges();
    for (std::size_t j = from; j < edges.size() && components > 1; ++j) {
      components -= probe.unite(edges[j].u, edges[j].v) ? 1 : 0;
    }
    return components == 1;
  }

  const Graph& g_;
  VertexId root_;
  const std::function<void(const RootedTree&)>& visit_;
  std::uint64_t cap_;
  RollbackDsu dsu_;
  std::vector<Edge> chosen_;
  std::uint64_t count_ = 0;
};

std::string tree_witness(const RootedTree& t, std::string_view check) {
  std::ostringstream os;
  os << check << ": root " << t.root() << ", tree edges";
  for (const Edge& e : t.edges()) os << ' ' << e.key();
  return os.str();
}

std::int64_t checked(__int128 value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw std::overflow_error("spanning tree determinant exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

std::uint64_t for_each_spanning_tree(const Graph& g, VertexId root,
                                     const std::function<void(const RootedTree&)>& visit,
                                     std::uint64_t cap) {
  if (!g.has_vertex(root)) throw GraphError("root " + std::to_string(root) + " out of range");
  if (!is_connected(g)) throw DisconnectedGraphError(connected_components(g).size());
  return TreeEnumerator(g, root, visit, cap).run();
}

std::vector<RootedTree> enumerate_spanning_trees(const Graph& g, VertexId root,
                                                 std::uint64_t cap) {
  std::vector<RootedTree> out;
  for_each_spanning_tree(g, root, [&](const RootedTree& t) { out.push_back(t); }, cap);
  return out;
}

std::int64_t count_spanning_trees(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  const std::size_t k = n - 1;
  // Reduced Laplacian: vertex v maps to row v - 1.
  std::vector<std::vector<std::int64_t>> a(k, std::vector<std::int64_t>(k, 0));
  for (const Edge& e : g.edges()) {
    if (e.u > 0) ++a[e.u - 1][e.u - 1];
    if (e.v > 0) ++a[e.v - 1][e.v - 1];
    if (e.u > 0 && e.v > 0) {
      --a[e.u - 1][e.v - 1];
      --a[e.v - 1][e.u - 1];
    }
  }

  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && a[swap_row][p] == 0) ++swap_row;
      if (swap_row == k) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        const __int128 num = static_cast<__int128>(a[i][j]) * a[p][p] -
                             static_cast<__int128>(a[i][p]) * a[p][j];
        // Bareiss: the division is exact.
        a[i][j] = checked(num / prev);
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

MaxPotential max_potential_tree(const Graph& g, VertexId root, std::uint64_t cap) {
  std::optional<RootedTree> best;
  std::int64_t best_psi = -1;
  std::uint64_t count = 0;
  for_each_spanning_tree(
      g, root,
      [&](const RootedTree& t) {
        const std::int64_t psi = potential(t);
        if (psi > best_psi) {
          best_psi = psi;
          best = t;
          count = 1;
        } else if (psi == best_psi) {
          ++count;
          if (t.edges() < best->edges()) best = t;
        }
      },
      cap);
  return {std::move(*best), best_psi, count};
}

bool is_swap_local_max(const Graph& g, const RootedTree& t) {
  for (const Edge& e : g.edges()) {
    if (t.has_edge(e)) continue;
    const std::vector<VertexId> path = fundamental_path(g, t, e);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      if (delta_potential(g, t, e, Edge::canonical(path[j], path[j + 1])) > 0) {
        return false;
      }
    }
  }
  return true;
}

OracleReport exhaustive_check(const Graph& g, VertexId root, std::uint64_t cap) {
  OracleReport r;
  r.graph_id = graph_id(g);
  r.root = root;
  r.global_max_conforms = true;
  r.all_local_maxima_conform = true;

  std::int64_t max_psi = -1;
  // Conformance of the maximal trees seen so far.
  bool max_conforms = true;
  std::optional<std::string> max_witness;

  r.tree_count = for_each_spanning_tree(
      g, root,
      [&](const RootedTree& t) {
        const std::int64_t psi = potential(t);
        const bool conforms = verify_monotone(g, t).ok;
        if (psi > max_psi) {
          max_psi = psi;
          r.max_psi_tree_count = 1;
          max_conforms = conforms;
          max_witness.reset();
        } else if (psi == max_psi) {
          ++r.max_psi_tree_count;
          max_conforms = max_conforms && conforms;
        }
        if (!conforms && psi == max_psi && !max_witness) {
          max_witness = tree_witness(t, "global maximum not monotone");
        }
        if (is_swap_local_max(g, t)) {
          ++r.local_max_tree_count;
          if (!conforms && r.all_local_maxima_conform) {
            r.all_local_maxima_conform = false;
            if (!r.witness) r.witness = tree_witness(t, "local maximum not monotone");
          }
        }
      },
      cap);
  r.max_psi = max_psi;
  r.global_max_conforms = max_conforms;
  if (!max_conforms) r.witness = max_witness;

  try {
    Solution s = solve(g, root);
    r.solve_agrees = verify_alternating(g, s.tree, s.signs).ok;
    if (!r.solve_agrees && !r.witness) {
      r.witness = tree_witness(s.tree, "solver output not alternating");
    }
  } catch (const FalsificationError& e) {
    r.solve_agrees = false;
    if (!r.witness) r.witness = std::string(e.what()) + "\n" + e.dump();
  } catch (const InternalVerificationError& e) {
    r.solve_agrees = false;
    if (!r.witness) r.witness = e.what();
  }

  r.kirchhoff_count = count_spanning_trees(g);
  r.count_agrees = r.kirchhoff_count >= 0 &&
                   static_cast<std::uint64_t>(r.kirchhoff_count) == r.tree_count;
  return r;
}

void for_each_connected_graph(std::size_t n,
                              const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxCorpusVertices) {
    throw LimitError("corpus enumeration supports 1 <= n <= " +
                     std::to_string(kMaxCorpusVertices));
  }
  std::vector<Edge> all;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) all.push_back({i, j});
  }
  const std::uint64_t subsets = std::uint64_t{1} << all.size();
  std::vector<Edge> chosen;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    chosen.clear();
    for (std::size_t b = 0; b < all.size(); ++b) {
      if ((mask >> b) & 1U) chosen.push_back(all[b]);
    }
    Graph g = Graph::from_edges(n, chosen);
    if (is_connected(g)) visit(g);
  }
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace altsign::oracle
