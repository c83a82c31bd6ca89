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

#include <algorithm>
#include <sstream>

namespace altsign {

Edge Edge::canonical(VertexId a, VertexId b) {
  if (a == b) {
    throw GraphError("loop edge at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string Edge::key() const {
  return std::to_string(u) + "-" + std::to_string(v);
}

DisconnectedGraphError::DisconnectedGraphError(std::size_t components)
    : GraphError("graph is disconnected (" + std::to_string(components) +
                 " components); solve each component separately"),
      components_(components) {}

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph Graph::from_pairs(std::size_t n,
                        std::span<const std::pair<VertexId, VertexId>> pairs,
                        NormalizationLog* log) {
  NormalizationLog local;
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw GraphError("vertex index " + std::to_string(std::max(a, b)) +
                       " out of range for n=" + std::to_string(n));
    }
    if (a == b) {
      ++local.dropped_loops;
      continue;
    }
    edges.push_back(Edge::canonical(a, b));
  }
  Graph g = from_edges(n, edges, log);
  if (log != nullptr) log->dropped_loops += local.dropped_loops;
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        NormalizationLog* log) {
  Graph g(n);
  g.edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : g.edges_) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("vertex index " + std::to_string(std::max(e.u, e.v)) +
                       " out of range for n=" + std::to_string(n));
    }
    if (e.u >= e.v) {
      throw GraphError("edge " + e.key() + " is not in canonical form");
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto last = std::unique(g.edges_.begin(), g.edges_.end());
  if (log != nullptr) {
    *log = {};
    log->merged_duplicates =
        static_cast<std::size_t>(std::distance(last, g.edges_.end()));
  }
  g.edges_.erase(last, g.edges_.end());

  // CSR adjacency. Lists come out sorted: the first pass appends the lower
  // neighbors in ascending order, the second the higher ones.
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.assign(g.offsets_[n], 0);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.v]++] = e.u;
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.u]++] = e.v;
  return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a >= n_ || b >= n_ || a == b) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

std::string graph_id(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << ':';
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ',';
    first = false;
    os << e.key();
  }
  return os.str();
}

}  // namespace altsign
