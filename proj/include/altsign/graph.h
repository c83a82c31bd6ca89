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

#ifndef ALTSIGN_GRAPH_H_
#define ALTSIGN_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace altsign {

// Dense 0-based vertex index, always < Graph::vertex_count().
using VertexId = std::uint32_t;

// Undirected edge stored once in canonical orientation u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  // Orders the endpoints. Throws GraphError on a loop.
  static Edge canonical(VertexId a, VertexId b);

  bool has_endpoint(VertexId x) const { return x == u || x == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  // "u-v", the key used in serialized sign maps.
  std::string key() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Contract violations on graph inputs (bad vertex index, loop edge, ...).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by algorithms whose precondition is a connected graph.
class DisconnectedGraphError : public GraphError {
 public:
  explicit DisconnectedGraphError(std::size_t components);
  std::size_t components() const { return components_; }

 private:
  std::size_t components_;
};

// What was discarded while reducing raw input to a simple graph.
struct NormalizationLog {
  std::size_t dropped_loops = 0;
  std::size_t merged_duplicates = 0;

  bool clean() const { return dropped_loops == 0 && merged_duplicates == 0; }
  friend bool operator==(const NormalizationLog&,
                         const NormalizationLog&) = default;
};

// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Builds the simple graph on n vertices spanned by `pairs`. Loops are
  // dropped and repeated (or reversed) pairs merged; the counts go to `log`
  // when given. Endpoints >= n throw GraphError.
  static Graph from_pairs(
      std::size_t n,
      std::span<const std::pair<VertexId, VertexId>> pairs,
      NormalizationLog* log = nullptr);

  // Same, for edges already known to be loop-free.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          NormalizationLog* log = nullptr);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool has_vertex(std::size_t v) const { return v < n_; }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
};

// True iff every vertex is reachable from vertex 0 (true for n <= 1).
bool is_connected(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// "n=3:0-1,0-2,1-2". Stable identifier for reports.
std::string graph_id(const Graph& g);

}  // namespace altsign

#endif  // ALTSIGN_GRAPH_H_
