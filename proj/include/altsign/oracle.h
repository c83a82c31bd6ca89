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

#ifndef ALTSIGN_ORACLE_H_
#define ALTSIGN_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "altsign/graph.h"
#include "altsign/spantree.h"

// Brute-force ground truth for small graphs: every spanning tree, the
// global potential maximum, and exhaustive checks of the solver's claims.
namespace altsign::oracle {

// Instance too big for exhaustive treatment.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultTreeCap = 5'000'000;

// Calls `visit` once per spanning tree of g, rooted at `root`. Backtracks
// over the lexicographic edge order, including an edge before excluding it,
// so trees come out in lexicographic order of their edge sets. Returns the
// number of trees. Throws LimitError past `cap` trees and
// DisconnectedGraphError.
std::uint64_t for_each_spanning_tree(
    const Graph& g, VertexId root,
    const std::function<void(const RootedTree&)>& visit,
    std::uint64_t cap = kDefaultTreeCap);

std::vector<RootedTree> enumerate_spanning_trees(const Graph& g, VertexId root,
                                                 std::uint64_t cap = kDefaultTreeCap);

// Determinant of the Laplacian with row and column 0 deleted, by
// fraction-free (Bareiss) elimination in exact integers. Throws
// std::overflow_error if an intermediate leaves 64-bit range.
std::int64_t count_spanning_trees(const Graph& g);

struct MaxPotential {
  RootedTree tree;  // lexicographically least edge set among the maxima
  std::int64_t max_psi = 0;
  std::uint64_t count = 0;
};

MaxPotential max_potential_tree(const Graph& g, VertexId root,
                                std::uint64_t cap = kDefaultTreeCap);

// True iff no single fundamental-cycle swap strictly raises the potential.
bool is_swap_local_max(const Graph& g, const RootedTree& t);

struct OracleReport {
  std::string graph_id;
  VertexId root = 0;
  std::uint64_t tree_count = 0;
  std::int64_t kirchhoff_count = 0;
  std::int64_t max_psi = 0;
  std::uint64_t max_psi_tree_count = 0;
  std::uint64_t local_max_tree_count = 0;
  bool global_max_conforms = false;       // every potential-maximal tree is monotone
  bool all_local_maxima_conform = false;  // every swap-local-max tree is monotone
  bool solve_agrees = false;              // solve() output verifies
  bool count_agrees = false;              // tree_count == kirchhoff_count
  // Serialized counterexample for the first failed check.
  std::optional<std::string> witness;

  // Any of the monotonicity or solver checks failed.
  bool falsified() const {
    return !global_max_conforms || !all_local_maxima_conform || !solve_agrees;
  }
  bool passed() const { return !falsified() && count_agrees; }
};

OracleReport exhaustive_check(const Graph& g, VertexId root,
                              std::uint64_t cap = kDefaultTreeCap);

inline constexpr std::size_t kMaxCorpusVertices = 6;

// Every labeled simple connected graph on n vertices, 1 <= n <= 6, once
// each: edge subsets of K_n in increasing bitmask order (bit i is the i-th
// edge of K_n in lexicographic order), filtered by connectivity.
void for_each_connected_graph(std::size_t n,
                              const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

}  // namespace altsign::oracle

#endif  // ALTSIGN_ORACLE_H_
