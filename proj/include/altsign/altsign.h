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

#ifndef ALTSIGN_ALTSIGN_H_
#define ALTSIGN_ALTSIGN_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "altsign/graph.h"
#include "altsign/sign.h"
#include "altsign/spantree.h"

namespace altsign {

// Raised when a cotree edge has a non-monotone fundamental path yet no edge
// on that path can be swapped out for a strict increase of the potential.
// The existence argument behind the solver rules this out, so seeing it means
// either a bug or a counterexample. `dump()` holds the full instance.
class FalsificationError : public std::logic_error {
 public:
  FalsificationError(const std::string& what, std::string dump);
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

// A solver result that failed its own verification.
class InternalVerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SolveTrace {
  std::int64_t initial_psi = 0;
  std::vector<SwapMove> moves;
  std::int64_t final_psi = 0;
  // Scans over the cotree edges, including the final clean one.
  std::size_t cotree_scan_passes = 0;

  friend bool operator==(const SolveTrace&, const SolveTrace&) = default;
};

struct Solution {
  RootedTree tree;
  SignLabeling signs;
  SolveTrace trace;
};

// Swap for a cotree edge `e` whose fundamental path is not monotone. Every
// edge of the path is tried as the one to remove; the largest psi gain wins,
// ties going to the edge nearest e.u. Throws TreeError if the path is
// already monotone and FalsificationError if no candidate has a positive
// gain.
SwapMove find_improving_swap(const Graph& g, const RootedTree& t, const Edge& e);

// Local search from bfs_tree(g, root): scan cotree edges in lexicographic
// order, swap at the first non-monotone one, restart. Stops when a full scan
// is clean; psi rises strictly with each move and is at most (n-1)^2.
struct MonotoneResult {
  RootedTree tree;
  SolveTrace trace;
};
MonotoneResult monotone_spanning_tree(const Graph& g, VertexId root);

// Plus iff the deeper endpoint of the edge has even depth.
SignLabeling assign_signs(const RootedTree& t);

enum class Property { kAlternation, kMonotonicity };
std::string_view to_string(Property p);

struct VerificationFailure {
  Edge cotree_edge;
  std::vector<VertexId> path;
  // First path position i at which the property breaks: signs of edges
  // (v_i, v_i+1) and (v_i+1, v_i+2) agree, or v_i+1 is a valley or peak.
  std::size_t index = 0;
  Property property = Property::kAlternation;

  friend bool operator==(const VerificationFailure&,
                         const VerificationFailure&) = default;
};

struct VerificationReport {
  bool ok = true;
  std::vector<VerificationFailure> failures;
};

// Checks every cotree edge's fundamental path for sign alternation. Works on
// any tree and labeling, however produced. Throws TreeError if t does not
// span g or phi is not exactly a labeling of t's edges.
VerificationReport verify_alternating(const Graph& g, const RootedTree& t,
                                      const SignLabeling& phi);

// Same shape of report for depth monotonicity of the fundamental paths.
VerificationReport verify_monotone(const Graph& g, const RootedTree& t);

// monotone_spanning_tree + assign_signs, root 0 by default. A result that
// fails verify_alternating throws InternalVerificationError.
Solution solve(const Graph& g, std::optional<VertexId> root = std::nullopt);

}  // namespace altsign

#endif  // ALTSIGN_ALTSIGN_H_
