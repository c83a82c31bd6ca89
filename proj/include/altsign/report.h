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

#ifndef ALTSIGN_REPORT_H_
#define ALTSIGN_REPORT_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "altsign/altsign.h"
#include "altsign/io.h"
#include "altsign/oracle.h"
#include "json.hpp"

// JSON documents written and read by the command-line tool. Objects use
// sorted keys and edge lists are sorted, so identical inputs serialize
// byte-for-byte identically (timing aside).
namespace altsign::report {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// A solution document that cannot be turned back into a tree and labeling
// of the given graph.
class SolutionFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveContext {
  GraphFormat format = GraphFormat::kEdgeList;
  const ParseResult* parsed = nullptr;  // labels, normalization, warnings
  std::int64_t elapsed_ms = 0;
};

// Schema (version 1):
//   schema_version  1
//   input           {n, m, root, format, vertex_labels, normalization, warnings}
//   tree_edges      [[u, v], ...] sorted, u < v
//   depths          [d_0, ..., d_{n-1}]
//   signs           {"u-v": "+" | "-"}
//   trace           {initial_psi, final_psi, cotree_scan_passes,
//                    moves: [{add: [u, v], remove: [u, v], delta}]}
//   verification    {ok, failures: [{cotree_edge, path, index, property}]}
//   timing          {ms}
Json solve_document(const Graph& g, const Solution& s,
                    const VerificationReport& verification,
                    const SolveContext& ctx);

Json verification_json(const VerificationReport& r);

// One JSON-lines record per oracle run.
Json oracle_json(const oracle::OracleReport& r);

// Two-space indented text plus trailing newline.
std::string dump(const Json& doc);

// Copy of a solve document without the timing field.
Json without_timing(Json doc);

struct LoadedSolution {
  RootedTree tree;
  SignLabeling signs;
};

// Reads tree_edges, input.root and signs back. Throws SolutionFormatError.
LoadedSolution load_solution(const Graph& g, const Json& doc);

}  // namespace altsign::report

#endif  // ALTSIGN_REPORT_H_
