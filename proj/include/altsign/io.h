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

#ifndef ALTSIGN_IO_H_
#define ALTSIGN_IO_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "altsign/graph.h"

namespace altsign {

// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { kEdgeList, kDimacs };

GraphFormat parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat f);

struct ParseResult {
  Graph graph;
  NormalizationLog log;
  // Non-fatal findings, e.g. a DIMACS header edge count that disagrees with
  // the number of "e" lines.
  std::vector<std::string> warnings;
  // Label used in the source file for each dense vertex id.
  std::vector<std::int64_t> vertex_labels;
};

// Edge list: optional header line holding n, then one "u v" pair per line
// (0-indexed). Blank lines and lines starting with '#' are skipped. Without
// a header n = 1 + max index.
ParseResult parse_edge_list(std::istream& in);
ParseResult parse_edge_list(std::string_view text);

// DIMACS: "c" comments, one "p edge n m" header, "e u v" lines (1-indexed).
ParseResult parse_dimacs(std::istream& in);
ParseResult parse_dimacs(std::string_view text);

ParseResult parse_graph(std::istream& in, GraphFormat format);

// Header line with n, then the sorted edges, one "u v\n" per line.
std::string emit_edge_list(const Graph& g);

}  // namespace altsign

#endif  // ALTSIGN_IO_H_
