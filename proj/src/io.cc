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

#include "altsign/io.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

namespace altsign {
namespace {

constexpr std::uint64_t kMaxVertices = std::numeric_limits<VertexId>::max();

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> parse_uint(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::uint64_t expect_uint(std::string_view tok, std::size_t line,
                          std::string_view what) {
  auto v = parse_uint(tok);
  if (!v) {
    throw ParseError(line, "expected non-negative integer " + std::string(what) +
                               ", got '" + std::string(tok) + "'");
  }
  return *v;
}

ParseResult build(std::size_t n,
                  const std::vector<std::pair<VertexId, VertexId>>& pairs,
                  std::int64_t label_offset) {
  ParseResult r;
  r.graph = Graph::from_pairs(n, pairs, &r.log);
  r.vertex_labels.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    r.vertex_labels[v] = static_cast<std::int64_t>(v) + label_offset;
  }
  return r;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dimacs") return GraphFormat::kDimacs;
  throw ParseError(0, "unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) {
  return f == GraphFormat::kEdgeList ? "edgelist" : "dimacs";
}

ParseResult parse_edge_list(std::istream& in) {
  std::optional<std::uint64_t> declared_n;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  bool seen_content = false;
  std::uint64_t max_index = 0;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip_cr(raw);
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!seen_content && toks.size() == 1) {
      declared_n = expect_uint(toks[0], lineno, "vertex count");
      if (*declared_n == 0 || *declared_n > kMaxVertices) {
        throw ParseError(lineno, "vertex count must be in [1, 2^32)");
      }
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (toks.size() != 2) {
      throw ParseError(lineno, "expected two vertex indices, got " +
                                   std::to_string(toks.size()) + " fields");
    }
    std::uint64_t a = expect_uint(toks[0], lineno, "vertex index");
    std::uint64_t b = expect_uint(toks[1], lineno, "vertex index");
    std::uint64_t hi = std::max(a, b);
    if (declared_n && hi >= *declared_n) {
      throw ParseError(lineno, "vertex index " + std::to_string(hi) +
                                   " out of range for n=" +
                                   std::to_string(*declared_n));
    }
    if (hi >= kMaxVertices) {
      throw ParseError(lineno, "vertex index " + std::to_string(hi) + " too large");
    }
    max_index = std::max(max_index, hi);
    pairs.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  if (!seen_content) throw ParseError(0, "empty input");

  std::size_t n = declared_n ? static_cast<std::size_t>(*declared_n)
                             : static_cast<std::size_t>(max_index + 1);
  return build(n, pairs, 0);
}

ParseResult parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

ParseResult parse_dimacs(std::istream& in) {
  std::optional<std::uint64_t> n;
  std::uint64_t declared_m = 0;
  std::size_t e_lines = 0;
  std::vector<std::pair<VertexId, VertexId>> pairs;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip_cr(raw);
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;

    if (toks[0] == "p") {
      if (n) throw ParseError(lineno, "duplicate 'p' header");
      if (toks.size() != 4 || toks[1] != "edge") {
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      }
      n = expect_uint(toks[2], lineno, "vertex count");
      declared_m = expect_uint(toks[3], lineno, "edge count");
      if (*n == 0 || *n > kMaxVertices) {
        throw ParseError(lineno, "vertex count must be in [1, 2^32)");
      }
    } else if (toks[0] == "e") {
      if (!n) throw ParseError(lineno, "missing 'p edge' header before edges");
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      std::uint64_t a = expect_uint(toks[1], lineno, "vertex label");
      std::uint64_t b = expect_uint(toks[2], lineno, "vertex label");
      for (std::uint64_t x : {a, b}) {
        if (x == 0 || x > *n) {
          throw ParseError(lineno, "vertex label " + std::to_string(x) +
                                       " out of range [1, " + std::to_string(*n) +
                                       "]");
        }
      }
      pairs.emplace_back(static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1));
      ++e_lines;
    } else {
      throw ParseError(lineno, "unknown descriptor '" + std::string(toks[0]) + "'");
    }
  }
  if (!n) throw ParseError(0, "missing 'p edge' header");

  ParseResult r = build(static_cast<std::size_t>(*n), pairs, 1);
  if (declared_m != e_lines) {
    r.warnings.push_back("header declares " + std::to_string(declared_m) +
                         " edges but " + std::to_string(e_lines) +
                         " 'e' lines were read");
  }
  return r;
}

ParseResult parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

ParseResult parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? parse_edge_list(in) : parse_dimacs(in);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace altsign
