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

#include "altsign/report.h"

#include <charconv>

namespace altsign::report {
namespace {

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

VertexId vertex_from(const Json& j, std::size_t n, std::string_view what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      static_cast<std::uint64_t>(j.get<std::int64_t>()) >= n) {
    throw SolutionFormatError(std::string(what) + ": vertex " + j.dump() +
                              " is not in [0, " + std::to_string(n) + ")");
  }
  return j.get<VertexId>();
}

Edge edge_from_key(std::string_view key, std::size_t n) {
  const auto dash = key.find('-');
  if (dash == std::string_view::npos) {
    throw SolutionFormatError("sign key '" + std::string(key) + "' is not 'u-v'");
  }
  auto number = [&](std::string_view part) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || p != part.data() + part.size() || part.empty()) {
      throw SolutionFormatError("sign key '" + std::string(key) + "' is not 'u-v'");
    }
    if (v >= n) {
      throw SolutionFormatError("sign key '" + std::string(key) +
                                "' names a vertex outside [0, " +
                                std::to_string(n) + ")");
    }
    return static_cast<VertexId>(v);
  };
  const VertexId a = number(key.substr(0, dash));
  const VertexId b = number(key.substr(dash + 1));
  if (a == b) throw SolutionFormatError("sign key '" + std::string(key) + "' is a loop");
  return Edge::canonical(a, b);
}

}  // namespace

Json verification_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const VerificationFailure& f : r.failures) {
    failures.push_back({{"cotree_edge", edge_json(f.cotree_edge)},
                        {"path", f.path},
                        {"index", f.index},
                        {"property", std::string(to_string(f.property))}});
  }
  return {{"ok", r.ok}, {"failures", std::move(failures)}};
}

Json solve_document(const Graph& g, const Solution& s,
                    const VerificationReport& verification,
                    const SolveContext& ctx) {
  Json input = {{"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"root", s.tree.root()},
                {"format", std::string(format_name(ctx.format))}};
  if (ctx.parsed != nullptr) {
    input["vertex_labels"] = ctx.parsed->vertex_labels;
    input["normalization"] = {{"dropped_loops", ctx.parsed->log.dropped_loops},
                              {"merged_duplicates", ctx.parsed->log.merged_duplicates}};
    input["warnings"] = ctx.parsed->warnings;
  }

  Json tree_edges = Json::array();
  for (const Edge& e : s.tree.edges()) tree_edges.push_back(edge_json(e));

  Json signs = Json::object();
  for (const auto& [e, sign] : s.signs.assignment()) {
    signs[e.key()] = std::string(to_string(sign));
  }

  Json moves = Json::array();
  for (const SwapMove& m : s.trace.moves) {
    moves.push_back({{"add", edge_json(m.added)},
                     {"remove", edge_json(m.removed)},
                     {"delta", m.delta_psi}});
  }

  return {{"schema_version", kSchemaVersion},
          {"input", std::move(input)},
          {"tree_edges", std::move(tree_edges)},
          {"depths", std::vector<std::uint32_t>(s.tree.depths().begin(),
                                                s.tree.depths().end())},
          {"signs", std::move(signs)},
          {"trace",
           {{"initial_psi", s.trace.initial_psi},
            {"final_psi", s.trace.final_psi},
            {"cotree_scan_passes", s.trace.cotree_scan_passes},
            {"moves", std::move(moves)}}},
          {"verification", verification_json(verification)},
          {"timing", {{"ms", ctx.elapsed_ms}}}};
}

Json oracle_json(const oracle::OracleReport& r) {
  Json j = {{"graph_id", r.graph_id},
            {"root", r.root},
            {"tree_count", r.tree_count},
            {"kirchhoff_count", r.kirchhoff_count},
            {"max_psi", r.max_psi},
            {"max_psi_tree_count", r.max_psi_tree_count},
            {"local_max_tree_count", r.local_max_tree_count},
            {"global_max_conforms", r.global_max_conforms},
            {"all_local_maxima_conform", r.all_local_maxima_conform},
            {"solve_agrees", r.solve_agrees},
            {"count_agrees", r.count_agrees},
            {"passed", r.passed()}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json without_timing(Json doc) {
  doc.erase("timing");
  return doc;
}

LoadedSolution load_solution(const Graph& g, const Json& doc) {
  const std::size_t n = g.vertex_count();
  if (!doc.is_object()) throw SolutionFormatError("solution is not a JSON object");
  if (!doc.contains("tree_edges") || !doc["tree_edges"].is_array()) {
    throw SolutionFormatError("missing 'tree_edges' array");
  }
  if (!doc.contains("signs") || !doc["signs"].is_object()) {
    throw SolutionFormatError("missing 'signs' object");
  }
  VertexId root = 0;
  if (doc.contains("input") && doc["input"].is_object() && doc["input"].contains("root")) {
    root = vertex_from(doc["input"]["root"], n, "input.root");
  }

  std::vector<Edge> edges;
  for (const Json& pair : doc["tree_edges"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw SolutionFormatError("tree edge " + pair.dump() + " is not a [u, v] pair");
    }
    const VertexId a = vertex_from(pair[0], n, "tree_edges");
    const VertexId b = vertex_from(pair[1], n, "tree_edges");
    if (a == b) throw SolutionFormatError("tree edge " + pair.dump() + " is a loop");
    edges.push_back(Edge::canonical(a, b));
  }

  std::optional<RootedTree> tree;
  try {
    tree = RootedTree::from_edges(g, edges, root);
  } catch (const TreeError& e) {
    throw SolutionFormatError(std::string("invalid tree: ") + e.what());
  }

  SignLabeling signs;
  for (const auto& [key, value] : doc["signs"].items()) {
    const Edge e = edge_from_key(key, n);
    if (!tree->has_edge(e)) {
      throw SolutionFormatError("sign given for " + e.key() + ", which is not a tree edge");
    }
    std::optional<Sign> s = value.is_string() ? parse_sign(value.get<std::string>())
                                              : std::nullopt;
    if (!s) throw SolutionFormatError("sign for " + key + " must be \"+\" or \"-\"");
    signs.set(e, *s);
  }
  if (signs.size() != tree->edges().size()) {
    throw SolutionFormatError("signs cover " + std::to_string(signs.size()) + " of " +
                              std::to_string(tree->edges().size()) + " tree edges");
  }
  return {std::move(*tree), std::move(signs)};
}

}  // namespace altsign::report
