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

#include "altsign/cli.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "altsign/altsign.h"
#include "altsign/dot.h"
#include "altsign/generators.h"
#include "altsign/io.h"
#include "altsign/oracle.h"
#include "altsign/report.h"

namespace altsign::cli {
namespace {

using Clock = std::chrono::steady_clock;

// Input or output failure that maps straight to an exit code.
struct CommandError {
  int code;
  std::string message;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CommandError{kBadInput, "cannot open " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CommandError{kBadInput, "cannot write " + path};
  f << text;
}

ParseResult load_graph(const std::string& path, const std::string& format,
                       std::istream& in) {
  const std::string text = read_all(path, in);
  try {
    std::istringstream ss(text);
    return parse_graph(ss, parse_format_name(format));
  } catch (const ParseError& e) {
    throw CommandError{kBadInput, path + ": " + e.what()};
  } catch (const GraphError& e) {
    throw CommandError{kBadInput, path + ": " + e.what()};
  }
}

void require_connected(const Graph& g) {
  if (is_connected(g)) return;
  const auto comps = connected_components(g);
  std::ostringstream os;
  os << "graph is disconnected (" << comps.size()
     << " components); solve each component separately:";
  for (const auto& c : comps) {
    os << " {";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
  }
  throw CommandError{kDisconnected, os.str()};
}

VertexId require_root(const Graph& g, std::int64_t root) {
  if (root < 0 || !g.has_vertex(static_cast<std::size_t>(root))) {
    throw CommandError{kBadInput, "root " + std::to_string(root) + " is not a vertex"};
  }
  return static_cast<VertexId>(root);
}

// ---- solve ---------------------------------------------------------------

struct SolveFlags {
  std::string input = "-";
  std::int64_t root = 0;
  std::string format = "edgelist";
  std::string dot_path;
  std::string json_path;
};

int cmd_solve(const SolveFlags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  ParseResult parsed = load_graph(f.input, f.format, in);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  const Graph& g = parsed.graph;
  require_connected(g);
  const VertexId root = require_root(g, f.root);

  const auto start = Clock::now();
  Solution s = solve(g, root);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();

  VerificationReport check = verify_alternating(g, s.tree, s.signs);
  report::SolveContext ctx{parse_format_name(f.format), &parsed, ms};
  write_text(f.json_path, report::dump(report::solve_document(g, s, check, ctx)), out);
  if (!f.dot_path.empty()) write_text(f.dot_path, to_dot(g, &s.tree, &s.signs), out);
  return check.ok ? kOk : kInternalError;
}

// ---- verify --------------------------------------------------------------

struct VerifyFlags {
  std::string graph;
  std::string solution;
  std::string format = "edgelist";
};

int cmd_verify(const VerifyFlags& f, std::istream& in, std::ostream& out,
               std::ostream& err) {
  ParseResult parsed = load_graph(f.graph, f.format, in);
  const Graph& g = parsed.graph;
  report::Json doc;
  try {
    doc = report::Json::parse(read_all(f.solution, in));
  } catch (const report::Json::parse_error& e) {
    throw CommandError{kBadInput, f.solution + ": " + e.what()};
  }
  std::optional<report::LoadedSolution> sol;
  try {
    sol = report::load_solution(g, doc);
  } catch (const report::SolutionFormatError& e) {
    throw CommandError{kBadInput, f.solution + ": " + e.what()};
  }
  VerificationReport r = verify_alternating(g, sol->tree, sol->signs);
  for (const VerificationFailure& fail : r.failures) {
    err << "cotree edge " << fail.cotree_edge.key() << ": signs repeat at path index "
        << fail.index << " along";
    for (VertexId v : fail.path) err << ' ' << v;
    err << "\n";
  }
  out << report::dump(report::verification_json(r));
  return r.ok ? kOk : kFailure;
}

// ---- oracle --------------------------------------------------------------

struct OracleFlags {
  std::optional<std::size_t> n;
  std::string input;
  std::string format = "edgelist";
  std::int64_t root = 0;
  bool all_roots = false;
  std::string jsonl_path;
  std::string witness_path = "oracle_witness.txt";
  std::uint64_t tree_cap = oracle::kDefaultTreeCap;
};

int cmd_oracle(const OracleFlags& f, std::istream& in, std::ostream& out,
               std::ostream& err) {
  std::vector<Graph> graphs;
  if (f.n) {
    if (*f.n < 1 || *f.n > oracle::kMaxCorpusVertices) {
      throw CommandError{kBadInput, "--n must be in [1, " +
                                        std::to_string(oracle::kMaxCorpusVertices) + "]"};
    }
    graphs = oracle::enumerate_connected_graphs(*f.n);
  } else {
    ParseResult parsed = load_graph(f.input, f.format, in);
    require_connected(parsed.graph);
    graphs.push_back(std::move(parsed.graph));
  }

  std::ostringstream lines;
  std::ostringstream witnesses;
  std::size_t runs = 0;
  std::size_t passed = 0;
  bool falsified = false;
  bool mismatch = false;
  for (const Graph& g : graphs) {
    std::vector<VertexId> roots;
    if (f.all_roots) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) roots.push_back(v);
    } else {
      roots.push_back(require_root(g, f.root));
    }
    for (VertexId root : roots) {
      oracle::OracleReport r;
      try {
        r = oracle::exhaustive_check(g, root, f.tree_cap);
      } catch (const oracle::LimitError& e) {
        throw CommandError{kBadInput, e.what()};
      }
      ++runs;
      if (r.passed()) ++passed;
      if (r.falsified()) {
        falsified = true;
        witnesses << r.graph_id << " root " << r.root << "\n"
                  << r.witness.value_or("") << "\n\n";
      }
      if (!r.count_agrees) mismatch = true;
      lines << report::oracle_json(r).dump() << "\n";
    }
  }
  write_text(f.jsonl_path, lines.str(), out);
  err << "oracle: " << graphs.size() << " graphs, " << runs << " runs, " << passed
      << " passed\n";
  if (falsified) {
    write_text(f.witness_path, witnesses.str(), err);
    err << "falsification witness written to " << f.witness_path << "\n";
    return kFalsified;
  }
  return mismatch ? kInternalError : kOk;
}

// ---- gen -----------------------------------------------------------------

struct GenFlags {
  std::string family;
  std::vector<std::int64_t> params;
  std::vector<std::string> gnp;
  std::string out_path;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
  Graph g;
  try {
    if (!f.gnp.empty()) {
      if (!f.family.empty()) {
        throw CommandError{kBadInput, "give either a family or --gnp, not both"};
      }
      std::size_t n = std::stoull(f.gnp.at(0));
      double p = std::stod(f.gnp.at(1));
      std::uint64_t seed = std::stoull(f.gnp.at(2));
      g = gen_gnp(n, p, seed);
    } else {
      if (f.family.empty()) throw CommandError{kBadInput, "no family given"};
      g = gen_named(f.family, f.params);
    }
  } catch (const GraphError& e) {
    throw CommandError{kBadInput, e.what()};
  } catch (const std::logic_error& e) {  // stoull / stod
    throw CommandError{kBadInput, std::string("bad --gnp value: ") + e.what()};
  }
  write_text(f.out_path, emit_edge_list(g), out);
  return kOk;
}

// ---- bench ---------------------------------------------------------------

struct BenchFlags {
  std::string family = "gnp";
  std::string sizes = "10,20,50";
  std::size_t seeds = 1;
  double p = 0.3;
  std::string csv_path;
};

std::vector<std::int64_t> parse_sizes(const std::string& text) {
  std::vector<std::int64_t> out;
  try {
    const auto range = text.find("..");
    if (range != std::string::npos) {
      std::int64_t lo = std::stoll(text.substr(0, range));
      std::string rest = text.substr(range + 2);
      std::int64_t step = 1;
      if (auto colon = rest.find(':'); colon != std::string::npos) {
        step = std::stoll(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
      }
      std::int64_t hi = std::stoll(rest);
      if (step < 1 || hi < lo) throw std::invalid_argument(text);
      for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    }
  } catch (const std::logic_error&) {
    throw CommandError{kBadInput, "bad --sizes '" + text + "'"};
  }
  if (out.empty()) throw CommandError{kBadInput, "empty --sizes"};
  return out;
}

// Graph for one bench row. Named families are sized by one number:
// path/cycle/complete n, complete_bipartite floor(n/2) x ceil(n/2),
// grid n x n, hypercube dimension n.
Graph bench_graph(const std::string& family, std::int64_t size) {
  if (family == "complete_bipartite") return gen_named(family, {size / 2, size - size / 2});
  if (family == "grid") return gen_named(family, {size, size});
  return gen_named(family, {size});
}

int cmd_bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
  const std::vector<std::int64_t> sizes = parse_sizes(f.sizes);
  if (f.seeds < 1) throw CommandError{kBadInput, "--seeds must be >= 1"};
  const bool gnp = f.family == "gnp";
  if (!gnp) {
    const auto fams = named_families();
    if (std::find(fams.begin(), fams.end(), f.family) == fams.end()) {
      throw CommandError{kBadInput, "unknown family '" + f.family + "'"};
    }
  }
  if (gnp && !(f.p >= 0.0 && f.p <= 1.0)) throw CommandError{kBadInput, "--p must be in [0, 1]"};

  constexpr int kMaxDraws = 1000;
  std::ostringstream csv;
  csv << "family,n,m,seed,moves,initial_psi,final_psi,ms\n";
  std::size_t resampled = 0;
  std::size_t skipped = 0;
  for (std::int64_t size : sizes) {
    for (std::size_t s = 0; s < f.seeds; ++s) {
      Graph g;
      std::uint64_t seed = s;
      try {
        if (gnp) {
          if (size < 1) throw GraphError("gnp size must be >= 1");
          bool found = false;
          for (int draw = 0; draw < kMaxDraws && !found; ++draw) {
            // Redraws use a seed derived from the row seed.
            seed = s + static_cast<std::uint64_t>(draw) * 0x9E3779B97F4A7C15ULL;
            g = gen_gnp(static_cast<std::size_t>(size), f.p, seed);
            found = is_connected(g);
            if (!found) ++resampled;
          }
          if (!found) {
            ++skipped;
            continue;
          }
        } else {
          g = bench_graph(f.family, size);
        }
      } catch (const GraphError& e) {
        throw CommandError{kBadInput, e.what()};
      }

      const auto start = Clock::now();
      Solution sol = solve(g);
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
              .count();
      csv << f.family << ',' << g.vertex_count() << ',' << g.edge_count() << ','
          << seed << ',' << sol.trace.moves.size() << ',' << sol.trace.initial_psi << ','
          << sol.trace.final_psi << ',' << ms << '\n';
    }
  }
  write_text(f.csv_path, csv.str(), out);
  if (gnp) {
    err << "bench: " << resampled << " disconnected draws resampled, " << skipped
        << " rows skipped\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spanning trees with alternating sign labelings"};
  app.name("altsign");
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Build a tree and alternating labeling");
  solve_cmd->add_option("input", solve_flags.input, "Graph file, '-' for stdin");
  solve_cmd->add_option("--root", solve_flags.root, "Root vertex");
  solve_cmd->add_option("--format", solve_flags.format, "edgelist or dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  solve_cmd->add_option("--dot", solve_flags.dot_path, "Also write Graphviz DOT here");
  solve_cmd->add_option("--json", solve_flags.json_path, "Write the report here");

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Check a labeling for alternation");
  verify_cmd->add_option("graph", verify_flags.graph, "Graph file")->required();
  verify_cmd->add_option("solution", verify_flags.solution, "Solution JSON")->required();
  verify_cmd->add_option("--format", verify_flags.format, "edgelist or dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));

  OracleFlags oracle_flags;
  std::size_t oracle_n = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive checks on small graphs");
  auto* n_opt = oracle_cmd->add_option("--n", oracle_n, "All connected graphs on N vertices");
  auto* input_opt = oracle_cmd->add_option("--input", oracle_flags.input, "Single graph file");
  n_opt->excludes(input_opt);
  oracle_cmd->add_option("--format", oracle_flags.format, "edgelist or dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  oracle_cmd->add_option("--root", oracle_flags.root, "Root vertex");
  oracle_cmd->add_flag("--all-roots", oracle_flags.all_roots, "Check every root");
  oracle_cmd->add_option("--jsonl", oracle_flags.jsonl_path, "Write JSON lines here");
  oracle_cmd->add_option("--witness", oracle_flags.witness_path,
                         "Where to dump counterexamples");
  oracle_cmd->add_option("--tree-cap", oracle_flags.tree_cap,
                         "Give up past this many spanning trees");

  GenFlags gen_flags;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("family", gen_flags.family,
                      "path|cycle|complete|complete_bipartite|grid|hypercube");
  gen_cmd->add_option("params", gen_flags.params, "Family parameters");
  gen_cmd->add_option("--gnp", gen_flags.gnp, "G(n, p) with n p seed")->expected(3);
  gen_cmd->add_option("--out", gen_flags.out_path, "Output file");

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver over a family");
  bench_cmd->add_option("--family", bench_flags.family, "gnp or a named family");
  bench_cmd->add_option("--sizes", bench_flags.sizes, "a,b,c or lo..hi[:step]");
  bench_cmd->add_option("--seeds", bench_flags.seeds, "Rows per size");
  bench_cmd->add_option("--p", bench_flags.p, "Edge probability for gnp");
  bench_cmd->add_option("--csv", bench_flags.csv_path, "Write CSV here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "altsign: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_flags, in, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_flags, in, out, err);
    if (oracle_cmd->parsed()) {
      if (n_opt->count() > 0) oracle_flags.n = oracle_n;
      if (!oracle_flags.n && oracle_flags.input.empty()) {
        throw CommandError{kBadInput, "oracle needs --n or --input"};
      }
      return cmd_oracle(oracle_flags, in, out, err);
    }
    if (gen_cmd->parsed()) return cmd_gen(gen_flags, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_flags, out, err);
  } catch (const CommandError& e) {
    err << "altsign: " << e.message << "\n";
    return e.code;
  } catch (const DisconnectedGraphError& e) {
    err << "altsign: " << e.what() << "\n";
    return kDisconnected;
  } catch (const FalsificationError& e) {
    err << "altsign: FALSIFICATION: " << e.what() << "\n" << e.dump();
    return kFalsified;
  } catch (const InternalVerificationError& e) {
    err << "altsign: internal verification failure: " << e.what() << "\n";
    return kInternalError;
  }
  return kBadInput;
}

}  // namespace altsign::cli
