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

#include "altsign/altsign.h"

#include <algorithm>
#include <sstream>

#include "altsign/io.h"

namespace altsign {
namespace {

std::string instance_dump(const Graph& g, VertexId root,
                          std::span<const VertexId> parent, const Edge& e,
                          std::span<const VertexId> path,
                          std::span<const std::int64_t> deltas) {
  std::ostringstream os;
  os << "graph (edge list):\n" << emit_edge_list(g);
  os << "root: " << root << "\n";
  os << "tree edges:";
  for (VertexId v = 0; v < parent.size(); ++v) {
    if (parent[v] != kNoVertex) os << ' ' << Edge::canonical(v, parent[v]).key();
  }
  os << "\ncotree edge: " << e.key() << "\npath:";
  for (VertexId v : path) os << ' ' << v;
  os << "\ncandidate deltas:";
  for (std::int64_t d : deltas) os << ' ' << d;
  os << '\n';
  return os.str();
}

// Index of the best candidate: largest delta, lowest index on ties.
std::size_t pick_best(std::span<const std::int64_t> deltas) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < deltas.size(); ++j) {
    if (deltas[j] > deltas[best]) best = j;
  }
  return best;
}

// Mutable tree used inside the local search. After each swap the children
// index, Euler-tour intervals, subtree sizes and subtree depth sums are
// rebuilt from the parent array in O(n); that makes the monotonicity test
// for a cotree edge O(1) and the gain of every removal candidate on a
// fundamental path O(1) each.
class WorkingTree {
 public:
  explicit WorkingTree(const RootedTree& start)
      : root_(start.root()),
        parent_(start.parents().begin(), start.parents().end()) {
    rebuild();
  }

  std::int64_t psi() const { return subtree_depth_sum_[root_]; }

  bool is_tree_edge(const Edge& e) const {
    return parent_[e.u] == e.v || parent_[e.v] == e.u;
  }

  // A tree path climbs to the lowest common ancestor and descends, so it is
  // monotone exactly when one endpoint is an ancestor of the other.
  bool is_monotone(const Edge& e) const {
    return is_ancestor(e.u, e.v) || is_ancestor(e.v, e.u);
  }

  std::vector<VertexId> path(VertexId a, VertexId b) const {
    std::vector<VertexId> left{a};
    std::vector<VertexId> right{b};
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        a = parent_[a];
        left.push_back(a);
      } else {
        b = parent_[b];
        right.push_back(b);
      }
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
  }

  // Gain of removing path edge (p[j], p[j+1]) for every j, for cotree edge
  // (p.front(), p.back()).
  std::vector<std::int64_t> removal_gains(std::span<const VertexId> p) const {
    const std::size_t len = p.size() - 1;
    std::size_t top = 0;
    for (std::size_t i = 1; i <= len; ++i) {
      if (depth_[p[i]] < depth_[p[top]]) top = i;
    }
    std::vector<std::int64_t> gains(len, 0);
    // Edges below the top on the front side detach a subtree holding
    // p.front(); walking up from it, subtrees nest.
    climb_gains(p.front(), p.back(), top, [&](std::size_t k, std::int64_t gain) {
      gains[k] = gain;
    });
    climb_gains(p.back(), p.front(), len - top,
                [&](std::size_t k, std::int64_t gain) { gains[len - 1 - k] = gain; });
    return gains;
  }

  void apply(const SwapMove& move, VertexId cut, VertexId inner, VertexId outer) {
    // Reverse the parent links from inner up to cut, then hang inner on outer.
    VertexId prev = outer;
    VertexId cur = inner;
    while (true) {
      VertexId next = parent_[cur];
      parent_[cur] = prev;
      if (cur == cut) break;
      prev = cur;
      cur = next;
    }
    const std::int64_t before = psi();
    rebuild();
    if (psi() - before != move.delta_psi) {
      throw std::logic_error("incremental psi gain disagrees with recomputation");
    }
  }

  VertexId parent(VertexId v) const { return parent_[v]; }
  std::uint32_t depth(VertexId v) const { return depth_[v]; }
  bool is_ancestor(VertexId a, VertexId b) const {
    return enter_[a] <= enter_[b] && exit_[b] <= exit_[a];
  }
  VertexId root() const { return root_; }
  std::span<const VertexId> parents() const { return parent_; }

 private:
  // Climbs from `start` through `steps` nested subtrees; for step k reports
  // the psi gain of detaching the subtree of the k-th vertex on the way up
  // and re-hanging it, re-rooted at `start`, below `anchor`.
  template <typename Sink>
  void climb_gains(VertexId start, VertexId anchor, std::size_t steps,
                   Sink&& sink) const {
    const std::int64_t attach = static_cast<std::int64_t>(depth_[anchor]) + 1;
    std::int64_t count = 0;       // |S(x_k)|
    std::int64_t depth_sum = 0;   // sum of old depths over S(x_k)
    std::int64_t dist_sum = 0;    // sum of dist(start, w) over S(x_k)
    VertexId x = start;
    for (std::size_t k = 0; k < steps; ++k) {
      const std::int64_t new_count = subtree_size_[x];
      const std::int64_t new_depth_sum = subtree_depth_sum_[x];
      const std::int64_t offset =
          static_cast<std::int64_t>(k) - static_cast<std::int64_t>(depth_[x]);
      dist_sum += (new_count - count) * offset + (new_depth_sum - depth_sum);
      count = new_count;
      depth_sum = new_depth_sum;
      sink(k, count * attach + dist_sum - depth_sum);
      x = parent_[x];
    }
  }

  void rebuild() {
    const std::size_t n = parent_.size();
    child_offset_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
      if (v != root_) ++child_offset_[parent_[v] + 1];
    }
    for (std::size_t v = 0; v < n; ++v) child_offset_[v + 1] += child_offset_[v];
    children_.assign(n == 0 ? 0 : n - 1, 0);
    std::vector<std::size_t> fill(child_offset_.begin(), child_offset_.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
      if (v != root_) children_[fill[parent_[v]]++] = v;
    }

    depth_.assign(n, 0);
    enter_.assign(n, 0);
    exit_.assign(n, 0);
    subtree_size_.assign(n, 1);
    subtree_depth_sum_.assign(n, 0);
    // Preorder; a subtree occupies [enter_, exit_) of the order.
    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<VertexId> stack{root_};
    std::uint32_t clock = 0;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      enter_[x] = clock++;
      order.push_back(x);
      for (std::size_t i = child_offset_[x + 1]; i > child_offset_[x]; --i) {
        VertexId y = children_[i - 1];
        depth_[y] = depth_[x] + 1;
        stack.push_back(y);
      }
    }
    if (order.size() != n) throw std::logic_error("working tree lost a vertex");
    for (std::size_t i = n; i-- > 0;) {
      VertexId x = order[i];
      subtree_depth_sum_[x] += depth_[x];
      if (x != root_) {
        subtree_size_[parent_[x]] += subtree_size_[x];
        subtree_depth_sum_[parent_[x]] += subtree_depth_sum_[x];
      }
      exit_[x] = enter_[x] + static_cast<std::uint32_t>(subtree_size_[x]);
    }
  }

  VertexId root_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_offset_;
  std::vector<VertexId> children_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> enter_;
  std::vector<std::uint32_t> exit_;
  std::vector<std::int64_t> subtree_size_;
  std::vector<std::int64_t> subtree_depth_sum_;
};

// Sign of tree edge (a, b), stored on its lower endpoint.
Sign edge_sign(const RootedTree& t, std::span<const Sign> up, VertexId a, VertexId b) {
  return t.parents()[a] == b ? up[a] : up[b];
}

void check_spans(const Graph& g, const RootedTree& t) {
  if (t.vertex_count() != g.vertex_count()) {
    throw TreeError("tree and graph have different vertex counts");
  }
  for (const Edge& e : t.edges()) {
    if (!g.has_edge(e)) throw TreeError("tree edge " + e.key() + " is not in the graph");
  }
}

}  // namespace

FalsificationError::FalsificationError(const std::string& what, std::string dump)
    : std::logic_error(what), dump_(std::move(dump)) {}

std::string_view to_string(Property p) {
  return p == Property::kAlternation ? "alternation" : "monotonicity";
}

SwapMove find_improving_swap(const Graph& g, const RootedTree& t, const Edge& e) {
  const std::vector<VertexId> path = fundamental_path(g, t, e);
  if (monotone_report(t, path).monotone) {
    throw TreeError("fundamental path of " + e.key() + " is already monotone");
  }
  std::vector<std::int64_t> deltas;
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    deltas.push_back(delta_potential(g, t, e, Edge::canonical(path[j], path[j + 1])));
  }
  const std::size_t best = pick_best(deltas);
  if (deltas[best] < 1) {
    throw FalsificationError(
        "no improving swap for cotree edge " + e.key(),
        instance_dump(g, t.root(), t.parents(), e, path, deltas));
  }
  return {e, Edge::canonical(path[best], path[best + 1]), deltas[best]};
}

MonotoneResult monotone_spanning_tree(const Graph& g, VertexId root) {
  RootedTree start = bfs_tree(g, root);
  SolveTrace trace;
  trace.initial_psi = potential(start);

  WorkingTree work(start);
  bool clean = false;
  while (!clean) {
    ++trace.cotree_scan_passes;
    clean = true;
    for (const Edge& e : g.edges()) {
      if (work.is_tree_edge(e) || work.is_monotone(e)) continue;
      const std::vector<VertexId> path = work.path(e.u, e.v);
      const std::vector<std::int64_t> gains = work.removal_gains(path);
      const std::size_t best = pick_best(gains);
      if (gains[best] < 1) {
        throw FalsificationError(
            "no improving swap for cotree edge " + e.key(),
            instance_dump(g, root, work.parents(), e, path, gains));
      }
      const VertexId a = path[best];
      const VertexId b = path[best + 1];
      const SwapMove move{e, Edge::canonical(a, b), gains[best]};
      // The lower endpoint of the removed edge roots the detached side.
      const VertexId cut = work.parent(a) == b ? a : b;
      const bool front_side = work.is_ancestor(cut, e.u);
      const VertexId inner = front_side ? e.u : e.v;
      const VertexId outer = front_side ? e.v : e.u;
      work.apply(move, cut, inner, outer);
      trace.moves.push_back(move);
      clean = false;
      break;
    }
  }
  trace.final_psi = work.psi();
  RootedTree tree = RootedTree::from_parents(
      g, root, std::vector<VertexId>(work.parents().begin(), work.parents().end()));
  return {std::move(tree), std::move(trace)};
}

SignLabeling assign_signs(const RootedTree& t) {
  SignLabeling phi;
  for (const Edge& e : t.edges()) {
    const std::uint32_t m = std::max(t.depth(e.u), t.depth(e.v));
    phi.set(e, m % 2 == 0 ? Sign::kPlus : Sign::kMinus);
  }
  return phi;
}

VerificationReport verify_alternating(const Graph& g, const RootedTree& t,
                                      const SignLabeling& phi) {
  check_spans(g, t);
  if (phi.size() != t.edges().size()) {
    throw TreeError("labeling has " + std::to_string(phi.size()) +
                    " entries for " + std::to_string(t.edges().size()) +
                    " tree edges");
  }
  std::vector<Sign> up(t.vertex_count(), Sign::kPlus);
  for (const Edge& e : t.edges()) {
    auto s = phi.get(e);
    if (!s) throw TreeError("tree edge " + e.key() + " has no sign");
    up[t.lower_endpoint(e)] = *s;
  }

  VerificationReport report;
  for (const Edge& e : g.edges()) {
    if (t.has_edge(e)) continue;
    std::vector<VertexId> path = tree_path(t, e.u, e.v);
    for (std::size_t i = 0; i + 2 < path.size(); ++i) {
      if (edge_sign(t, up, path[i], path[i + 1]) ==
          edge_sign(t, up, path[i + 1], path[i + 2])) {
        report.failures.push_back({e, std::move(path), i, Property::kAlternation});
        break;
      }
    }
  }
  report.ok = report.failures.empty();
  return report;
}

VerificationReport verify_monotone(const Graph& g, const RootedTree& t) {
  check_spans(g, t);
  VerificationReport report;
  for (const Edge& e : g.edges()) {
    if (t.has_edge(e)) continue;
    std::vector<VertexId> path = tree_path(t, e.u, e.v);
    MonotoneReport m = monotone_report(t, path);
    if (m.monotone) continue;
    std::size_t first = std::min(
        m.valley_indices.empty() ? path.size() : m.valley_indices.front(),
        m.peak_indices.empty() ? path.size() : m.peak_indices.front());
    report.failures.push_back({e, std::move(path), first - 1, Property::kMonotonicity});
  }
  report.ok = report.failures.empty();
  return report;
}

Solution solve(const Graph& g, std::optional<VertexId> root) {
  const VertexId r = root.value_or(0);
  if (!g.has_vertex(r)) {
    throw GraphError("root " + std::to_string(r) + " out of range");
  }
  if (!is_connected(g)) throw DisconnectedGraphError(connected_components(g).size());
  MonotoneResult mono = monotone_spanning_tree(g, r);
  SignLabeling signs = assign_signs(mono.tree);
  VerificationReport check = verify_alternating(g, mono.tree, signs);
  if (!check.ok) {
    throw InternalVerificationError(
        "solver output failed alternation check at cotree edge " +
        check.failures.front().cotree_edge.key());
  }
  return {std::move(mono.tree), std::move(signs), std::move(mono.trace)};
}

}  // namespace altsign
