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

#include "altsign/generators.h"

#include <array>
#include <random>
#include <string>

namespace altsign {
namespace {

constexpr std::array<std::string_view, 6> kFamilies = {
    "path", "cycle", "complete", "complete_bipartite", "grid", "hypercube"};

// Graphs past this size are not something the named families are meant for.
constexpr std::int64_t kMaxNamedVertices = std::int64_t{1} << 20;

void expect_arity(std::string_view family, std::span<const std::int64_t> params,
                  std::size_t arity) {
  if (params.size() != arity) {
    throw GraphError(std::string(family) + " takes " + std::to_string(arity) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
}

std::int64_t expect_range(std::string_view family, std::int64_t value,
                          std::int64_t lo, std::int64_t hi) {
  if (value < lo || value > hi) {
    throw GraphError(std::string(family) + ": parameter " + std::to_string(value) +
                     " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "]");
  }
  return value;
}

Edge edge(std::int64_t a, std::int64_t b) {
  return Edge::canonical(static_cast<VertexId>(a), static_cast<VertexId>(b));
}

}  // namespace

std::span<const std::string_view> named_families() { return kFamilies; }

Graph gen_named(std::string_view family, std::span<const std::int64_t> params) {
  std::vector<Edge> edges;
  std::int64_t n = 0;
  if (family == "path") {
    expect_arity(family, params, 1);
    n = expect_range(family, params[0], 1, kMaxNamedVertices);
    for (std::int64_t i = 0; i + 1 < n; ++i) edges.push_back(edge(i, i + 1));
  } else if (family == "cycle") {
    expect_arity(family, params, 1);
    n = expect_range(family, params[0], 3, kMaxNamedVertices);
    for (std::int64_t i = 0; i < n; ++i) edges.push_back(edge(i, (i + 1) % n));
  } else if (family == "complete") {
    expect_arity(family, params, 1);
    n = expect_range(family, params[0], 1, 1 << 14);
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) edges.push_back(edge(i, j));
    }
  } else if (family == "complete_bipartite") {
    expect_arity(family, params, 2);
    std::int64_t a = expect_range(family, params[0], 1, 1 << 14);
    std::int64_t b = expect_range(family, params[1], 1, 1 << 14);
    n = a + b;
    for (std::int64_t i = 0; i < a; ++i) {
      for (std::int64_t j = a; j < n; ++j) edges.push_back(edge(i, j));
    }
  } else if (family == "grid") {
    expect_arity(family, params, 2);
    std::int64_t rows = expect_range(family, params[0], 1, 1 << 10);
    std::int64_t cols = expect_range(family, params[1], 1, 1 << 10);
    n = rows * cols;
    for (std::int64_t r = 0; r < rows; ++r) {
      for (std::int64_t c = 0; c < cols; ++c) {
        std::int64_t v = r * cols + c;
        if (c + 1 < cols) edges.push_back(edge(v, v + 1));
        if (r + 1 < rows) edges.push_back(edge(v, v + cols));
      }
    }
  } else if (family == "hypercube") {
    expect_arity(family, params, 1);
    std::int64_t d = expect_range(family, params[0], 0, 20);
    n = std::int64_t{1} << d;
    for (std::int64_t v = 0; v < n; ++v) {
      for (std::int64_t bit = 0; bit < d; ++bit) {
        std::int64_t w = v ^ (std::int64_t{1} << bit);
        if (v < w) edges.push_back(edge(v, w));
      }
    }
  } else {
    throw GraphError("unknown graph family '" + std::string(family) + "'");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph gen_named(std::string_view family, std::initializer_list<std::int64_t> params) {
  return gen_named(family, std::span<const std::int64_t>(params.begin(), params.size()));
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw GraphError("gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("gnp: p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace altsign
