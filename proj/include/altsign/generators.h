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

#ifndef ALTSIGN_GENERATORS_H_
#define ALTSIGN_GENERATORS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "altsign/graph.h"

namespace altsign {

// Standard labeled graph families. Labelings:
//   path n               0-1-...-(n-1), n >= 1
//   cycle n              path plus (n-1)-0, n >= 3
//   complete n           all pairs, n >= 1
//   complete_bipartite a b
//                        parts {0..a-1} and {a..a+b-1}, a, b >= 1
//   grid a b             a rows by b columns, vertex r*b + c, a, b >= 1
//   hypercube d          vertices 0..2^d-1, edges between ids differing in
//                        one bit, 0 <= d <= 20
// Throws GraphError on an unknown family or invalid parameters.
Graph gen_named(std::string_view family, std::span<const std::int64_t> params);
Graph gen_named(std::string_view family, std::initializer_list<std::int64_t> params);

// Names accepted by gen_named.
std::span<const std::string_view> named_families();

// G(n, p): every unordered pair {i, j}, visited in lexicographic order, is
// kept iff the next std::mt19937_64 draw, scaled to [0, 1) by its top 53
// bits, is below p. Both the engine and the scaling are fixed by the C++
// standard, so output is identical on every platform.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace altsign

#endif  // ALTSIGN_GENERATORS_H_
