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

#ifndef ALTSIGN_SIGN_H_
#define ALTSIGN_SIGN_H_

#include <map>
#include <optional>
#include <string_view>

#include "altsign/graph.h"

namespace altsign {

enum class Sign { kPlus, kMinus };

constexpr Sign negate(Sign s) { return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus; }

// "+" or "-".
constexpr std::string_view to_string(Sign s) { return s == Sign::kPlus ? "+" : "-"; }

// Accepts "+" and "-"; anything else is nullopt.
std::optional<Sign> parse_sign(std::string_view text);

// Signs on tree edges, keyed by canonical edge.
class SignLabeling {
 public:
  SignLabeling() = default;
  explicit SignLabeling(std::map<Edge, Sign> assignment)
      : assignment_(std::move(assignment)) {}

  void set(const Edge& e, Sign s) { assignment_[e] = s; }
  std::optional<Sign> get(const Edge& e) const;
  // Flips the sign on e; returns false if e is unlabeled.
  bool flip(const Edge& e);

  std::size_t size() const { return assignment_.size(); }
  const std::map<Edge, Sign>& assignment() const { return assignment_; }

  friend bool operator==(const SignLabeling&, const SignLabeling&) = default;

 private:
  std::map<Edge, Sign> assignment_;
};

}  // namespace altsign

#endif  // ALTSIGN_SIGN_H_
