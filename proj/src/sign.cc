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

#include "altsign/sign.h"

namespace altsign {

std::optional<Sign> parse_sign(std::string_view text) {
  if (text == "+") return Sign::kPlus;
  if (text == "-") return Sign::kMinus;
  return std::nullopt;
}

std::optional<Sign> SignLabeling::get(const Edge& e) const {
  auto it = assignment_.find(e);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

bool SignLabeling::flip(const Edge& e) {
  auto it = assignment_.find(e);
  if (it == assignment_.end()) return false;
  it->second = negate(it->second);
  return true;
}

}  // namespace altsign
