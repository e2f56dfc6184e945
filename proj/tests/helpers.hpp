// Copyright 2026 The coindgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COINDGAME_TESTS_HELPERS_HPP
#define COINDGAME_TESTS_HELPERS_HPP

#include <optional>

#include "doctest.h"

#include "coindgame/error.hpp"
#include "coindgame/system.hpp"

namespace testing {

// Runs fn and returns the ErrorCode it raised.
template <typename F>
std::optional<coindgame::ErrorCode> error_of(F&& fn) {
  try {
    fn();
  } catch (const coindgame::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline coindgame::PayoffMap ab(long a, long b) { return {{"A", a}, {"B", b}}; }

inline coindgame::RawSystem raw(coindgame::Kind kind, std::vector<coindgame::AgentId> agents = {"A", "B"}) {
  coindgame::RawSystem r;
  r.kind = kind;
  r.agents = std::move(agents);
  return r;
}

}  // namespace testing

#endif  // COINDGAME_TESTS_HELPERS_HPP
