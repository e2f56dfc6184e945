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

#ifndef COINDGAME_TYPES_HPP
#define COINDGAME_TYPES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace coindgame {

// Exact utilities: equilibrium checks compare payoffs with >=, and ties matter.
using Rational = boost::multiprecision::cpp_rational;

using AgentId = std::string;

// Down < Right is the fixed enumeration order everywhere in the library.
enum class Choice : std::uint8_t { Down = 0, Right = 1 };

inline constexpr Choice kChoices[] = {Choice::Down, Choice::Right};

inline Choice other(Choice c) {
  return c == Choice::Down ? Choice::Right : Choice::Down;
}

inline std::size_t slot(Choice c) { return static_cast<std::size_t>(c); }

inline std::string_view to_string(Choice c) {
  return c == Choice::Down ? "d" : "r";
}

using PayoffMap = std::map<AgentId, Rational>;

std::string to_string(const Rational& q);
std::string to_string(const PayoffMap& payoff);

// Strategy heads range over agents and choices; game and profile heads are
// always agents.
using Head = std::variant<AgentId, Choice>;

inline bool is_agent(const Head& h) { return std::holds_alternative<AgentId>(h); }
inline bool is_choice(const Head& h) { return std::holds_alternative<Choice>(h); }

std::string to_string(const Head& h);

enum class Kind { Game, Profile, Strategy };

std::string_view to_string(Kind k);

// Index of a node inside one validated system. Indices follow the sorted
// order of node names, so iterating by index is iterating by NodeId.
using NodeIndex = std::uint32_t;

}  // namespace coindgame

#endif  // COINDGAME_TYPES_HPP
