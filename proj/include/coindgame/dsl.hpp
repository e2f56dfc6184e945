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

#ifndef COINDGAME_DSL_HPP
#define COINDGAME_DSL_HPP

// Text format for equation systems.
//
//   file  := decl+
//   decl  := "agents" IDENT+
//          | ("game" | "profile" | "strategy") IDENT ["of" IDENT] "=" body
//   body  := eq ("," eq)*
//   eq    := IDENT ":" node
//   node  := "leaf" "{" IDENT ":" RAT ("," IDENT ":" RAT)* "}"
//          | head "(" "d" ["!"] "->" IDENT "," "r" ["!"] "->" IDENT ")"
//   RAT   := integer | integer "/" positive-integer
//
// The first equation of a body is its root. Profiles mark the chosen child
// of every branch with "!"; strategies use the head "move" for a choice and
// mark the chosen child; games carry no marker. "#" starts a line comment.
//
// "of" names the agent a strategy belongs to, or the game declaration a
// profile is played on (its underlying game must be bisimilar to it).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coindgame/system.hpp"

namespace coindgame {

struct Declaration {
  std::string name;
  EquationSystem system;
  std::optional<std::string> of;
  int line = 0;
};

struct SourceFile {
  std::vector<AgentId> agents;
  std::vector<Declaration> declarations;

  // Looks a declaration up by name, optionally restricted to one kind.
  const Declaration* find(std::string_view name, std::optional<Kind> kind = std::nullopt) const;
  // As find, but throws UnresolvedReference (or KindMismatch when the name
  // exists with another kind).
  const Declaration& get(std::string_view name, std::optional<Kind> kind = std::nullopt) const;
};

// Throws ParseError on any malformed or invalid input; validation failures
// are reported at the position of the offending equation or reference.
SourceFile parse(std::string_view source);

// Deterministic text: root equation first, then the rest in NodeId order.
std::string render(const EquationSystem& sys, const std::string& name,
                   const std::optional<std::string>& of = std::nullopt);
std::string render(const SourceFile& file);

// Identifier syntax shared by parser and renderer.
bool is_identifier(std::string_view s);

}  // namespace coindgame

#endif  // COINDGAME_DSL_HPP
