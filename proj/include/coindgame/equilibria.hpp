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

#ifndef COINDGAME_EQUILIBRIA_HPP
#define COINDGAME_EQUILIBRIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "coindgame/fixpoint.hpp"

namespace coindgame {

// The partial payoff of a profile: defined when the chosen-move path reaches
// a leaf, otherwise the loop that path falls into.
struct PayoffResult {
  std::optional<PayoffMap> value;
  std::vector<NodeIndex> cycle;  // non-empty exactly when undefined

  bool defined() const { return value.has_value(); }
  const PayoffMap& map() const { return value.value(); }

  friend bool operator==(const PayoffResult&, const PayoffResult&) = default;
};

// One result per node, memoized along chosen-move paths.
std::vector<PayoffResult> payoffs(const EquationSystem& profile);
PayoffResult payoff(const EquationSystem& profile, NodeIndex node);

// PE: strongly convergent, and the chosen move is at least as good for the
// owner as the other one.
PredicateValuation local_pe(const EquationSystem& profile);
bool local_pe(const EquationSystem& profile, NodeIndex node);

// SPE: PE holds always.
PredicateValuation spe(const EquationSystem& profile);
bool is_spe(const EquationSystem& profile, NodeIndex node);

// Convertibility for `agent`: the right profile is obtained from the left one
// by changing the agent's own choices at finitely many positions. Decided as
// the least fixed point of the three derivation rules over reachable pairs.
bool convertible(const EquationSystem& lhs, NodeIndex l, const EquationSystem& rhs, NodeIndex r,
                 const AgentId& agent);

struct Move {
  std::string node;
  Choice choice;
  friend bool operator==(const Move&, const Move&) = default;
};

struct DeviationWitness {
  AgentId agent;
  EquationSystem deviant;   // convertible from the original for `agent`
  std::vector<Move> path;   // every move along the improving play
  std::vector<Move> flips;  // the moves of `agent` that differ from the original
  Rational before;
  Rational after;           // strictly greater than `before`
};

struct NashResult {
  bool holds = true;
  std::optional<DeviationWitness> witness;  // set when !holds
};

// No agent can improve her payoff by a convertible deviation with a defined
// payoff. Deviations whose payoff is undefined are ignored. Throws
// UndefinedRootPayoff when the payoff at `node` is undefined.
NashResult nash(const EquationSystem& profile, NodeIndex node);

// --- finite trees -----------------------------------------------------------

// Payoff of a finite, cut-free profile tree.
PayoffMap tree_payoff(const FiniteTree& profile);

// Backward induction check on a finite profile tree. Throws NotFinite on cuts.
bool is_bi(const FiniteTree& profile);

// Every backward-induction labeling of a finite game tree, Down before Right
// at every tie. Throws NotFinite on cuts.
std::vector<FiniteTree> enumerate_bi(const FiniteTree& game);

}  // namespace coindgame

#endif  // COINDGAME_EQUILIBRIA_HPP
