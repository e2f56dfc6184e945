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

#ifndef COINDGAME_PREDICATES_HPP
#define COINDGAME_PREDICATES_HPP

#include "coindgame/fixpoint.hpp"

namespace coindgame {

// Convergence: the node is a leaf, or its chosen child converges (least).
PredicateValuation convergence(const EquationSystem& profile);
bool converges(const EquationSystem& profile, NodeIndex node);

// Strong convergence as its own greatest fixed point: leaf, or convergent
// with both children strongly convergent. Coincides with box(convergence).
PredicateValuation strong_convergence(const EquationSystem& profile);
bool strongly_converges(const EquationSystem& profile, NodeIndex node);

// --- the 0,1-game -----------------------------------------------------------

inline const AgentId kAgentA = "A";
inline const AgentId kAgentB = "B";

PayoffMap payoff_01();  // A:0, B:1
PayoffMap payoff_10();  // A:1, B:0

enum class Shape01 { S0, S1, Neither };

std::string_view to_string(Shape01 s);

// Greatest solution of the mutual S0/S1 rules: S0 nodes are A-branches whose
// down child is the leaf f01 and whose right child is S1; dually for S1.
struct Shape01Valuation {
  PredicateValuation s0;
  PredicateValuation s1;
};
Shape01Valuation shape_01(const EquationSystem& profile);
Shape01 classify_01(const EquationSystem& profile, NodeIndex node);

// "A continues and B eventually stops" and its mirror. Least fixed point of
// the guarded two-clause rule; nodes whose shape is not <p, c, leaf, s'>
// satisfy it vacuously.
enum class StopPattern { AcBes, BcAes };

std::string_view to_string(StopPattern p);

PredicateValuation stop_pattern(const EquationSystem& profile, StopPattern pattern);
bool acbes(const EquationSystem& profile, NodeIndex node, StopPattern pattern);
// SAcBes / SBcAes: the pattern holds always.
bool boxed_acbes(const EquationSystem& profile, NodeIndex node, StopPattern pattern);

}  // namespace coindgame

#endif  // COINDGAME_PREDICATES_HPP
