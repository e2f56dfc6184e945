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

#ifndef COINDGAME_TRANSFORM_HPP
#define COINDGAME_TRANSFORM_HPP

#include <map>

#include "coindgame/system.hpp"

namespace coindgame {

// Strips the chosen moves of a profile, node by node. A game is returned
// unchanged.
EquationSystem underlying_game(const EquationSystem& profile);

// Replaces every choice head by `agent`; agent heads are kept.
EquationSystem strategy_to_game(const EquationSystem& strategy, const AgentId& agent);

// A strategy is full for `agent` when no reachable head names that agent,
// i.e. every decision of the agent has been replaced by a choice.
bool is_full(const EquationSystem& strategy, const AgentId& agent);
bool is_full(const EquationSystem& strategy, NodeIndex from, const AgentId& agent);

using StrategyFamily = std::map<AgentId, EquationSystem>;

// Synchronized product of one full strategy per agent. At every product
// position exactly one strategy shows a choice and all others show that
// agent as head. Product nodes are named by joining the component node names
// with '.' in agent-name order.
//
// Throws MissingStrategy / UnknownAgent when the family does not match the
// agent set, NotFull, GamesDiffer when the underlying games are not
// bisimilar, and HeadClash on inconsistent heads at a position.
EquationSystem sum_strategies(const StrategyFamily& family);

}  // namespace coindgame

#endif  // COINDGAME_TRANSFORM_HPP
