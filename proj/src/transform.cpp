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

#include "coindgame/transform.hpp"

#include <deque>
#include <set>

#include "coindgame/bisim.hpp"
#include "coindgame/error.hpp"

namespace coindgame {

namespace {

void require_kind(const EquationSystem& sys, Kind k, const char* op) {
  if (sys.kind() != k)
    throw Error(ErrorCode::KindMismatch, std::string(op) + " expects a " +
                                             std::string(to_string(k)) + ", got a " +
                                             std::string(to_string(sys.kind())));
}

void require_agent(const EquationSystem& sys, const AgentId& agent) {
  if (!sys.has_agent(agent)) throw Error(ErrorCode::UnknownAgent, "'" + agent + "'");
}

template <typename HeadMap>
EquationSystem map_heads(const EquationSystem& sys, Kind kind, HeadMap&& head_of) {
  RawSystem raw = to_raw(sys);
  raw.kind = kind;
  for (auto& eq : raw.equations) {
    if (auto* b = std::get_if<RawBranch>(&eq.rhs)) {
      b->head = head_of(b->head);
      b->chosen.reset();
    }
  }
  return validate_system(raw);
}

}  // namespace

EquationSystem underlying_game(const EquationSystem& profile) {
  if (profile.kind() == Kind::Game) return profile;
  require_kind(profile, Kind::Profile, "underlying_game");
  return map_heads(profile, Kind::Game, [](const Head& h) { return h; });
}

EquationSystem strategy_to_game(const EquationSystem& strategy, const AgentId& agent) {
  require_kind(strategy, Kind::Strategy, "strategy_to_game");
  require_agent(strategy, agent);
  return map_heads(strategy, Kind::Game,
                   [&](const Head& h) { return is_agent(h) ? h : Head{agent}; });
}

bool is_full(const EquationSystem& strategy, NodeIndex from, const AgentId& agent) {
  require_kind(strategy, Kind::Strategy, "is_full");
  require_agent(strategy, agent);
  for (NodeIndex i : strategy.reachable(from)) {
    if (strategy.is_leaf(i)) continue;
    const Head& h = strategy.branch(i).head;
    if (is_agent(h) && std::get<AgentId>(h) == agent) return false;
  }
  return true;
}

bool is_full(const EquationSystem& strategy, const AgentId& agent) {
  return is_full(strategy, strategy.root(), agent);
}

EquationSystem sum_strategies(const StrategyFamily& family) {
  if (family.empty()) throw Error(ErrorCode::MissingStrategy, "empty strategy family");
  const std::set<AgentId>& agents = family.begin()->second.agents();
  for (const auto& [agent, st] : family) {
    require_kind(st, Kind::Strategy, "sum_strategies");
    if (st.agents() != agents)
      throw Error(ErrorCode::UnknownAgent, "strategy of '" + agent + "' declares a different agent set");
    if (!agents.contains(agent)) throw Error(ErrorCode::UnknownAgent, "'" + agent + "' is not an agent");
  }
  for (const auto& a : agents)
    if (!family.contains(a)) throw Error(ErrorCode::MissingStrategy, "no strategy for '" + a + "'");
  for (const auto& [agent, st] : family)
    if (!is_full(st, agent)) throw Error(ErrorCode::NotFull, "strategy of '" + agent + "' is not full");

  const auto& [first_agent, first_st] = *family.begin();
  EquationSystem common = strategy_to_game(first_st, first_agent);
  for (const auto& [agent, st] : family) {
    if (!bisimilar(common, strategy_to_game(st, agent)))
      throw Error(ErrorCode::GamesDiffer,
                  "strategies of '" + first_agent + "' and '" + agent + "' underlie different games");
  }

  std::vector<const EquationSystem*> parts;
  std::vector<AgentId> owners;
  for (const auto& [agent, st] : family) {
    parts.push_back(&st);
    owners.push_back(agent);
  }

  using Position = std::vector<NodeIndex>;
  std::map<Position, std::string> names;
  std::set<std::string> used;
  std::deque<Position> queue;
  auto name_of = [&](const Position& pos) -> const std::string& {
    auto it = names.find(pos);
    if (it != names.end()) return it->second;
    std::string name;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (k) name += '.';
      name += parts[k]->name(pos[k]);
    }
    while (used.contains(name)) name += '\'';
    used.insert(name);
    queue.push_back(pos);
    return names.emplace(pos, name).first->second;
  };

  RawSystem raw;
  raw.kind = Kind::Profile;
  raw.agents.assign(agents.begin(), agents.end());

  Position start;
  for (const auto* p : parts) start.push_back(p->root());
  raw.root = name_of(start);

  while (!queue.empty()) {
    Position pos = queue.front();
    queue.pop_front();
    const std::string name = names.at(pos);

    std::size_t leaves = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) leaves += parts[k]->is_leaf(pos[k]);
    if (leaves == pos.size()) {
      raw.leaf(name, parts[0]->leaf(pos[0]).payoff);
      continue;
    }
    if (leaves != 0) throw Error(ErrorCode::HeadClash, "leaf and branch meet at '" + name + "'");

    std::optional<std::size_t> mover;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (is_choice(parts[k]->branch(pos[k]).head)) {
        if (mover) throw Error(ErrorCode::HeadClash, "several choices at '" + name + "'");
        mover = k;
      }
    }
    if (!mover) throw Error(ErrorCode::HeadClash, "no choice at '" + name + "'");
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (k == *mover) continue;
      const Head& h = parts[k]->branch(pos[k]).head;
      if (h != Head{owners[*mover]})
        throw Error(ErrorCode::HeadClash, "'" + owners[k] + "' sees head '" + to_string(h) +
                                              "' where '" + owners[*mover] + "' moves, at '" + name + "'");
    }

    Position down, right;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      down.push_back(parts[k]->branch(pos[k]).down());
      right.push_back(parts[k]->branch(pos[k]).right());
    }
    Choice c = std::get<Choice>(parts[*mover]->branch(pos[*mover]).head);
    std::string d = name_of(down);
    std::string r = name_of(right);
    raw.node(name, owners[*mover], c, d, r);
  }
  return validate_system(raw);
}

}  // namespace coindgame
