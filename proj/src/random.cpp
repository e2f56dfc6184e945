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

#include "coindgame/random.hpp"

#include <algorithm>
#include <numeric>

namespace coindgame {

namespace {

std::vector<AgentId> agent_names(std::size_t n) {
  std::vector<AgentId> out;
  for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k) out.push_back(std::string(1, char('A' + k)));
  return out;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

PayoffMap random_payoff(Rng& rng, const std::vector<AgentId>& agents) {
  PayoffMap p;
  for (const auto& a : agents) p[a] = random_rational(rng);
  return p;
}

std::string vname(std::size_t i) { return "v" + std::to_string(i); }

Choice random_choice(Rng& rng) { return coin(rng, 0.5) ? Choice::Right : Choice::Down; }

}  // namespace

Rational random_rational(Rng& rng) {
  long num = std::uniform_int_distribution<long>(-4, 4)(rng);
  long den = std::uniform_int_distribution<long>(1, 3)(rng);
  return Rational(num, den);
}

EquationSystem random_system(Rng& rng, Kind kind, const RandomOptions& opts) {
  std::vector<AgentId> agents = agent_names(opts.agents);
  std::size_t n = uniform(rng, 1, std::max<std::size_t>(opts.max_nodes, 1));
  RawSystem raw;
  raw.kind = kind;
  raw.agents = agents;
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng, opts.leaf_probability)) {
      raw.leaf(vname(i), random_payoff(rng, agents));
      continue;
    }
    std::string d = vname(uniform(rng, 0, n - 1));
    std::string r = vname(uniform(rng, 0, n - 1));
    AgentId owner = agents[uniform(rng, 0, agents.size() - 1)];
    switch (kind) {
      case Kind::Game: raw.node(vname(i), owner, d, r); break;
      case Kind::Profile: raw.node(vname(i), owner, random_choice(rng), d, r); break;
      case Kind::Strategy:
        if (coin(rng, 0.5)) {
          raw.move(vname(i), random_choice(rng), d, r);
        } else {
          raw.node(vname(i), owner, d, r);
        }
        break;
    }
  }
  return validate_system(raw);
}

EquationSystem random_spe_profile(Rng& rng, const RandomOptions& opts) {
  std::vector<AgentId> agents = agent_names(opts.agents);
  std::size_t n = uniform(rng, 1, std::max<std::size_t>(opts.max_nodes, 1));

  // Node i may only choose a node of smaller index, so node 0 is a leaf and
  // chosen paths always end at a leaf.
  std::vector<bool> leaf(n);
  std::vector<PayoffMap> value(n);
  std::vector<AgentId> owner(n);
  std::vector<std::size_t> chosen_target(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leaf[i] = i == 0 || coin(rng, opts.leaf_probability);
    if (leaf[i]) {
      value[i] = random_payoff(rng, agents);
      continue;
    }
    owner[i] = agents[uniform(rng, 0, agents.size() - 1)];
    chosen_target[i] = uniform(rng, 0, i - 1);
    value[i] = value[chosen_target[i]];
  }

  RawSystem raw;
  raw.kind = Kind::Profile;
  raw.agents = agents;
  raw.root = vname(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (leaf[i]) {
      raw.leaf(vname(i), value[i]);
      continue;
    }
    // The other move may go anywhere, including upwards into a cycle, as
    // long as it is no better for the owner.
    std::vector<std::size_t> allowed;
    for (std::size_t j = 0; j < n; ++j)
      if (value[j].at(owner[i]) <= value[i].at(owner[i])) allowed.push_back(j);
    std::size_t other = allowed[uniform(rng, 0, allowed.size() - 1)];
    Choice c = random_choice(rng);
    std::string taken = vname(chosen_target[i]), skipped = vname(other);
    raw.node(vname(i), owner[i], c, c == Choice::Down ? taken : skipped, c == Choice::Down ? skipped : taken);
  }
  return validate_system(raw);
}

FiniteTree random_game_tree(Rng& rng, std::size_t max_depth, const RandomOptions& opts) {
  std::vector<AgentId> agents = agent_names(opts.agents);
  auto grow = [&](auto&& self, std::size_t depth) -> FiniteTree {
    if (depth == 0 || coin(rng, opts.leaf_probability)) return FiniteTree::leaf(random_payoff(rng, agents));
    AgentId owner = agents[uniform(rng, 0, agents.size() - 1)];
    FiniteTree d = self(self, depth - 1);
    FiniteTree r = self(self, depth - 1);
    return FiniteTree::branch(owner, std::nullopt, std::move(d), std::move(r));
  };
  return grow(grow, max_depth);
}

FiniteTree random_labeling(Rng& rng, const FiniteTree& game) {
  if (!game.is_branch()) return game;
  return FiniteTree::branch(game.head, random_choice(rng), random_labeling(rng, game.down()),
                            random_labeling(rng, game.right()));
}

}  // namespace coindgame
