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

#include "coindgame/equilibria.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "coindgame/bisim.hpp"
#include "coindgame/error.hpp"
#include "coindgame/predicates.hpp"

namespace coindgame {

namespace {

void require_profile(const EquationSystem& sys) {
  if (sys.kind() != Kind::Profile)
    throw Error(ErrorCode::KindMismatch,
                "expected a profile, got a " + std::string(to_string(sys.kind())));
}

}  // namespace

std::vector<PayoffResult> payoffs(const EquationSystem& profile) {
  require_profile(profile);
  const std::size_t n = profile.size();
  std::vector<PayoffResult> out(n);
  std::vector<char> state(n, 0);  // 0 new, 1 on the current walk, 2 done

  for (NodeIndex start = 0; start < n; ++start) {
    if (state[start] == 2) continue;
    std::vector<NodeIndex> walk;
    NodeIndex i = start;
    while (state[i] == 0 && !profile.is_leaf(i)) {
      state[i] = 1;
      walk.push_back(i);
      const Branch& b = profile.branch(i);
      i = b.next(*b.chosen);
    }
    PayoffResult result;
    if (state[i] == 2) {
      result = out[i];
    } else if (profile.is_leaf(i)) {
      result.value = profile.leaf(i).payoff;
      out[i] = result;
      state[i] = 2;
    } else {
      // i is on the walk: the tail from its first occurrence is the loop.
      auto it = std::find(walk.begin(), walk.end(), i);
      result.cycle.assign(it, walk.end());
    }
    for (NodeIndex w : walk) {
      out[w] = result;
      state[w] = 2;
    }
  }
  return out;
}

PayoffResult payoff(const EquationSystem& profile, NodeIndex node) { return payoffs(profile).at(node); }

PredicateValuation local_pe(const EquationSystem& profile) {
  PredicateValuation strong = strong_convergence(profile);
  std::vector<PayoffResult> pay = payoffs(profile);
  PredicateValuation out{"PE", Polarity::Greatest, 0, Valuation(profile.size())};
  for (NodeIndex i = 0; i < profile.size(); ++i) {
    if (!strong[i]) continue;
    if (profile.is_leaf(i)) {
      out.values[i] = true;
      continue;
    }
    const Branch& b = profile.branch(i);
    const AgentId& p = b.owner();
    const Rational& taken = pay[b.next(*b.chosen)].map().at(p);
    const Rational& other = pay[b.next(coindgame::other(*b.chosen))].map().at(p);
    out.values[i] = taken >= other;
  }
  return out;
}

bool local_pe(const EquationSystem& profile, NodeIndex node) { return local_pe(profile)[node]; }

PredicateValuation spe(const EquationSystem& profile) {
  PredicateValuation s = box(profile, local_pe(profile));
  s.predicate = "SPE";
  return s;
}

bool is_spe(const EquationSystem& profile, NodeIndex node) { return spe(profile)[node]; }

bool convertible(const EquationSystem& lhs, NodeIndex l, const EquationSystem& rhs, NodeIndex r,
                 const AgentId& agent) {
  require_profile(lhs);
  require_profile(rhs);
  JointClasses classes = bisimulation_classes(lhs, rhs);

  using Pair = std::pair<NodeIndex, NodeIndex>;
  std::map<Pair, std::size_t> index;
  std::vector<Pair> pairs;
  auto intern = [&](Pair p) {
    auto [it, fresh] = index.emplace(p, pairs.size());
    if (fresh) pairs.push_back(p);
    return it->second;
  };
  intern({l, r});

  FixpointProblem problem;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [a, b] = pairs[k];
    problem.reads.emplace_back();
    if (classes.lhs[a] == classes.rhs[b] || lhs.is_leaf(a) || rhs.is_leaf(b)) continue;
    std::size_t d = intern({lhs.branch(a).down(), rhs.branch(b).down()});
    std::size_t rr = intern({lhs.branch(a).right(), rhs.branch(b).right()});
    problem.reads[k] = {d, rr};
  }
  problem.size = pairs.size();
  problem.rule = [&](std::size_t k, const Valuation& v) {
    auto [a, b] = pairs[k];
    if (classes.lhs[a] == classes.rhs[b]) return true;
    if (lhs.is_leaf(a) || rhs.is_leaf(b)) return false;
    const Branch& x = lhs.branch(a);
    const Branch& y = rhs.branch(b);
    if (x.head != y.head) return false;
    if (x.owner() != agent && x.chosen != y.chosen) return false;
    return v[problem.reads[k][0]] && v[problem.reads[k][1]];
  };
  return solve(problem, Polarity::Least).values[0];
}

NashResult nash(const EquationSystem& profile, NodeIndex node) {
  std::vector<PayoffResult> pay = payoffs(profile);
  if (!pay.at(node).defined())
    throw Error(ErrorCode::UndefinedRootPayoff, "payoff at '" + profile.name(node) + "' is undefined");
  const PayoffMap& current = pay[node].map();

  for (const AgentId& agent : profile.agents()) {
    // Breadth-first over the relaxation where the agent's nodes allow both
    // moves and every other node plays its chosen move.
    std::vector<std::optional<std::pair<NodeIndex, Choice>>> parent(profile.size());
    std::vector<char> seen(profile.size(), 0);
    std::deque<NodeIndex> queue{node};
    seen[node] = 1;
    std::optional<NodeIndex> best;
    while (!queue.empty()) {
      NodeIndex i = queue.front();
      queue.pop_front();
      if (profile.is_leaf(i)) {
        const Rational& v = profile.leaf(i).payoff.at(agent);
        if (!best || v > profile.leaf(*best).payoff.at(agent)) best = i;
        continue;
      }
      const Branch& b = profile.branch(i);
      for (Choice c : kChoices) {
        if (b.owner() != agent && c != *b.chosen) continue;
        NodeIndex j = b.next(c);
        if (seen[j]) continue;
        seen[j] = 1;
        parent[j] = std::make_pair(i, c);
        queue.push_back(j);
      }
    }
    if (!best || profile.leaf(*best).payoff.at(agent) <= current.at(agent)) continue;

    std::vector<std::pair<NodeIndex, Choice>> route;
    for (NodeIndex i = *best; i != node; i = parent[i]->first) route.push_back(*parent[i]);
    std::reverse(route.begin(), route.end());

    DeviationWitness w;
    w.agent = agent;
    w.before = current.at(agent);
    w.after = profile.leaf(*best).payoff.at(agent);

    RawSystem raw = to_raw(profile);
    std::set<std::string> used;
    for (NodeIndex i = 0; i < profile.size(); ++i) used.insert(profile.name(i));
    std::vector<std::string> fresh;
    for (const auto& [i, c] : route) {
      std::string name = profile.name(i) + "'";
      while (used.contains(name)) name += "'";
      used.insert(name);
      fresh.push_back(name);
    }
    for (std::size_t k = 0; k < route.size(); ++k) {
      auto [i, c] = route[k];
      const Branch& b = profile.branch(i);
      std::string taken = k + 1 < route.size() ? fresh[k + 1] : profile.name(*best);
      std::string skipped = profile.name(b.next(other(c)));
      RawBranch nb{b.head, c, c == Choice::Down ? taken : skipped, c == Choice::Down ? skipped : taken};
      raw.equations.push_back({fresh[k], nb});
      w.path.push_back({profile.name(i), c});
      if (c != *b.chosen) w.flips.push_back({profile.name(i), c});
    }
    raw.root = fresh.front();
    w.deviant = validate_system(raw);
    return NashResult{false, std::move(w)};
  }
  return NashResult{};
}

// ---------------------------------------------------------------------------

PayoffMap tree_payoff(const FiniteTree& profile) {
  const FiniteTree* t = &profile;
  while (t->is_branch()) t = &t->next(t->chosen.value());
  if (t->is_cut()) throw Error(ErrorCode::NotFinite, "play reaches a cut-point");
  return t->payoff;
}

bool is_bi(const FiniteTree& profile) {
  if (profile.is_cut()) throw Error(ErrorCode::NotFinite, "tree contains a cut-point");
  if (profile.is_leaf()) return true;
  if (!is_bi(profile.down()) || !is_bi(profile.right())) return false;
  const AgentId& p = std::get<AgentId>(profile.head);
  Choice c = profile.chosen.value();
  return tree_payoff(profile.next(c)).at(p) >= tree_payoff(profile.next(other(c))).at(p);
}

namespace {

struct Labeled {
  FiniteTree tree;
  PayoffMap payoff;
};

std::vector<Labeled> bi_labelings(const FiniteTree& game) {
  if (game.is_cut()) throw Error(ErrorCode::NotFinite, "tree contains a cut-point");
  if (game.is_leaf()) return {{game, game.payoff}};
  std::vector<Labeled> downs = bi_labelings(game.down());
  std::vector<Labeled> rights = bi_labelings(game.right());
  const AgentId& p = std::get<AgentId>(game.head);
  std::vector<Labeled> out;
  for (Choice c : kChoices) {
    for (const auto& d : downs) {
      for (const auto& r : rights) {
        const Rational& down_value = d.payoff.at(p);
        const Rational& right_value = r.payoff.at(p);
        bool optimal = c == Choice::Down ? down_value >= right_value : right_value >= down_value;
        if (!optimal) continue;
        out.push_back({FiniteTree::branch(game.head, c, d.tree, r.tree),
                       c == Choice::Down ? d.payoff : r.payoff});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FiniteTree> enumerate_bi(const FiniteTree& game) {
  std::vector<FiniteTree> out;
  for (auto& l : bi_labelings(game)) out.push_back(std::move(l.tree));
  return out;
}

}  // namespace coindgame
