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

#include "coindgame/predicates.hpp"

#include "coindgame/error.hpp"

namespace coindgame {

namespace {

void require_profile(const EquationSystem& sys) {
  if (sys.kind() != Kind::Profile)
    throw Error(ErrorCode::KindMismatch,
                "expected a profile, got a " + std::string(to_string(sys.kind())));
}

bool is_leaf_with(const EquationSystem& sys, NodeIndex i, const PayoffMap& f) {
  return sys.is_leaf(i) && sys.leaf(i).payoff == f;
}

}  // namespace

PredicateValuation convergence(const EquationSystem& profile) {
  require_profile(profile);
  return lfp(profile, {"converges", [](const EquationSystem& s, NodeIndex i, const Valuation& v) {
                         if (s.is_leaf(i)) return true;
                         const Branch& b = s.branch(i);
                         return static_cast<bool>(v[b.next(*b.chosen)]);
                       }});
}

bool converges(const EquationSystem& profile, NodeIndex node) { return convergence(profile)[node]; }

PredicateValuation strong_convergence(const EquationSystem& profile) {
  PredicateValuation conv = convergence(profile);
  return gfp(profile, {"strongly_converges",
                       [&conv](const EquationSystem& s, NodeIndex i, const Valuation& v) {
                         if (s.is_leaf(i)) return true;
                         const Branch& b = s.branch(i);
                         return conv[i] && v[b.down()] && v[b.right()];
                       }});
}

bool strongly_converges(const EquationSystem& profile, NodeIndex node) {
  return strong_convergence(profile)[node];
}

PayoffMap payoff_01() { return {{kAgentA, 0}, {kAgentB, 1}}; }
PayoffMap payoff_10() { return {{kAgentA, 1}, {kAgentB, 0}}; }

std::string_view to_string(Shape01 s) {
  switch (s) {
    case Shape01::S0: return "S0";
    case Shape01::S1: return "S1";
    case Shape01::Neither: return "neither";
  }
  return "?";
}

std::string_view to_string(StopPattern p) { return p == StopPattern::AcBes ? "AcBes" : "BcAes"; }

Shape01Valuation shape_01(const EquationSystem& profile) {
  require_profile(profile);
  const std::size_t n = profile.size();
  const PayoffMap f01 = payoff_01();
  const PayoffMap f10 = payoff_10();

  // Position 2i stands for S0(i), 2i+1 for S1(i).
  FixpointProblem problem;
  problem.size = 2 * n;
  problem.reads.resize(2 * n);
  for (NodeIndex i = 0; i < n; ++i) {
    if (profile.is_leaf(i)) continue;
    NodeIndex r = profile.branch(i).right();
    problem.reads[2 * i] = {2 * std::size_t{r} + 1};
    problem.reads[2 * i + 1] = {2 * std::size_t{r}};
  }
  problem.rule = [&](std::size_t pos, const Valuation& v) {
    NodeIndex i = static_cast<NodeIndex>(pos / 2);
    bool zero = pos % 2 == 0;
    if (profile.is_leaf(i)) return false;
    const Branch& b = profile.branch(i);
    const AgentId& owner = zero ? kAgentA : kAgentB;
    if (b.owner() != owner || !is_leaf_with(profile, b.down(), zero ? f01 : f10)) return false;
    return static_cast<bool>(v[zero ? 2 * std::size_t{b.right()} + 1 : 2 * std::size_t{b.right()}]);
  };
  FixpointResult r = solve(problem, Polarity::Greatest);

  Shape01Valuation out{{"S0", Polarity::Greatest, r.evaluations, Valuation(n)},
                       {"S1", Polarity::Greatest, r.evaluations, Valuation(n)}};
  for (NodeIndex i = 0; i < n; ++i) {
    out.s0.values[i] = r.values[2 * i];
    out.s1.values[i] = r.values[2 * i + 1];
  }
  return out;
}

Shape01 classify_01(const EquationSystem& profile, NodeIndex node) {
  Shape01Valuation v = shape_01(profile);
  if (v.s0[node]) return Shape01::S0;
  if (v.s1[node]) return Shape01::S1;
  return Shape01::Neither;
}

PredicateValuation stop_pattern(const EquationSystem& profile, StopPattern pattern) {
  require_profile(profile);
  const AgentId& continuer = pattern == StopPattern::AcBes ? kAgentA : kAgentB;
  const AgentId& stopper = pattern == StopPattern::AcBes ? kAgentB : kAgentA;
  const PayoffMap continuer_leaf = pattern == StopPattern::AcBes ? payoff_01() : payoff_10();
  const PayoffMap stopper_leaf = pattern == StopPattern::AcBes ? payoff_10() : payoff_01();

  return lfp(profile, {std::string(to_string(pattern)),
                       [=](const EquationSystem& s, NodeIndex i, const Valuation& v) {
                         if (s.is_leaf(i)) return true;
                         const Branch& b = s.branch(i);
                         if (!s.is_leaf(b.down())) return true;  // guard fails: vacuous
                         const PayoffMap& f = s.leaf(b.down()).payoff;
                         bool rest = v[b.right()];
                         if (b.owner() == continuer && f == continuer_leaf && *b.chosen == Choice::Right && rest)
                           return true;
                         if (b.owner() == stopper && f == stopper_leaf && (*b.chosen == Choice::Down || rest))
                           return true;
                         return false;
                       }});
}

bool acbes(const EquationSystem& profile, NodeIndex node, StopPattern pattern) {
  return stop_pattern(profile, pattern)[node];
}

bool boxed_acbes(const EquationSystem& profile, NodeIndex node, StopPattern pattern) {
  return always(profile, stop_pattern(profile, pattern), node);
}

}  // namespace coindgame
