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

#include "doctest.h"

#include "coindgame/bisim.hpp"
#include "coindgame/random.hpp"
#include "coindgame/transform.hpp"
#include "coindgame/zero_one.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coindgame;
using testing::ab;
using testing::error_of;

namespace {

EquationSystem leaf_system(Kind kind) {
  RawSystem r = testing::raw(kind);
  r.leaf("f", ab(2, 3));
  return validate_system(r);
}

// B gives up at its first node.
EquationSystem stop_b() {
  RawSystem r = testing::raw(Kind::Strategy);
  r.node("x", "A", "f01", "y").move("y", Choice::Down, "f10", "x").leaf("f01", ab(0, 1)).leaf("f10", ab(1, 0));
  return validate_system(r);
}

}  // namespace

TEST_CASE("underlying_game") {
  CanonicalProfiles c = canonical_profiles();
  EquationSystem g = underlying_game(c.s10a);
  CHECK(g.kind() == Kind::Game);
  CHECK(bisimilar(g, build_01_game()));
  CHECK(bisimilar(underlying_game(c.s01a), build_01_game()));
  CHECK(bisimilar(underlying_game(escalation_strategies().s_a), build_01_game()));
  CHECK(bisimilar(underlying_game(leaf_system(Kind::Profile)), leaf_system(Kind::Game)));
  CHECK(bisimilar(underlying_game(g), g));
  CHECK(error_of([] { underlying_game(stop_b()); }) == ErrorCode::KindMismatch);
}

TEST_CASE("strategy_to_game") {
  EscalationSystems e = escalation_strategies();
  CHECK(bisimilar(strategy_to_game(e.st_a, "A"), build_01_game()));
  CHECK(bisimilar(strategy_to_game(e.st_b, "B"), build_01_game()));
  CHECK(bisimilar(strategy_to_game(leaf_system(Kind::Strategy), "A"), leaf_system(Kind::Game)));

  RawSystem r = testing::raw(Kind::Strategy);
  r.move("x", Choice::Right, "f", "f").leaf("f", ab(0, 0));
  EquationSystem g = strategy_to_game(validate_system(r), "B");
  CHECK(g.branch(g.root()).owner() == "B");
  CHECK(error_of([&] { strategy_to_game(e.st_a, "Z"); }) == ErrorCode::UnknownAgent);
}

TEST_CASE("is_full") {
  EscalationSystems e = escalation_strategies();
  CHECK(is_full(e.st_a, "A"));
  CHECK_FALSE(is_full(e.st_a, "B"));
  CHECK(is_full(e.st_b, "B"));
  CHECK(is_full(leaf_system(Kind::Strategy), "A"));
  CHECK(error_of([&] { is_full(e.st_a, "Z"); }) == ErrorCode::UnknownAgent);
}

TEST_CASE("sum of the escalation strategies") {
  EscalationSystems e = escalation_strategies();
  EquationSystem s = sum_strategies({{"A", e.st_a}, {"B", e.st_b}});
  CHECK(s.kind() == Kind::Profile);
  CHECK(bisimilar(s, e.s_a));
  CHECK(s.name(s.root()) == "stA.stB");
  CHECK(bisimilar(underlying_game(s), strategy_to_game(e.st_a, "A")));
}

TEST_CASE("sum of leaf strategies is the leaf") {
  EquationSystem s = sum_strategies({{"A", leaf_system(Kind::Strategy)}, {"B", leaf_system(Kind::Strategy)}});
  CHECK(bisimilar(s, leaf_system(Kind::Profile)));
}

TEST_CASE("A continues, B stops at once") {
  EscalationSystems e = escalation_strategies();
  EquationSystem s = sum_strategies({{"A", e.st_a}, {"B", stop_b()}});
  const Branch& root = s.branch(s.root());
  CHECK(root.owner() == "A");
  CHECK(root.chosen == Choice::Right);
  const Branch& next = s.branch(root.right());
  CHECK(next.owner() == "B");
  CHECK(next.chosen == Choice::Down);
  CHECK(oracle::payoff(s, s.root()) == ab(1, 0));
  CHECK(s.reachable().size() == 4);
}

TEST_CASE("sum preconditions") {
  EscalationSystems e = escalation_strategies();
  CHECK(error_of([] { sum_strategies({}); }) == ErrorCode::MissingStrategy);
  CHECK(error_of([&] { sum_strategies({{"A", e.st_a}}); }) == ErrorCode::MissingStrategy);
  CHECK(error_of([&] { sum_strategies({{"A", e.st_b}, {"B", e.st_b}}); }) == ErrorCode::NotFull);
  CHECK(error_of([&] { sum_strategies({{"A", e.st_a}, {"B", e.s_a}}); }) == ErrorCode::KindMismatch);

  // B's strategy lives on a game whose B-leaf pays differently.
  RawSystem r = testing::raw(Kind::Strategy);
  r.node("x", "A", "f01", "y").move("y", Choice::Right, "f55", "x").leaf("f01", ab(0, 1)).leaf("f55", ab(5, 5));
  EquationSystem other = validate_system(r);
  CHECK(error_of([&] { sum_strategies({{"A", e.st_a}, {"B", other}}); }) == ErrorCode::GamesDiffer);
}

TEST_CASE("stripping commutes with unfolding") {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    EquationSystem p = random_profile(rng);
    EquationSystem g = underlying_game(p);
    for (std::size_t depth : {0, 1, 3, 6}) {
      FiniteTree a = unfold(g, g.root(), depth);
      FiniteTree b = unfold(p, p.root(), depth);
      auto strip = [](auto&& self, FiniteTree t) -> FiniteTree {
        t.chosen.reset();
        for (auto& c : t.children) c = self(self, c);
        return t;
      };
      CHECK(a == strip(strip, b));
    }
  }
}

TEST_CASE("sum of random full families") {
  // Split every random profile into one full strategy per agent and add them
  // back up: the result must be the original profile.
  Rng rng(21);
  int summed = 0;
  for (int k = 0; k < 200; ++k) {
    EquationSystem p = random_profile(rng);
    StrategyFamily family;
    for (const AgentId& agent : p.agents()) {
      RawSystem raw = to_raw(p);
      raw.kind = Kind::Strategy;
      for (auto& eq : raw.equations) {
        auto* b = std::get_if<RawBranch>(&eq.rhs);
        if (!b) continue;
        if (std::get<AgentId>(b->head) == agent) b->head = *b->chosen;
        b->chosen.reset();
      }
      family.emplace(agent, validate_system(raw));
    }
    EquationSystem s = sum_strategies(family);
    CHECK(bisimilar(s, p));
    for (const auto& [agent, st] : family) CHECK(bisimilar(underlying_game(s), strategy_to_game(st, agent)));
    ++summed;
  }
  CHECK(summed == 200);
}
