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

#ifndef COINDGAME_RANDOM_HPP
#define COINDGAME_RANDOM_HPP

// Seeded generators of random systems for property checks.

#include <cstdint>
#include <random>

#include "coindgame/system.hpp"

namespace coindgame {

using Rng = std::mt19937_64;

struct RandomOptions {
  std::size_t max_nodes = 12;
  double leaf_probability = 0.3;
  std::size_t agents = 2;  // named A, B, C, ...
};

Rational random_rational(Rng& rng);

// Arbitrary graph shape, cycles allowed. Strategies mix owner heads and
// move heads.
EquationSystem random_system(Rng& rng, Kind kind, const RandomOptions& opts = {});
inline EquationSystem random_profile(Rng& rng, const RandomOptions& opts = {}) {
  return random_system(rng, Kind::Profile, opts);
}

// A cyclic profile that is subgame perfect by construction: chosen moves
// form a forest that drains into leaves, and every other move leads to a
// node no better for the owner.
EquationSystem random_spe_profile(Rng& rng, const RandomOptions& opts = {});

// A finite game tree of height at most max_depth.
FiniteTree random_game_tree(Rng& rng, std::size_t max_depth, const RandomOptions& opts = {});

// The same tree with a uniformly random chosen move at every branch.
FiniteTree random_labeling(Rng& rng, const FiniteTree& game);

}  // namespace coindgame

#endif  // COINDGAME_RANDOM_HPP
