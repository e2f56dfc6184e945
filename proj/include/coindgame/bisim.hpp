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

#ifndef COINDGAME_BISIM_HPP
#define COINDGAME_BISIM_HPP

#include <vector>

#include "coindgame/system.hpp"

namespace coindgame {

// True iff the two nodes denote the same infinite tree. Explores the product
// of reachable node pairs; the pair set is the greatest relation in which
// every pair agrees on constructor, head, payoff and chosen move. Throws
// KindMismatch when the systems are of different kinds.
bool bisimilar(const EquationSystem& lhs, NodeIndex l, const EquationSystem& rhs, NodeIndex r);

inline bool bisimilar(const EquationSystem& lhs, const EquationSystem& rhs) {
  return bisimilar(lhs, lhs.root(), rhs, rhs.root());
}

// True iff some node reachable from `r` is bisimilar to `l`.
bool subprofile(const EquationSystem& lhs, NodeIndex l, const EquationSystem& rhs, NodeIndex r);

// Bisimulation classes of the disjoint union of two systems, by partition
// refinement. Class ids are dense and comparable across the two vectors.
struct JointClasses {
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;
};

JointClasses bisimulation_classes(const EquationSystem& lhs, const EquationSystem& rhs);
std::vector<std::size_t> bisimulation_classes(const EquationSystem& sys);

// The quotient by bisimilarity, restricted to nodes reachable from the root.
// Each class is named after its smallest member.
EquationSystem minimize(const EquationSystem& sys);

}  // namespace coindgame

#endif  // COINDGAME_BISIM_HPP
