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

#ifndef COINDGAME_FIXPOINT_HPP
#define COINDGAME_FIXPOINT_HPP

// Least and greatest fixed points of monotone boolean rules on finite graphs.
//
// Inductive predicates (convergence, AcBes, ...) are least fixed points and
// coinductive ones (strong convergence, the always modality, S0/S1) are
// greatest fixed points. Both are computed over the finite node set of a
// rational presentation. That is sound only because the presentation is
// finite and guarded: every infinite tree we handle has finitely many
// distinct subtrees, each named by a node, so a predicate on subtrees is a
// predicate on nodes.

#include <functional>
#include <string>
#include <vector>

#include "coindgame/system.hpp"

namespace coindgame {

enum class Polarity { Least, Greatest };

using Valuation = std::vector<bool>;

// A monotone rule over positions 0..size-1. rule(i, v) may only read v at
// the positions listed in reads[i].
struct FixpointProblem {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> reads;
  std::function<bool(std::size_t, const Valuation&)> rule;
};

struct FixpointResult {
  Valuation values;
  std::size_t evaluations = 0;
};

// Chaotic iteration with a worklist keyed on reverse dependencies, smallest
// position first. A position that changes twice proves the rule is not
// monotone; `probe_monotone` additionally spot-checks the final valuation by
// flipping each false dependency to true. Both raise NonMonotoneDetected.
FixpointResult solve(const FixpointProblem& problem, Polarity polarity, bool probe_monotone = false);

// A named transfer rule on the nodes of one system. The rule reads the
// current valuation of the node's children only.
struct NodePredicate {
  std::string name;
  std::function<bool(const EquationSystem&, NodeIndex, const Valuation&)> rule;
};

struct PredicateValuation {
  std::string predicate;
  Polarity polarity = Polarity::Least;
  std::size_t evaluations = 0;
  Valuation values;

  bool operator[](NodeIndex i) const { return values.at(i); }
};

PredicateValuation lfp(const EquationSystem& sys, const NodePredicate& pred, bool probe_monotone = false);
PredicateValuation gfp(const EquationSystem& sys, const NodePredicate& pred, bool probe_monotone = false);

// The always modality: base holds here and, coinductively, at both children.
PredicateValuation box(const EquationSystem& sys, const PredicateValuation& base);
bool always(const EquationSystem& sys, const PredicateValuation& base, NodeIndex node);

}  // namespace coindgame

#endif  // COINDGAME_FIXPOINT_HPP
