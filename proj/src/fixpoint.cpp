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

#include "coindgame/fixpoint.hpp"

#include <set>

#include "coindgame/error.hpp"

namespace coindgame {

FixpointResult solve(const FixpointProblem& problem, Polarity polarity, bool probe_monotone) {
  const std::size_t n = problem.size;
  const bool start = polarity == Polarity::Greatest;

  std::vector<std::vector<std::size_t>> readers(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : problem.reads.at(i)) readers.at(j).push_back(i);

  FixpointResult result;
  result.values.assign(n, start);
  std::vector<char> changed(n, 0);
  std::set<std::size_t> worklist;
  for (std::size_t i = 0; i < n; ++i) worklist.insert(i);

  while (!worklist.empty()) {
    std::size_t i = *worklist.begin();
    worklist.erase(worklist.begin());
    ++result.evaluations;
    bool v = problem.rule(i, result.values);
    if (v == result.values[i]) continue;
    if (changed[i])
      throw Error(ErrorCode::NonMonotoneDetected, "position " + std::to_string(i) + " changed twice");
    changed[i] = 1;
    result.values[i] = v;
    for (std::size_t k : readers[i]) worklist.insert(k);
  }

  if (probe_monotone) {
    Valuation probe = result.values;
    for (std::size_t i = 0; i < n; ++i) {
      if (!result.values[i]) continue;
      for (std::size_t j : problem.reads[i]) {
        if (probe[j]) continue;
        probe[j] = true;
        bool v = problem.rule(i, probe);
        probe[j] = false;
        if (!v)
          throw Error(ErrorCode::NonMonotoneDetected,
                      "raising position " + std::to_string(j) + " lowered position " + std::to_string(i));
      }
    }
  }
  return result;
}

namespace {

PredicateValuation run(const EquationSystem& sys, const NodePredicate& pred, Polarity polarity,
                       bool probe) {
  FixpointProblem problem;
  problem.size = sys.size();
  problem.reads.resize(sys.size());
  for (NodeIndex i = 0; i < sys.size(); ++i) {
    if (sys.is_leaf(i)) continue;
    const Branch& b = sys.branch(i);
    problem.reads[i] = {b.down(), b.right()};
  }
  problem.rule = [&](std::size_t i, const Valuation& v) {
    return pred.rule(sys, static_cast<NodeIndex>(i), v);
  };
  FixpointResult r = solve(problem, polarity, probe);
  return PredicateValuation{pred.name, polarity, r.evaluations, std::move(r.values)};
}

}  // namespace

PredicateValuation lfp(const EquationSystem& sys, const NodePredicate& pred, bool probe_monotone) {
  return run(sys, pred, Polarity::Least, probe_monotone);
}

PredicateValuation gfp(const EquationSystem& sys, const NodePredicate& pred, bool probe_monotone) {
  return run(sys, pred, Polarity::Greatest, probe_monotone);
}

PredicateValuation box(const EquationSystem& sys, const PredicateValuation& base) {
  if (base.values.size() != sys.size())
    throw Error(ErrorCode::InvalidArgument, "valuation does not belong to this system");
  NodePredicate rule{"always(" + base.predicate + ")",
                     [&base](const EquationSystem& s, NodeIndex i, const Valuation& v) {
                       if (!base[i]) return false;
                       if (s.is_leaf(i)) return true;
                       return v[s.branch(i).down()] && v[s.branch(i).right()];
                     }};
  return gfp(sys, rule);
}

bool always(const EquationSystem& sys, const PredicateValuation& base, NodeIndex node) {
  return box(sys, base)[node];
}

}  // namespace coindgame
