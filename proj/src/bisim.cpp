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

#include "coindgame/bisim.hpp"

#include <map>
#include <set>
#include <tuple>

#include "coindgame/error.hpp"

namespace coindgame {

namespace {

void require_same_kind(const EquationSystem& lhs, const EquationSystem& rhs) {
  if (lhs.kind() != rhs.kind())
    throw Error(ErrorCode::KindMismatch, std::string(to_string(lhs.kind())) + " vs " +
                                             std::string(to_string(rhs.kind())));
}

bool same_label(const Node& a, const Node& b) {
  if (a.index() != b.index()) return false;
  if (const auto* la = std::get_if<Leaf>(&a)) return la->payoff == std::get<Leaf>(b).payoff;
  const auto& ba = std::get<Branch>(a);
  const auto& bb = std::get<Branch>(b);
  return ba.head == bb.head && ba.chosen == bb.chosen;
}

// Local label as a sortable key for the initial partition.
std::string label_key(const Node& n) {
  if (const auto* l = std::get_if<Leaf>(&n)) return "L" + to_string(l->payoff);
  const auto& b = std::get<Branch>(n);
  std::string key = (is_agent(b.head) ? "Ba:" : "Bc:") + to_string(b.head);
  if (b.chosen) key += "/" + std::string(to_string(*b.chosen));
  return key;
}

// Moore-style refinement over a list of nodes whose children are given as
// indices into the same list.
std::vector<std::size_t> refine(const std::vector<const Node*>& nodes,
                                const std::vector<std::array<std::size_t, 2>>& kids) {
  const std::size_t n = nodes.size();
  std::vector<std::size_t> cls(n);
  {
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i)
      cls[i] = ids.emplace(label_key(*nodes[i]), ids.size()).first->second;
  }
  std::size_t count = 0;
  for (std::size_t c : cls) count = std::max(count, c + 1);
  while (true) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t d = std::holds_alternative<Branch>(*nodes[i]) ? cls[kids[i][0]] : 0;
      std::size_t r = std::holds_alternative<Branch>(*nodes[i]) ? cls[kids[i][1]] : 0;
      next[i] = ids.emplace(std::make_tuple(cls[i], d, r), ids.size()).first->second;
    }
    std::size_t next_count = ids.size();
    cls = std::move(next);
    if (next_count == count) return cls;
    count = next_count;
  }
}

}  // namespace

bool bisimilar(const EquationSystem& lhs, NodeIndex l, const EquationSystem& rhs, NodeIndex r) {
  require_same_kind(lhs, rhs);
  std::set<std::pair<NodeIndex, NodeIndex>> seen{{l, r}};
  std::vector<std::pair<NodeIndex, NodeIndex>> stack{{l, r}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (!same_label(lhs.node(a), rhs.node(b))) return false;
    if (lhs.is_leaf(a)) continue;
    for (Choice c : kChoices) {
      std::pair<NodeIndex, NodeIndex> succ{lhs.branch(a).next(c), rhs.branch(b).next(c)};
      if (seen.insert(succ).second) stack.push_back(succ);
    }
  }
  return true;
}

bool subprofile(const EquationSystem& lhs, NodeIndex l, const EquationSystem& rhs, NodeIndex r) {
  require_same_kind(lhs, rhs);
  JointClasses classes = bisimulation_classes(lhs, rhs);
  for (NodeIndex i : rhs.reachable(r))
    if (classes.rhs[i] == classes.lhs[l]) return true;
  return false;
}

JointClasses bisimulation_classes(const EquationSystem& lhs, const EquationSystem& rhs) {
  require_same_kind(lhs, rhs);
  const std::size_t offset = lhs.size();
  std::vector<const Node*> nodes;
  std::vector<std::array<std::size_t, 2>> kids;
  for (NodeIndex i = 0; i < lhs.size(); ++i) {
    nodes.push_back(&lhs.node(i));
    kids.push_back(lhs.is_leaf(i) ? std::array<std::size_t, 2>{}
                                  : std::array<std::size_t, 2>{lhs.branch(i).down(), lhs.branch(i).right()});
  }
  for (NodeIndex i = 0; i < rhs.size(); ++i) {
    nodes.push_back(&rhs.node(i));
    kids.push_back(rhs.is_leaf(i) ? std::array<std::size_t, 2>{}
                                  : std::array<std::size_t, 2>{offset + rhs.branch(i).down(),
                                                               offset + rhs.branch(i).right()});
  }
  std::vector<std::size_t> cls = refine(nodes, kids);
  JointClasses out;
  out.lhs.assign(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(offset));
  out.rhs.assign(cls.begin() + static_cast<std::ptrdiff_t>(offset), cls.end());
  return out;
}

std::vector<std::size_t> bisimulation_classes(const EquationSystem& sys) {
  std::vector<const Node*> nodes;
  std::vector<std::array<std::size_t, 2>> kids;
  for (NodeIndex i = 0; i < sys.size(); ++i) {
    nodes.push_back(&sys.node(i));
    kids.push_back(sys.is_leaf(i) ? std::array<std::size_t, 2>{}
                                  : std::array<std::size_t, 2>{sys.branch(i).down(), sys.branch(i).right()});
  }
  return refine(nodes, kids);
}

EquationSystem minimize(const EquationSystem& sys) {
  std::vector<std::size_t> cls = bisimulation_classes(sys);
  std::map<std::size_t, NodeIndex> representative;
  for (NodeIndex i : sys.reachable()) representative.emplace(cls[i], i);  // smallest index wins

  RawSystem raw;
  raw.kind = sys.kind();
  raw.agents.assign(sys.agents().begin(), sys.agents().end());
  auto rep_name = [&](NodeIndex i) { return sys.name(representative.at(cls[i])); };
  for (const auto& [c, i] : representative) {
    if (sys.is_leaf(i)) {
      raw.leaf(sys.name(i), sys.leaf(i).payoff);
    } else {
      const Branch& b = sys.branch(i);
      raw.equations.push_back(
          {sys.name(i), RawBranch{b.head, b.chosen, rep_name(b.down()), rep_name(b.right())}});
    }
  }
  raw.root = rep_name(sys.root());
  return validate_system(raw);
}

}  // namespace coindgame
