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

#include "coindgame/system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coindgame/error.hpp"

namespace coindgame {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::UnguardedCycle: return "UnguardedCycle";
    case ErrorCode::PayoffDomainMismatch: return "PayoffDomainMismatch";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownAgent: return "UnknownAgent";
    case ErrorCode::MalformedNode: return "MalformedNode";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotFull: return "NotFull";
    case ErrorCode::GamesDiffer: return "GamesDiffer";
    case ErrorCode::HeadClash: return "HeadClash";
    case ErrorCode::MissingStrategy: return "MissingStrategy";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotCombShaped: return "NotCombShaped";
    case ErrorCode::NonMonotoneDetected: return "NonMonotoneDetected";
    case ErrorCode::UndefinedRootPayoff: return "UndefinedRootPayoff";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingChoiceMarker: return "MissingChoiceMarker";
    case ErrorCode::StrayChoiceMarker: return "StrayChoiceMarker";
    case ErrorCode::UnderlyingGameMismatch: return "UnderlyingGameMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

std::string to_string(const PayoffMap& payoff) {
  std::string out = "{";
  bool first = true;
  for (const auto& [agent, value] : payoff) {
    if (!first) out += ", ";
    first = false;
    out += agent + ":" + to_string(value);
  }
  return out + "}";
}

std::string to_string(const Head& h) {
  if (const auto* a = std::get_if<AgentId>(&h)) return *a;
  return std::string(to_string(std::get<Choice>(h)));
}

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::Game: return "game";
    case Kind::Profile: return "profile";
    case Kind::Strategy: return "strategy";
  }
  return "?";
}

// ---------------------------------------------------------------------------

RawSystem& RawSystem::leaf(std::string name, PayoffMap payoff) {
  equations.push_back({std::move(name), Leaf{std::move(payoff)}});
  return *this;
}

RawSystem& RawSystem::node(std::string name, AgentId owner, std::string down,
                           std::string right) {
  equations.push_back(
      {std::move(name), RawBranch{std::move(owner), std::nullopt, std::move(down), std::move(right)}});
  return *this;
}

RawSystem& RawSystem::node(std::string name, AgentId owner, Choice chosen, std::string down,
                           std::string right) {
  equations.push_back(
      {std::move(name), RawBranch{std::move(owner), chosen, std::move(down), std::move(right)}});
  return *this;
}

RawSystem& RawSystem::move(std::string name, Choice c, std::string down, std::string right) {
  equations.push_back(
      {std::move(name), RawBranch{c, std::nullopt, std::move(down), std::move(right)}});
  return *this;
}

RawSystem& RawSystem::alias(std::string name, std::string target) {
  equations.push_back({std::move(name), RawAlias{std::move(target)}});
  return *this;
}

// ---------------------------------------------------------------------------

std::optional<NodeIndex> EquationSystem::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<NodeIndex>(it - names_.begin());
}

NodeIndex EquationSystem::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnresolvedReference, "no node named '" + std::string(name) + "'");
}

std::vector<NodeIndex> EquationSystem::reachable(NodeIndex from) const {
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<NodeIndex> stack{from};
  seen.at(from) = 1;
  while (!stack.empty()) {
    NodeIndex i = stack.back();
    stack.pop_back();
    if (const auto* b = std::get_if<Branch>(&nodes_[i])) {
      for (NodeIndex c : b->child) {
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
      }
    }
  }
  std::vector<NodeIndex> out;
  for (NodeIndex i = 0; i < nodes_.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

EquationSystem EquationSystem::rooted_at(NodeIndex r) const {
  if (r >= nodes_.size())
    throw Error(ErrorCode::UnresolvedReference, "root index out of range");
  EquationSystem copy = *this;
  copy.root_ = r;
  return copy;
}

namespace {

using RawRhs = std::variant<Leaf, RawBranch, RawAlias>;

[[noreturn]] void malformed(const std::string& name, const std::string& why) {
  throw Error(ErrorCode::MalformedNode, "node '" + name + "': " + why);
}

}  // namespace

EquationSystem validate_system(const RawSystem& raw) {
  if (raw.equations.empty()) throw Error(ErrorCode::MalformedNode, "system has no equations");

  std::set<AgentId> agents;
  for (const auto& a : raw.agents) {
    if (a.empty()) throw Error(ErrorCode::UnknownAgent, "empty agent name");
    if (!agents.insert(a).second)
      throw Error(ErrorCode::DuplicateName, "agent '" + a + "' declared twice");
  }

  std::map<std::string, const RawRhs*> by_name;
  for (const auto& eq : raw.equations) {
    if (eq.name.empty()) throw Error(ErrorCode::MalformedNode, "empty node name");
    if (!by_name.emplace(eq.name, &eq.rhs).second)
      throw Error(ErrorCode::DuplicateName, "node '" + eq.name + "' defined twice");
  }

  // Aliases are resolved to the constructor at the end of their chain. A
  // chain that loops never reaches a constructor: that is the unguarded case.
  auto resolve = [&](const std::string& start) -> const RawRhs* {
    std::vector<std::string> chain{start};
    const RawRhs* rhs = by_name.at(start);
    while (const auto* a = std::get_if<RawAlias>(rhs)) {
      if (std::find(chain.begin(), chain.end(), a->target) != chain.end()) {
        std::string msg;
        for (const auto& n : chain) msg += n + " = ";
        throw Error(ErrorCode::UnguardedCycle, msg + a->target);
      }
      auto it = by_name.find(a->target);
      if (it == by_name.end())
        throw Error(ErrorCode::UnresolvedReference,
                    "'" + a->target + "' referenced from '" + chain.back() + "'");
      chain.push_back(a->target);
      rhs = it->second;
    }
    return rhs;
  };

  EquationSystem sys;
  sys.kind_ = raw.kind;
  sys.agents_ = agents;
  for (const auto& [name, rhs] : by_name) sys.names_.push_back(name);

  auto index_of = [&](const std::string& ref, const std::string& from) {
    auto i = sys.find(ref);
    if (!i)
      throw Error(ErrorCode::UnresolvedReference,
                  "'" + ref + "' referenced from '" + from + "'");
    return *i;
  };

  sys.nodes_.reserve(by_name.size());
  for (const auto& [name, unused] : by_name) {
    const RawRhs* rhs = resolve(name);
    if (const auto* leaf = std::get_if<Leaf>(rhs)) {
      bool same_domain = leaf->payoff.size() == agents.size() &&
                         std::all_of(leaf->payoff.begin(), leaf->payoff.end(),
                                     [&](const auto& kv) { return agents.contains(kv.first); });
      if (!same_domain)
        throw Error(ErrorCode::PayoffDomainMismatch,
                    "leaf '" + name + "' has payoff " + to_string(leaf->payoff) +
                        " over a domain different from the declared agents");
      sys.nodes_.emplace_back(*leaf);
      continue;
    }
    const auto& rb = std::get<RawBranch>(*rhs);
    if (const auto* owner = std::get_if<AgentId>(&rb.head)) {
      if (!agents.contains(*owner))
        throw Error(ErrorCode::UnknownAgent, "'" + *owner + "' at node '" + name + "'");
    } else if (raw.kind != Kind::Strategy) {
      malformed(name, "only strategies may carry a choice as head");
    }
    if (raw.kind == Kind::Profile && !rb.chosen) malformed(name, "profile branch without a chosen move");
    if (raw.kind != Kind::Profile && rb.chosen)
      malformed(name, std::string(to_string(raw.kind)) + " branch with a chosen move");
    Branch b{rb.head, rb.chosen, {index_of(rb.down, name), index_of(rb.right, name)}};
    sys.nodes_.emplace_back(std::move(b));
  }

  const std::string& root = raw.root.empty() ? raw.equations.front().name : raw.root;
  sys.root_ = index_of(root, "<root>");
  return sys;
}

RawSystem to_raw(const EquationSystem& sys) {
  RawSystem raw;
  raw.kind = sys.kind();
  raw.agents.assign(sys.agents().begin(), sys.agents().end());
  auto emit = [&](NodeIndex i) {
    if (sys.is_leaf(i)) {
      raw.leaf(sys.name(i), sys.leaf(i).payoff);
    } else {
      const Branch& b = sys.branch(i);
      raw.equations.push_back(
          {sys.name(i), RawBranch{b.head, b.chosen, sys.name(b.down()), sys.name(b.right())}});
    }
  };
  emit(sys.root());
  for (NodeIndex i = 0; i < sys.size(); ++i)
    if (i != sys.root()) emit(i);
  raw.root = sys.name(sys.root());
  return raw;
}

// ---------------------------------------------------------------------------

FiniteTree FiniteTree::leaf(PayoffMap p) {
  FiniteTree t;
  t.tag = Tag::Leaf;
  t.payoff = std::move(p);
  return t;
}

FiniteTree FiniteTree::branch(Head h, std::optional<Choice> c, FiniteTree down, FiniteTree right) {
  FiniteTree t;
  t.tag = Tag::Branch;
  t.head = std::move(h);
  t.chosen = c;
  t.children.reserve(2);
  t.children.push_back(std::move(down));
  t.children.push_back(std::move(right));
  return t;
}

bool FiniteTree::has_cut() const {
  if (is_cut()) return true;
  return std::any_of(children.begin(), children.end(), [](const auto& c) { return c.has_cut(); });
}

std::size_t FiniteTree::branch_count() const {
  if (!is_branch()) return 0;
  return 1 + down().branch_count() + right().branch_count();
}

std::size_t FiniteTree::height() const {
  if (!is_branch()) return 0;
  return 1 + std::max(down().height(), right().height());
}

std::string to_string(const FiniteTree& t) {
  switch (t.tag) {
    case FiniteTree::Tag::Cut: return "...";
    case FiniteTree::Tag::Leaf: return "leaf" + to_string(t.payoff);
    case FiniteTree::Tag::Branch: {
      std::string out = to_string(t.head) + "(";
      for (Choice c : kChoices) {
        if (c == Choice::Right) out += ", ";
        out += std::string(to_string(c));
        if (t.chosen == c) out += "!";
        out += " -> " + to_string(t.next(c));
      }
      return out + ")";
    }
  }
  return "?";
}

FiniteTree unfold(const EquationSystem& sys, NodeIndex node, std::size_t depth) {
  if (sys.is_leaf(node)) return FiniteTree::leaf(sys.leaf(node).payoff);
  if (depth == 0) return FiniteTree::cut();
  const Branch& b = sys.branch(node);
  return FiniteTree::branch(b.head, b.chosen, unfold(sys, b.down(), depth - 1),
                            unfold(sys, b.right(), depth - 1));
}

bool is_acyclic(const EquationSystem& sys, NodeIndex from) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<char> state(sys.size(), 0);
  std::vector<std::pair<NodeIndex, std::size_t>> stack{{from, 0}};
  state[from] = 1;
  while (!stack.empty()) {
    auto& [i, next] = stack.back();
    if (sys.is_leaf(i) || next == 2) {
      state[i] = 2;
      stack.pop_back();
      continue;
    }
    NodeIndex c = sys.branch(i).child[next++];
    if (state[c] == 1) return false;
    if (state[c] == 0) {
      state[c] = 1;
      stack.emplace_back(c, 0);
    }
  }
  return true;
}

FiniteTree to_tree(const EquationSystem& sys, NodeIndex node) {
  if (!is_acyclic(sys, node))
    throw Error(ErrorCode::NotFinite, "a cycle is reachable from '" + sys.name(node) + "'");
  // Acyclic, so the unfolding stabilizes once depth reaches the node count.
  return unfold(sys, node, sys.size() + 1);
}

EquationSystem from_tree(const FiniteTree& tree, Kind kind, const std::set<AgentId>& agents) {
  if (tree.has_cut()) throw Error(ErrorCode::NotFinite, "tree contains a cut-point");
  RawSystem raw;
  raw.kind = kind;
  raw.agents.assign(agents.begin(), agents.end());
  std::size_t counter = 0;
  auto build = [&](auto&& self, const FiniteTree& t) -> std::string {
    std::string name = "n" + std::to_string(counter++);
    if (t.is_leaf()) {
      raw.leaf(name, t.payoff);
      return name;
    }
    std::size_t slot_index = raw.equations.size();
    raw.equations.push_back({name, RawAlias{}});  // placeholder keeps preorder
    std::string d = self(self, t.down());
    std::string r = self(self, t.right());
    raw.equations[slot_index].rhs = RawBranch{t.head, t.chosen, d, r};
    return name;
  };
  build(build, tree);
  return validate_system(raw);
}

}  // namespace coindgame
