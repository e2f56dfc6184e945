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

#ifndef COINDGAME_SYSTEM_HPP
#define COINDGAME_SYSTEM_HPP

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "coindgame/types.hpp"

namespace coindgame {

struct Leaf {
  PayoffMap payoff;
  friend bool operator==(const Leaf&, const Leaf&) = default;
};

struct Branch {
  Head head;
  std::optional<Choice> chosen;  // set exactly for profiles
  std::array<NodeIndex, 2> child{};

  NodeIndex down() const { return child[0]; }
  NodeIndex right() const { return child[1]; }
  NodeIndex next(Choice c) const { return child[slot(c)]; }
  const AgentId& owner() const { return std::get<AgentId>(head); }

  friend bool operator==(const Branch&, const Branch&) = default;
};

using Node = std::variant<Leaf, Branch>;

// ---------------------------------------------------------------------------
// Unvalidated input. Equations refer to each other by name; an equation may
// also be a bare alias of another name, which validation resolves or rejects.

struct RawBranch {
  Head head;
  std::optional<Choice> chosen;
  std::string down;
  std::string right;
};

struct RawAlias {
  std::string target;
};

struct RawEquation {
  std::string name;
  std::variant<Leaf, RawBranch, RawAlias> rhs;
};

struct RawSystem {
  Kind kind = Kind::Game;
  std::vector<AgentId> agents;
  std::vector<RawEquation> equations;
  std::string root;  // empty means the first equation

  RawSystem& leaf(std::string name, PayoffMap payoff);
  RawSystem& node(std::string name, AgentId owner, std::string down, std::string right);
  RawSystem& node(std::string name, AgentId owner, Choice chosen, std::string down,
                  std::string right);
  RawSystem& move(std::string name, Choice c, std::string down, std::string right);
  RawSystem& alias(std::string name, std::string target);
};

// ---------------------------------------------------------------------------
// A closed, guarded, finite system of equations over one node kind. It is
// the finite presentation of a rational (possibly infinite) tree rooted at
// root(). Instances are immutable once built by validate_system.
class EquationSystem {
 public:
  Kind kind() const { return kind_; }
  const std::set<AgentId>& agents() const { return agents_; }
  bool has_agent(const AgentId& a) const { return agents_.contains(a); }

  std::size_t size() const { return nodes_.size(); }
  NodeIndex root() const { return root_; }

  const Node& node(NodeIndex i) const { return nodes_.at(i); }
  const std::string& name(NodeIndex i) const { return names_.at(i); }
  std::optional<NodeIndex> find(std::string_view name) const;
  // Throws UnresolvedReference when the name is not defined.
  NodeIndex at(std::string_view name) const;

  bool is_leaf(NodeIndex i) const { return std::holds_alternative<Leaf>(nodes_[i]); }
  const Leaf& leaf(NodeIndex i) const { return std::get<Leaf>(nodes_[i]); }
  const Branch& branch(NodeIndex i) const { return std::get<Branch>(nodes_[i]); }

  // Nodes reachable from `from` (including it), in increasing index order.
  std::vector<NodeIndex> reachable(NodeIndex from) const;
  std::vector<NodeIndex> reachable() const { return reachable(root_); }

  // The same system with a different root.
  EquationSystem rooted_at(NodeIndex r) const;

 private:
  friend EquationSystem validate_system(const RawSystem& raw);

  Kind kind_ = Kind::Game;
  std::set<AgentId> agents_;
  std::vector<std::string> names_;
  std::vector<Node> nodes_;
  NodeIndex root_ = 0;
};

// Checks closure, guardedness, node-kind shape and payoff domains.
// Throws Error with UnresolvedReference, UnguardedCycle,
// PayoffDomainMismatch, DuplicateName, UnknownAgent or MalformedNode.
EquationSystem validate_system(const RawSystem& raw);

// Converts a validated system back to raw form (names preserved, root first).
RawSystem to_raw(const EquationSystem& sys);

// ---------------------------------------------------------------------------
// Finite trees: depth-limited unfoldings, and the finite games of the
// backward-induction tools. Cut-points mark where unfolding stopped; they are
// never payoffs.

struct FiniteTree {
  enum class Tag { Cut, Leaf, Branch };

  Tag tag = Tag::Cut;
  PayoffMap payoff;              // Leaf
  Head head;                     // Branch
  std::optional<Choice> chosen;  // Branch of a profile
  std::vector<FiniteTree> children;  // Branch: {down, right}

  static FiniteTree cut() { return FiniteTree{}; }
  static FiniteTree leaf(PayoffMap p);
  static FiniteTree branch(Head h, std::optional<Choice> c, FiniteTree down, FiniteTree right);

  bool is_cut() const { return tag == Tag::Cut; }
  bool is_leaf() const { return tag == Tag::Leaf; }
  bool is_branch() const { return tag == Tag::Branch; }
  const FiniteTree& down() const { return children.at(0); }
  const FiniteTree& right() const { return children.at(1); }
  const FiniteTree& next(Choice c) const { return children.at(slot(c)); }

  bool has_cut() const;
  std::size_t branch_count() const;
  std::size_t height() const;  // number of Branch levels

  friend bool operator==(const FiniteTree&, const FiniteTree&) = default;
};

std::string to_string(const FiniteTree& t);

// Unfolds `node` for `depth` Branch levels. Leaves are always kept; a Branch
// met after the budget is exhausted becomes a cut-point.
FiniteTree unfold(const EquationSystem& sys, NodeIndex node, std::size_t depth);

// Full unfolding of an acyclic system. Throws NotFinite on a reachable cycle.
FiniteTree to_tree(const EquationSystem& sys, NodeIndex node);

// Builds a system from a cut-free tree; nodes are named n0, n1, ... in
// preorder. Throws NotFinite if the tree contains a cut-point.
EquationSystem from_tree(const FiniteTree& tree, Kind kind, const std::set<AgentId>& agents);

bool is_acyclic(const EquationSystem& sys, NodeIndex from);

}  // namespace coindgame

#endif  // COINDGAME_SYSTEM_HPP
