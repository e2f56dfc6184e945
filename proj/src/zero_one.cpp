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

#include "coindgame/zero_one.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coindgame/bisim.hpp"
#include "coindgame/error.hpp"

namespace coindgame {

namespace {

RawSystem base_01(Kind kind) {
  RawSystem raw;
  raw.kind = kind;
  raw.agents = {kAgentA, kAgentB};
  return raw;
}

const AgentId& owner_at(std::size_t position) { return position % 2 == 0 ? kAgentA : kAgentB; }

}  // namespace

EquationSystem build_01_game() {
  RawSystem raw = base_01(Kind::Game);
  raw.node("G01", kAgentA, "f01", "G10")
      .node("G10", kAgentB, "f10", "G01")
      .leaf("f01", payoff_01())
      .leaf("f10", payoff_10());
  return validate_system(raw);
}

CanonicalProfiles canonical_profiles() {
  auto make = [](const std::string& root) {
    RawSystem raw = base_01(Kind::Profile);
    raw.node("s10a", kAgentA, Choice::Right, "f01", "s10b")
        .node("s10b", kAgentB, Choice::Down, "f10", "s10a")
        .node("s01a", kAgentA, Choice::Down, "f01", "s01b")
        .node("s01b", kAgentB, Choice::Right, "f10", "s01a")
        .leaf("f01", payoff_01())
        .leaf("f10", payoff_10());
    raw.root = root;
    return minimize(validate_system(raw));
  };
  return {make("s10a"), make("s10b"), make("s01a"), make("s01b")};
}

EscalationSystems escalation_strategies() {
  RawSystem a = base_01(Kind::Strategy);
  a.move("stA", Choice::Right, "f01", "stA'")
      .node("stA'", kAgentB, "f10", "stA")
      .leaf("f01", payoff_01())
      .leaf("f10", payoff_10());
  RawSystem b = base_01(Kind::Strategy);
  b.node("stB", kAgentA, "f01", "stB'")
      .move("stB'", Choice::Right, "f10", "stB")
      .leaf("f01", payoff_01())
      .leaf("f10", payoff_10());
  RawSystem s = base_01(Kind::Profile);
  s.node("sAinf", kAgentA, Choice::Right, "f01", "sBinf")
      .node("sBinf", kAgentB, Choice::Right, "f10", "sAinf")
      .leaf("f01", payoff_01())
      .leaf("f10", payoff_10());
  EquationSystem s_a = validate_system(s);
  EquationSystem s_b = s_a.rooted_at(s_a.at("sBinf"));
  return {validate_system(a), validate_system(b), std::move(s_a), std::move(s_b)};
}

// ---------------------------------------------------------------------------

Choice CombProfileWord::at(std::size_t position) const {
  if (position < prefix.size()) return prefix[position];
  return cycle.at((position - prefix.size()) % cycle.size());
}

std::strong_ordering operator<=>(const CombProfileWord& a, const CombProfileWord& b) {
  if (auto c = a.prefix.size() <=> b.prefix.size(); c != 0) return c;
  if (auto c = a.cycle.size() <=> b.cycle.size(); c != 0) return c;
  if (auto c = a.prefix <=> b.prefix; c != 0) return c;
  return a.cycle <=> b.cycle;
}

std::string to_string(const CombProfileWord& w) {
  std::string out;
  for (Choice c : w.prefix) out += to_string(c);
  out += "(";
  for (Choice c : w.cycle) out += to_string(c);
  return out + ")";
}

CombProfileWord canonicalize(CombProfileWord w) {
  if (w.cycle.empty()) throw Error(ErrorCode::InvalidArgument, "word with an empty cycle");
  const std::size_t n = w.cycle.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool repeats = true;
    for (std::size_t i = period; i < n && repeats; ++i) repeats = w.cycle[i] == w.cycle[i - period];
    if (repeats) {
      w.cycle.resize(period);
      break;
    }
  }
  while (!w.prefix.empty() && w.prefix.back() == w.cycle.back()) {
    w.prefix.pop_back();
    std::rotate(w.cycle.rbegin(), w.cycle.rbegin() + 1, w.cycle.rend());
  }
  return w;
}

EquationSystem word_to_profile(const CombProfileWord& w) {
  if (w.cycle.empty()) throw Error(ErrorCode::InvalidArgument, "word with an empty cycle");
  // An odd cycle alternates owners from one lap to the next, so it is laid
  // out twice to return to the same owner.
  const std::size_t lap = w.cycle.size() % 2 == 0 ? w.cycle.size() : 2 * w.cycle.size();
  const std::size_t total = w.prefix.size() + lap;
  auto name = [&](std::size_t position) {
    return position < w.prefix.size() ? "p" + std::to_string(position)
                                      : "c" + std::to_string(position - w.prefix.size());
  };
  RawSystem raw = base_01(Kind::Profile);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t next = i + 1 < total ? i + 1 : w.prefix.size();
    bool a = owner_at(i) == kAgentA;
    raw.node(name(i), owner_at(i), w.at(i), a ? "f01" : "f10", name(next));
  }
  raw.leaf("f01", payoff_01()).leaf("f10", payoff_10());
  return validate_system(raw);
}

CombProfileWord profile_to_word(const EquationSystem& profile, NodeIndex node) {
  if (classify_01(profile, node) != Shape01::S0)
    throw Error(ErrorCode::NotCombShaped, "'" + profile.name(node) + "' is not an S0 profile of the 0,1-game");
  std::map<NodeIndex, std::size_t> first_seen;
  std::vector<Choice> moves;
  NodeIndex i = node;
  while (!first_seen.contains(i)) {
    first_seen.emplace(i, moves.size());
    moves.push_back(*profile.branch(i).chosen);
    i = profile.branch(i).right();
  }
  std::size_t start = first_seen.at(i);
  CombProfileWord w{{moves.begin(), moves.begin() + static_cast<std::ptrdiff_t>(start)},
                    {moves.begin() + static_cast<std::ptrdiff_t>(start), moves.end()}};
  return canonicalize(std::move(w));
}

std::vector<CombProfileWord> enumerate_words(std::size_t max_prefix, std::size_t max_cycle) {
  auto spell = [](std::size_t bits, std::size_t length) {
    std::vector<Choice> out(length);
    for (std::size_t k = 0; k < length; ++k)
      out[k] = (bits >> (length - 1 - k)) & 1 ? Choice::Right : Choice::Down;
    return out;
  };
  std::vector<CombProfileWord> out;
  for (std::size_t p = 0; p < max_prefix; ++p) {
    for (std::size_t c = 1; c <= max_cycle; ++c) {
      for (std::size_t pb = 0; pb < (std::size_t{1} << p); ++pb) {
        for (std::size_t cb = 0; cb < (std::size_t{1} << c); ++cb) {
          CombProfileWord w{spell(pb, p), spell(cb, c)};
          if (canonicalize(w) == w) out.push_back(std::move(w));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

EscalationResult escalation_check(const StrategyFamily& family) {
  EquationSystem sum = sum_strategies(family);
  bool escalates = !converges(sum, sum.root());
  return {escalates, std::move(sum)};
}

std::vector<WordFlags> spe_enumerate_01(std::size_t max_prefix, std::size_t max_cycle) {
  std::vector<WordFlags> out;
  for (auto& w : enumerate_words(max_prefix, max_cycle)) {
    EquationSystem s = word_to_profile(w);
    NodeIndex root = s.root();
    WordFlags f;
    f.spe = is_spe(s, root);
    f.acbes = acbes(s, root, StopPattern::AcBes);
    f.sacbes = boxed_acbes(s, root, StopPattern::AcBes);
    f.sbcaes = boxed_acbes(s, root, StopPattern::BcAes);
    f.strongly_convergent = strongly_converges(s, root);
    f.payoff = payoff(s, root);
    f.word = std::move(w);
    out.push_back(std::move(f));
  }
  return out;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::ConsistentAtBound ? "consistent-at-bound" : "refuted";
}

ConjectureReport conjecture_check(std::size_t max_prefix, std::size_t max_cycle,
                                  const SpeChecker& spe_checker) {
  if (max_prefix < 1 || max_cycle < 1) throw Error(ErrorCode::InvalidArgument, "bounds must be >= 1");
  ConjectureReport report;
  report.max_prefix = max_prefix;
  report.max_cycle = max_cycle;
  for (auto& w : enumerate_words(max_prefix, max_cycle)) {
    EquationSystem s = word_to_profile(w);
    bool spe_holds = spe_checker(s, s.root());
    bool pattern = boxed_acbes(s, s.root(), StopPattern::AcBes) ||
                   boxed_acbes(s, s.root(), StopPattern::BcAes);
    ++report.profiles_checked;
    if (spe_holds != pattern) report.counterexamples.push_back(std::move(w));
  }
  report.verdict = report.counterexamples.empty() ? Verdict::ConsistentAtBound : Verdict::Refuted;
  return report;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Family f) { return f == Family::F ? "F" : "K"; }

FiniteTree truncate_family(const TruncationShape& shape) {
  if (shape.blocks < 1) throw Error(ErrorCode::InvalidArgument, "a truncation has at least one block");
  FiniteTree t = FiniteTree::leaf(shape.family == Family::F ? payoff_01() : payoff_10());
  for (std::size_t k = 0; k < shape.blocks; ++k) {
    t = FiniteTree::branch(kAgentB, std::nullopt, FiniteTree::leaf(payoff_10()), std::move(t));
    t = FiniteTree::branch(kAgentA, std::nullopt, FiniteTree::leaf(payoff_01()), std::move(t));
  }
  return t;
}

std::vector<FiniteTree> all_labelings(const FiniteTree& game) {
  if (game.is_cut()) throw Error(ErrorCode::NotFinite, "tree contains a cut-point");
  if (game.is_leaf()) return {game};
  std::vector<FiniteTree> downs = all_labelings(game.down());
  std::vector<FiniteTree> rights = all_labelings(game.right());
  std::vector<FiniteTree> out;
  for (Choice c : kChoices)
    for (const auto& d : downs)
      for (const auto& r : rights) out.push_back(FiniteTree::branch(game.head, c, d, r));
  return out;
}

namespace {

// Moves of each owner in preorder.
void collect_moves(const FiniteTree& t, const AgentId& agent, std::vector<Choice>& out) {
  if (!t.is_branch()) return;
  if (std::get<AgentId>(t.head) == agent) out.push_back(*t.chosen);
  collect_moves(t.down(), agent, out);
  collect_moves(t.right(), agent, out);
}

std::set<std::string> keys(const std::vector<FiniteTree>& trees) {
  std::set<std::string> out;
  for (const auto& t : trees) out.insert(to_string(t));
  return out;
}

}  // namespace

TruncationRow truncation_row(const TruncationShape& shape, bool brute_force) {
  const FiniteTree game = truncate_family(shape);
  const AgentId& continuer = shape.family == Family::F ? kAgentB : kAgentA;
  const AgentId& free_agent = shape.family == Family::F ? kAgentA : kAgentB;
  std::vector<FiniteTree> equilibria = enumerate_bi(game);

  TruncationRow row;
  row.family = shape.family;
  row.blocks = shape.blocks;
  row.equilibria = equilibria.size();

  std::set<PayoffMap> distinct;
  row.continuer_always_right = true;
  std::vector<std::set<Choice>> free_moves;
  for (const auto& eq : equilibria) {
    distinct.insert(tree_payoff(eq));
    std::vector<Choice> moves;
    collect_moves(eq, continuer, moves);
    for (Choice c : moves) row.continuer_always_right &= c == Choice::Right;
    std::vector<Choice> others;
    collect_moves(eq, free_agent, others);
    free_moves.resize(others.size());
    for (std::size_t k = 0; k < others.size(); ++k) free_moves[k].insert(others[k]);
  }
  row.payoffs.assign(distinct.begin(), distinct.end());
  row.other_agent_free =
      !free_moves.empty() &&
      std::all_of(free_moves.begin(), free_moves.end(), [](const auto& s) { return s.size() == 2; });

  // The shape-defined family: the continuer always plays r, the other agent
  // anything.
  std::vector<FiniteTree> shaped;
  for (auto& l : all_labelings(game)) {
    std::vector<Choice> moves;
    collect_moves(l, continuer, moves);
    if (std::all_of(moves.begin(), moves.end(), [](Choice c) { return c == Choice::Right; }))
      shaped.push_back(std::move(l));
  }
  row.matches_characterization = keys(shaped) == keys(equilibria);

  if (brute_force) {
    std::vector<FiniteTree> filtered;
    for (auto& l : all_labelings(game))
      if (is_bi(l)) filtered.push_back(std::move(l));
    row.matches_brute_force = keys(filtered) == keys(equilibria) && filtered.size() == equilibria.size();
  }
  return row;
}

TruncationReport truncation_report(std::size_t max_blocks, std::size_t brute_force_limit) {
  if (max_blocks < 1) throw Error(ErrorCode::InvalidArgument, "max_blocks must be >= 1");
  TruncationReport report;
  bool f_forces_b = true;
  bool k_forces_a = true;
  for (std::size_t n = 1; n <= max_blocks; ++n) {
    for (Family fam : {Family::F, Family::K}) {
      TruncationRow row = truncation_row({fam, n}, n <= brute_force_limit);
      bool forced = row.continuer_always_right && row.other_agent_free;
      (fam == Family::F ? f_forces_b : k_forces_a) &= forced;
      report.rows.push_back(std::move(row));
    }
  }
  report.parity_inconsistent = f_forces_b && k_forces_a;
  return report;
}

// ---------------------------------------------------------------------------

PayrollNote bounded_payroll_note(const Rational& bound) {
  PayrollNote note;
  note.bound = bound;
  EquationSystem game = build_01_game();
  bool first = true;
  for (NodeIndex i : game.reachable()) {
    if (!game.is_leaf(i)) continue;
    for (const auto& [agent, value] : game.leaf(i).payoff) {
      if (first || value > note.max_payoff) note.max_payoff = value;
      first = false;
    }
  }
  note.payoffs_within_bound = note.max_payoff <= bound;
  EscalationSystems esc = escalation_strategies();
  note.escalates = escalation_check({{kAgentA, esc.st_a}, {kAgentB, esc.st_b}}).escalates;
  if (note.payoffs_within_bound) {
    note.note = note.escalates ? "every payoff is within the bound and escalation still occurs"
                               : "every payoff is within the bound and no escalation occurs";
  } else {
    note.note = "payoff " + to_string(note.max_payoff) + " exceeds the bound " + to_string(bound) +
                "; the bound does not apply to this game";
  }
  return note;
}

}  // namespace coindgame
