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

#ifndef COINDGAME_ZERO_ONE_HPP
#define COINDGAME_ZERO_ONE_HPP

// The 0,1-game: an infinite comb where A and B alternate, stopping pays
// f01 = (A:0, B:1) at A's nodes and f10 = (A:1, B:0) at B's nodes.

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "coindgame/equilibria.hpp"
#include "coindgame/predicates.hpp"
#include "coindgame/transform.hpp"

namespace coindgame {

EquationSystem build_01_game();

struct CanonicalProfiles {
  EquationSystem s10a;  // A continues, B stops
  EquationSystem s10b;
  EquationSystem s01a;  // A stops, B continues
  EquationSystem s01b;
};
CanonicalProfiles canonical_profiles();

struct EscalationSystems {
  EquationSystem st_a;   // A always continues, full for A
  EquationSystem st_b;   // B always continues, full for B
  EquationSystem s_a;    // their sum, rooted at A's node
  EquationSystem s_b;    // the same profile rooted at B's node
};
EscalationSystems escalation_strategies();

// ---------------------------------------------------------------------------
// Eventually periodic move sequences on the comb. Position i belongs to A
// when i is even and to B when odd. Canonical words are in bijection with
// bisimilarity classes of 0,1-profiles that are eventually periodic.
struct CombProfileWord {
  std::vector<Choice> prefix;
  std::vector<Choice> cycle;  // non-empty

  Choice at(std::size_t position) const;

  friend bool operator==(const CombProfileWord&, const CombProfileWord&) = default;
  // Shorter prefix first, then shorter cycle, then lexicographic (d < r).
  friend std::strong_ordering operator<=>(const CombProfileWord& a, const CombProfileWord& b);
};

std::string to_string(const CombProfileWord& w);  // e.g. "d(rd)" or "(r)"

// Minimal cycle (primitive root), then the prefix is shortened as far as the
// sequence allows. Throws InvalidArgument on an empty cycle.
CombProfileWord canonicalize(CombProfileWord w);

EquationSystem word_to_profile(const CombProfileWord& w);

// Reads the move sequence of an S0-shaped profile. Throws NotCombShaped.
CombProfileWord profile_to_word(const EquationSystem& profile, NodeIndex node);
inline CombProfileWord profile_to_word(const EquationSystem& profile) {
  return profile_to_word(profile, profile.root());
}

// All canonical words with prefix length < max_prefix and cycle length in
// [1, max_cycle], in word order.
std::vector<CombProfileWord> enumerate_words(std::size_t max_prefix, std::size_t max_cycle);

// ---------------------------------------------------------------------------

struct EscalationResult {
  bool escalates = false;
  EquationSystem profile;
};

// Sums the family and reports whether the sum fails to converge.
EscalationResult escalation_check(const StrategyFamily& family);

struct WordFlags {
  CombProfileWord word;
  bool spe = false;
  bool acbes = false;
  bool sacbes = false;
  bool sbcaes = false;
  bool strongly_convergent = false;
  PayoffResult payoff;
};

std::vector<WordFlags> spe_enumerate_01(std::size_t max_prefix, std::size_t max_cycle);

using SpeChecker = std::function<bool(const EquationSystem&, NodeIndex)>;

enum class Verdict { ConsistentAtBound, Refuted };
std::string_view to_string(Verdict v);

struct ConjectureReport {
  std::size_t max_prefix = 0;
  std::size_t max_cycle = 0;
  std::size_t profiles_checked = 0;
  std::vector<CombProfileWord> counterexamples;
  Verdict verdict = Verdict::ConsistentAtBound;
};

// Compares SPE with SAcBes or SBcAes on every enumerated word. A bounded run
// never proves the characterization; it is consistent at the bound or not.
ConjectureReport conjecture_check(std::size_t max_prefix, std::size_t max_cycle,
                                  const SpeChecker& spe_checker = is_spe);

// ---------------------------------------------------------------------------
// Finite truncations of the 0,1-game: `blocks` A/B pairs, then a tail leaf,
// f01 for the F family and f10 for the K family.

enum class Family { F, K };
std::string_view to_string(Family f);

struct TruncationShape {
  Family family = Family::F;
  std::size_t blocks = 1;
};

FiniteTree truncate_family(const TruncationShape& shape);

// Every labeling of a finite game tree, Down before Right, in preorder.
std::vector<FiniteTree> all_labelings(const FiniteTree& game);

struct TruncationRow {
  Family family = Family::F;
  std::size_t blocks = 0;
  std::size_t equilibria = 0;
  std::vector<PayoffMap> payoffs;  // distinct equilibrium payoffs
  bool continuer_always_right = false;  // B in F, A in K
  bool other_agent_free = false;        // both moves occur at every node of the other agent
  bool matches_characterization = false;  // BI set == characterized set
  std::optional<bool> matches_brute_force;  // set when blocks <= brute-force limit
};

struct TruncationReport {
  std::vector<TruncationRow> rows;
  // The two families force different agents to continue, so their
  // extrapolations to the infinite game disagree.
  bool parity_inconsistent = false;
};

TruncationReport truncation_report(std::size_t max_blocks, std::size_t brute_force_limit = 3);
TruncationRow truncation_row(const TruncationShape& shape, bool brute_force);

// ---------------------------------------------------------------------------

struct PayrollNote {
  Rational bound;
  Rational max_payoff;
  bool payoffs_within_bound = false;
  bool escalates = false;
  std::string note;
};

PayrollNote bounded_payroll_note(const Rational& bound);

}  // namespace coindgame

#endif  // COINDGAME_ZERO_ONE_HPP
