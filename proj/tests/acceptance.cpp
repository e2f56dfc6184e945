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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "coindgame/bisim.hpp"
#include "coindgame/dsl.hpp"
#include "coindgame/random.hpp"
#include "coindgame/zero_one.hpp"
#include "fuzz.hpp"
#include "oracles.hpp"

using namespace coindgame;

namespace {

struct Criterion {
  bool pass = false;
  std::string detail;
};

constexpr std::uint64_t kSeed = 20260101;

Criterion escalation() {
  EscalationSystems e = escalation_strategies();
  EquationSystem g = build_01_game();
  EscalationResult r = escalation_check({{"A", e.st_a}, {"B", e.st_b}});
  std::vector<bool> checks = {
      r.escalates,
      bisimilar(r.profile, e.s_a),
      is_full(e.st_a, "A") && is_full(e.st_b, "B"),
      bisimilar(strategy_to_game(e.st_a, "A"), g),
      bisimilar(strategy_to_game(e.st_b, "B"), g),
      bisimilar(underlying_game(e.s_a), g),
  };
  std::size_t ok = std::count(checks.begin(), checks.end(), true);
  return {ok == checks.size(), std::to_string(ok) + "/" + std::to_string(checks.size()) + " assertions hold"};
}

Criterion canonical_equilibria() {
  CanonicalProfiles c = canonical_profiles();
  EscalationSystems e = escalation_strategies();
  std::size_t ok = 0, total = 0;
  auto expect = [&](bool b) {
    ++total;
    ok += b;
  };
  for (const EquationSystem* s : {&c.s10a, &c.s10b}) {
    expect(is_spe(*s, s->root()));
    expect(oracle::spe(*s, s->root()));
    expect(boxed_acbes(*s, s->root(), StopPattern::AcBes));
    expect(strongly_converges(*s, s->root()));
  }
  PayoffResult p = payoff(c.s10a, c.s10a.root());
  expect(p.defined() && p.map() == PayoffMap{{"A", 1}, {"B", 0}});
  expect(!is_spe(e.s_a, e.s_a.root()));
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " assertions hold"};
}

Criterion strong_is_always_converges() {
  Rng rng(kSeed);
  std::size_t systems = 1000, nodes = 0, disagreements = 0;
  for (std::size_t k = 0; k < systems; ++k) {
    EquationSystem p = random_profile(rng, {12, 0.3, 2});
    PredicateValuation conv = convergence(p);
    PredicateValuation strong = strong_convergence(p);
    for (NodeIndex i = 0; i < p.size(); ++i) {
      ++nodes;
      bool boxed = always(p, conv, i);
      if (strong[i] != boxed || strong[i] != oracle::strongly_converges(p, i)) ++disagreements;
    }
  }
  std::ostringstream os;
  os << systems << " systems, " << nodes << " nodes, " << disagreements << " disagreements";
  return {disagreements == 0, os.str()};
}

Criterion spe_implies_nash() {
  Rng rng(kSeed + 1);
  std::size_t systems = 0, spe_roots = 0, violations = 0;
  while (systems < 1000) {
    // Half arbitrary profiles, half built to be subgame perfect.
    EquationSystem p = systems % 2 ? random_spe_profile(rng) : random_profile(rng);
    if (!payoff(p, p.root()).defined()) continue;
    ++systems;
    if (!is_spe(p, p.root())) continue;
    ++spe_roots;
    if (!nash(p, p.root()).holds) ++violations;
  }
  std::ostringstream os;
  os << systems << " systems with defined root payoff, " << spe_roots << " SPE, " << violations << " not Nash";
  return {violations == 0 && spe_roots >= 500, os.str()};
}

Criterion nash_oracle() {
  Rng rng(kSeed + 2);
  std::size_t profiles = 500, disagreements = 0, failing = 0;
  for (std::size_t k = 0; k < profiles; ++k) {
    FiniteTree t = random_labeling(rng, random_game_tree(rng, 4));
    EquationSystem p = minimize(from_tree(t, Kind::Profile, {"A", "B"}));
    bool expect = oracle::nash_tree(t, p.agents());
    failing += !expect;
    if (nash(p, p.root()).holds != expect) ++disagreements;
  }
  std::ostringstream os;
  os << profiles << " acyclic profiles (" << failing << " not Nash), " << disagreements << " disagreements";
  return {disagreements == 0, os.str()};
}

Criterion acbes_payoff() {
  std::size_t words = 0, acbes_words = 0, exceptions = 0;
  for (const WordFlags& f : spe_enumerate_01(8, 6)) {
    ++words;
    if (f.acbes != oracle::WordOracle{f.word}.acbes(0)) ++exceptions;
    if (!f.acbes) continue;
    ++acbes_words;
    if (!f.payoff.defined() || f.payoff.map() != payoff_10()) ++exceptions;
  }
  std::ostringstream os;
  os << words << " words, " << acbes_words << " with AcBes, " << exceptions << " exceptions";
  return {exceptions == 0 && acbes_words > 0, os.str()};
}

Criterion conjecture() {
  ConjectureReport r = conjecture_check(8, 6);
  // Mutant: accepts every strongly convergent profile, ignoring payoffs.
  ConjectureReport mutant =
      conjecture_check(8, 6, [](const EquationSystem& s, NodeIndex i) { return strongly_converges(s, i); });
  std::ostringstream os;
  os << r.profiles_checked << " words, verdict " << to_string(r.verdict) << ", " << r.counterexamples.size()
     << " counterexamples; mutant " << to_string(mutant.verdict) << " with " << mutant.counterexamples.size();
  if (!mutant.counterexamples.empty()) os << ", first " << to_string(mutant.counterexamples.front());
  bool ok = r.verdict == coindgame::Verdict::ConsistentAtBound && r.counterexamples.empty() &&
            mutant.verdict == coindgame::Verdict::Refuted && !mutant.counterexamples.empty();
  return {ok, os.str()};
}

void moves_of(const FiniteTree& t, const AgentId& agent, std::vector<Choice>& out) {
  if (!t.is_branch()) return;
  if (std::get<AgentId>(t.head) == agent) out.push_back(*t.chosen);
  moves_of(t.down(), agent, out);
  moves_of(t.right(), agent, out);
}

Criterion truncations() {
  std::size_t failures = 0, equilibria = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Family fam : {Family::F, Family::K}) {
      FiniteTree g = truncate_family({fam, n});
      AgentId continuer = fam == Family::F ? "B" : "A";
      PayoffMap expected = fam == Family::F ? payoff_01() : payoff_10();
      std::vector<FiniteTree> eq = enumerate_bi(g);
      equilibria += eq.size();
      for (const auto& t : eq) {
        std::vector<Choice> moves;
        moves_of(t, continuer, moves);
        if (std::count(moves.begin(), moves.end(), Choice::Down) != 0) ++failures;
        if (tree_payoff(t) != expected) ++failures;
      }
      if (n <= 3) {
        std::set<std::string> got, brute;
        for (const auto& t : eq) got.insert(to_string(t));
        for (const auto& t : oracle::bi_labelings(g)) brute.insert(to_string(t));
        if (got != brute || got.size() != eq.size()) ++failures;
      }
    }
  }
  TruncationReport rep = truncation_report(4);
  if (!rep.parity_inconsistent) ++failures;
  std::ostringstream os;
  os << equilibria << " equilibria over n = 1..4, parity inconsistency "
     << (rep.parity_inconsistent ? "flagged" : "not flagged") << ", " << failures << " failures";
  return {failures == 0, os.str()};
}

Criterion payroll() {
  PayrollNote n = bounded_payroll_note(1);
  return {n.payoffs_within_bound && n.escalates, n.note};
}

Criterion dsl_round_trip() {
  std::size_t corpus_systems = 0, random_systems = 0, failures = 0;
  for (const auto& entry : std::filesystem::directory_iterator(COINDGAME_CORPUS_DIR)) {
    if (entry.path().extension() != ".cg") continue;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    SourceFile f = parse(buf.str());
    SourceFile again = parse(render(f));
    for (std::size_t k = 0; k < f.declarations.size(); ++k) {
      ++corpus_systems;
      if (!bisimilar(again.declarations.at(k).system, f.declarations[k].system)) ++failures;
    }
  }
  Rng rng(kSeed + 3);
  for (; random_systems < 500; ++random_systems) {
    Kind kind = static_cast<Kind>(random_systems % 3);
    EquationSystem s = random_system(rng, kind, {12, 0.3, 1 + random_systems % 3});
    if (!bisimilar(parse(render(s, "s")).get("s").system, s)) ++failures;
  }
  fuzz::Outcome o = fuzz::run_invalid(rng, 500);
  std::ostringstream os;
  os << corpus_systems << " corpus systems and " << random_systems << " random systems round-trip with "
     << failures << " failures; " << o.rejected << " invalid inputs, " << o.unpositioned << " unpositioned, "
     << o.crashed << " crashes";
  return {failures == 0 && corpus_systems > 0 && o.rejected >= 500 && o.unpositioned == 0 && o.crashed == 0,
          os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
      {"escalation of the two infinite strategies", escalation},
      {"canonical equilibria", canonical_equilibria},
      {"strong convergence is always-convergence", strong_is_always_converges},
      {"SPE implies Nash", spe_implies_nash},
      {"Nash agrees with brute force", nash_oracle},
      {"AcBes forces payoff f10", acbes_payoff},
      {"conjecture harness", conjecture},
      {"cut-and-extrapolate", truncations},
      {"bounded payroll", payroll},
      {"DSL round-trip", dsl_round_trip},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Criterion v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (v.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first
         << "): " << v.detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    failed += !v.pass;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size()
            << std::endl;
  return failed ? 1 : 0;
}
