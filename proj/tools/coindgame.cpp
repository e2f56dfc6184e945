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

// Command-line front end.
//
// Exit codes: 0 the property holds (or the command succeeded), 1 it fails,
// 2 usage, parse or validation error, 3 semantic error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "coindgame/bisim.hpp"
#include "coindgame/dsl.hpp"
#include "coindgame/error.hpp"
#include "coindgame/export.hpp"
#include "coindgame/random.hpp"
#include "coindgame/zero_one.hpp"

namespace cg = coindgame;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kSemantic = 3;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;

  std::string property;
  std::string file;
  std::string name;
  std::string left;
  std::string right;
  std::vector<std::string> strategies;
  std::string out;
  std::size_t depth = 3;
  std::size_t max_prefix = 8;
  std::size_t max_cycle = 6;
  std::string family = "F";
  std::size_t blocks = 1;
  std::string bound = "1";
  std::size_t count = 1000;
};

bool json(const Options& o) { return o.format == "json"; }

int exit_code_for(cg::ErrorCode code) {
  switch (code) {
    case cg::ErrorCode::UnresolvedReference:
    case cg::ErrorCode::UnguardedCycle:
    case cg::ErrorCode::PayoffDomainMismatch:
    case cg::ErrorCode::DuplicateName:
    case cg::ErrorCode::UnknownAgent:
    case cg::ErrorCode::MalformedNode:
    case cg::ErrorCode::SyntaxError:
    case cg::ErrorCode::MissingChoiceMarker:
    case cg::ErrorCode::StrayChoiceMarker:
    case cg::ErrorCode::UnderlyingGameMismatch:
    case cg::ErrorCode::InvalidArgument:
      return kUsage;
    default:
      return kSemantic;
  }
}

cg::SourceFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cg::Error(cg::ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return cg::parse(text.str());
  } catch (const cg::ParseError& e) {
    throw cg::ParseError(e.code(), e.line(), e.column(), path + ": " + e.message());
  }
}

int verdict(bool holds) { return holds ? kHolds : kFails; }

void print_text_tree(const cg::FiniteTree& t, const std::string& indent, std::ostream& os) {
  if (t.is_cut()) {
    os << "...\n";
  } else if (t.is_leaf()) {
    os << "leaf" << cg::to_string(t.payoff) << "\n";
  } else {
    os << cg::to_string(t.head) << "\n";
    for (cg::Choice c : cg::kChoices) {
      os << indent << "  " << cg::to_string(c) << (t.chosen == c ? "!" : "") << " -> ";
      print_text_tree(t.next(c), indent + "    ", os);
    }
  }
}

int run_check(const Options& o) {
  cg::SourceFile file = load(o.file);
  const cg::EquationSystem& sys = file.get(o.name).system;
  cg::NodeIndex root = sys.root();

  if (o.property == "nash") {
    cg::NashResult r = cg::nash(sys, root);
    if (json(o)) {
      std::cout << cg::dump(cg::nash_json(sys, r, root));
    } else {
      std::cout << "nash " << o.name << ": " << (r.holds ? "holds" : "fails") << "\n";
      if (r.witness) {
        const cg::DeviationWitness& w = *r.witness;
        std::cout << "  agent " << w.agent << " improves " << cg::to_string(w.before) << " -> "
                  << cg::to_string(w.after) << " by playing";
        for (const auto& m : w.flips) std::cout << " " << m.node << ":" << cg::to_string(m.choice);
        std::cout << "\n";
      }
    }
    return verdict(r.holds);
  }

  cg::PredicateValuation v = o.property == "converges" ? cg::convergence(sys)
                             : o.property == "strong"  ? cg::strong_convergence(sys)
                                                       : cg::spe(sys);
  if (json(o)) {
    std::cout << cg::dump(cg::valuation_json(sys, v, root));
  } else {
    std::cout << o.property << " " << o.name << ": " << (v[root] ? "holds" : "fails") << "\n";
  }
  return verdict(v[root]);
}

int run_payoff(const Options& o) {
  cg::SourceFile file = load(o.file);
  const cg::EquationSystem& sys = file.get(o.name, cg::Kind::Profile).system;
  cg::PayoffResult r = cg::payoff(sys, sys.root());
  if (json(o)) {
    std::cout << cg::dump(cg::payoff_result_json(sys, r, sys.root()));
  } else if (r.defined()) {
    std::cout << "payoff " << o.name << ": " << cg::to_string(r.map()) << "\n";
  } else {
    std::cout << "payoff " << o.name << ": undefined, play loops through";
    for (cg::NodeIndex i : r.cycle) std::cout << " " << sys.name(i);
    std::cout << "\n";
  }
  return verdict(r.defined());
}

int run_bisim(const Options& o) {
  cg::SourceFile file = load(o.file);
  bool same = cg::bisimilar(file.get(o.left).system, file.get(o.right).system);
  if (json(o)) {
    std::cout << cg::dump(cg::bisim_json(o.left, o.right, same));
  } else {
    std::cout << o.left << (same ? " ~ " : " !~ ") << o.right << "\n";
  }
  return verdict(same);
}

cg::StrategyFamily family_of(const cg::SourceFile& file, const std::vector<std::string>& names) {
  cg::StrategyFamily family;
  for (const auto& n : names) {
    const cg::Declaration& d = file.get(n, cg::Kind::Strategy);
    std::optional<cg::AgentId> agent = d.of;
    if (!agent) {
      // The agent whose name never appears as a head.
      for (const auto& a : d.system.agents()) {
        if (!cg::is_full(d.system, a)) continue;
        if (agent)
          throw cg::Error(cg::ErrorCode::InvalidArgument,
                          "strategy '" + n + "' does not say which agent it belongs to; add 'of AGENT'");
        agent = a;
      }
      if (!agent) throw cg::Error(cg::ErrorCode::NotFull, "strategy '" + n + "' is not full for any agent");
    }
    if (family.contains(*agent))
      throw cg::Error(cg::ErrorCode::DuplicateName, "two strategies given for agent " + *agent);
    family.emplace(*agent, d.system);
  }
  return family;
}

int run_sum(const Options& o) {
  cg::SourceFile file = load(o.file);
  cg::EquationSystem sum = cg::sum_strategies(family_of(file, o.strategies));
  if (!o.out.empty()) {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw cg::Error(cg::ErrorCode::InvalidArgument, "cannot write '" + o.out + "'");
    out << cg::render(sum, "sum");
  }
  if (json(o)) {
    std::cout << cg::dump(cg::system_json(sum, "sum"));
  } else {
    std::cout << cg::render(sum, "sum");
  }
  return kHolds;
}

int run_escalate(const Options& o) {
  cg::SourceFile file = load(o.file);
  cg::EscalationResult r = cg::escalation_check(family_of(file, o.strategies));
  if (json(o)) {
    std::cout << cg::dump(cg::escalation_json(r));
  } else {
    std::cout << "escalation: " << (r.escalates ? "yes" : "no") << "\n";
  }
  return verdict(r.escalates);
}

int run_conjecture(const Options& o) {
  cg::ConjectureReport r = cg::conjecture_check(o.max_prefix, o.max_cycle);
  if (json(o)) {
    std::cout << cg::dump(cg::conjecture_json(r));
  } else {
    std::cout << "bounds (" << r.max_prefix << ", " << r.max_cycle << "): " << r.profiles_checked
              << " profiles, " << cg::to_string(r.verdict) << "\n";
    for (const auto& w : r.counterexamples) std::cout << "  counterexample " << cg::to_string(w) << "\n";
  }
  return verdict(r.verdict == cg::Verdict::ConsistentAtBound);
}

int run_truncate(const Options& o) {
  cg::TruncationShape shape{o.family == "K" ? cg::Family::K : cg::Family::F, o.blocks};
  if (shape.blocks < 1) throw cg::Error(cg::ErrorCode::InvalidArgument, "--blocks must be at least 1");
  cg::TruncationRow row = cg::truncation_row(shape, shape.blocks <= 3);
  if (json(o)) {
    cg::Json j = cg::truncation_row_json(row);
    j["schema"] = cg::kSchema;
    j["type"] = "truncation-row";
    std::cout << cg::dump(j);
  } else {
    std::cout << cg::to_string(row.family) << " blocks " << row.blocks << ": " << row.equilibria
              << " equilibria, payoffs";
    for (const auto& p : row.payoffs) std::cout << " " << cg::to_string(p);
    std::cout << "\n  continuer always right: " << (row.continuer_always_right ? "yes" : "no")
              << "\n  other agent free: " << (row.other_agent_free ? "yes" : "no")
              << "\n  matches characterization: " << (row.matches_characterization ? "yes" : "no");
    if (row.matches_brute_force)
      std::cout << "\n  matches brute force: " << (*row.matches_brute_force ? "yes" : "no");
    std::cout << "\n";
  }
  bool ok = row.continuer_always_right && row.matches_characterization && row.matches_brute_force.value_or(true);
  return verdict(ok);
}

int run_payroll(const Options& o) {
  cg::Rational bound;
  try {
    bound = cg::Rational(o.bound);
  } catch (const std::exception&) {
    throw cg::Error(cg::ErrorCode::InvalidArgument, "--bound must be a rational like 3 or 1/2");
  }
  cg::PayrollNote n = cg::bounded_payroll_note(bound);
  if (json(o)) {
    std::cout << cg::dump(cg::payroll_json(n));
  } else {
    std::cout << n.note << "\n";
  }
  return verdict(n.payoffs_within_bound && n.escalates);
}

int run_unfold(const Options& o) {
  cg::SourceFile file = load(o.file);
  const cg::EquationSystem& sys = file.get(o.name).system;
  cg::FiniteTree t = cg::unfold(sys, sys.root(), o.depth);
  if (json(o)) {
    std::cout << cg::dump(cg::unfold_json(o.name, o.depth, t));
  } else {
    print_text_tree(t, "", std::cout);
  }
  return kHolds;
}

int run_render(const Options& o) {
  cg::SourceFile file = load(o.file);
  if (json(o)) {
    cg::Json j;
    j["schema"] = cg::kSchema;
    j["type"] = "file";
    j["declarations"] = cg::Json::array();
    for (const auto& d : file.declarations) j["declarations"].push_back(cg::system_json(d.system, d.name));
    std::cout << cg::dump(j);
  } else {
    std::cout << cg::render(file);
  }
  return kHolds;
}

// Seeded property run: strong convergence against always(converges), and
// SPE implies Nash.
int run_random_check(const Options& o) {
  cg::Rng rng(o.seed);
  std::size_t disagreements = 0, violations = 0, spe_profiles = 0;
  for (std::size_t k = 0; k < o.count; ++k) {
    cg::EquationSystem p = k % 2 ? cg::random_spe_profile(rng) : cg::random_profile(rng);
    cg::PredicateValuation strong = cg::strong_convergence(p);
    cg::PredicateValuation boxed = cg::box(p, cg::convergence(p));
    cg::PredicateValuation s = cg::spe(p);
    std::vector<cg::PayoffResult> pay = cg::payoffs(p);
    for (cg::NodeIndex i = 0; i < p.size(); ++i) {
      if (strong[i] != boxed[i]) ++disagreements;
      if (!s[i] || !pay[i].defined()) continue;
      ++spe_profiles;
      if (!cg::nash(p, i).holds) ++violations;
    }
  }
  bool ok = disagreements == 0 && violations == 0;
  if (json(o)) {
    cg::Json j;
    j["schema"] = cg::kSchema;
    j["type"] = "random-check";
    j["seed"] = o.seed;
    j["systems"] = o.count;
    j["strong_vs_always_disagreements"] = disagreements;
    j["spe_nodes"] = spe_profiles;
    j["spe_not_nash"] = violations;
    std::cout << cg::dump(j);
  } else {
    std::cout << "seed " << o.seed << ", " << o.count << " systems: " << disagreements
              << " strong/always disagreements, " << violations << " of " << spe_profiles
              << " SPE nodes not Nash\n";
  }
  return verdict(ok);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Coinductive analysis of infinite extensive games"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized subcommands");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, int (*fn)(const Options&)) { sub->callback([&, fn] { action = [&, fn] { return fn(o); }; }); };

  auto* check = app.add_subcommand("check", "Decide a property at the root of a declaration");
  check->add_option("property", o.property)->required()->check(CLI::IsMember({"converges", "strong", "spe", "nash"}));
  check->add_option("file", o.file)->required();
  check->add_option("--name", o.name)->required();
  on(check, run_check);

  auto* eval = app.add_subcommand("eval", "Evaluate a profile");
  eval->add_option("what", o.property)->required()->check(CLI::IsMember({"payoff"}));
  eval->add_option("file", o.file)->required();
  eval->add_option("--name", o.name)->required();
  on(eval, run_payoff);

  auto* bisim = app.add_subcommand("bisim", "Compare two declarations up to bisimilarity");
  bisim->add_option("file", o.file)->required();
  bisim->add_option("--left", o.left)->required();
  bisim->add_option("--right", o.right)->required();
  on(bisim, run_bisim);

  auto* sum = app.add_subcommand("sum", "Sum one full strategy per agent into a profile");
  sum->add_option("file", o.file)->required();
  sum->add_option("--strategies", o.strategies)->required()->delimiter(',');
  sum->add_option("--out", o.out, "Also write the profile to this file");
  on(sum, run_sum);

  auto* escalate = app.add_subcommand("escalate", "Check whether a strategy family escalates");
  escalate->add_option("file", o.file)->required();
  escalate->add_option("--strategies", o.strategies)->required()->delimiter(',');
  on(escalate, run_escalate);

  auto* zero_one = app.add_subcommand("zero-one", "The 0,1-game");
  zero_one->require_subcommand(1);
  auto* conjecture = zero_one->add_subcommand("conjecture", "Bounded check of the SPE characterization");
  conjecture->add_option("--max-prefix", o.max_prefix)->check(CLI::PositiveNumber);
  conjecture->add_option("--max-cycle", o.max_cycle)->check(CLI::PositiveNumber);
  on(conjecture, run_conjecture);
  auto* truncate = zero_one->add_subcommand("truncate", "Backward induction on a finite truncation");
  truncate->add_option("--family", o.family)->check(CLI::IsMember({"F", "K"}));
  truncate->add_option("--blocks", o.blocks)->check(CLI::PositiveNumber);
  on(truncate, run_truncate);
  auto* payroll = zero_one->add_subcommand("payroll", "Does a payoff bound prevent escalation?");
  payroll->add_option("--bound", o.bound);
  on(payroll, run_payroll);

  auto* unfold = app.add_subcommand("unfold", "Print a depth-limited unfolding");
  unfold->add_option("file", o.file)->required();
  unfold->add_option("--name", o.name)->required();
  unfold->add_option("--depth", o.depth);
  on(unfold, run_unfold);

  auto* render = app.add_subcommand("render", "Parse a file and print it canonically");
  render->add_option("file", o.file)->required();
  on(render, run_render);

  auto* random_check = app.add_subcommand("random-check", "Seeded property checks on random profiles");
  random_check->add_option("--count", o.count);
  on(random_check, run_random_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kHolds : kUsage;
  }

  try {
    return action();
  } catch (const cg::Error& e) {
    std::string code(cg::to_string(e.code()));
    if (json(o)) {
      std::cerr << cg::dump(cg::error_json(code, e.what()));
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return exit_code_for(e.code());
  }
}
