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

#include "doctest.h"

#include <fstream>
#include <sstream>

#include "coindgame/export.hpp"
#include "coindgame/zero_one.hpp"
#include "helpers.hpp"

using namespace coindgame;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_header(const Json& j, const char* type) {
  CHECK(j.at("schema") == "coindgame/1");
  CHECK(j.at("type") == type);
}

}  // namespace

TEST_CASE("conjecture report matches the golden file") {
  std::string expected = slurp(std::string(COINDGAME_GOLDEN_DIR) + "/conjecture_1_1.json");
  CHECK(dump(conjecture_json(conjecture_check(1, 1))) == expected);
}

TEST_CASE("conjecture report carries bounds, count and verdict") {
  ConjectureReport r = conjecture_check(3, 2, [](const EquationSystem&, NodeIndex) { return true; });
  Json j = conjecture_json(r);
  check_header(j, "conjecture");
  CHECK(j.at("max_prefix") == 3);
  CHECK(j.at("max_cycle") == 2);
  CHECK(j.at("profiles_checked") == r.profiles_checked);
  CHECK(j.at("verdict") == "refuted");
  REQUIRE(j.at("counterexamples").size() == r.counterexamples.size());
  CHECK(j.at("counterexamples")[0].at("text") == to_string(r.counterexamples[0]));
}

TEST_CASE("systems, valuations and payoffs") {
  CanonicalProfiles c = canonical_profiles();
  Json s = system_json(c.s10a, "s10a");
  check_header(s, "system");
  CHECK(s.at("kind") == "profile");
  CHECK(s.at("nodes").size() == c.s10a.size());
  CHECK(s.at("root") == c.s10a.name(c.s10a.root()));

  Json v = valuation_json(c.s10a, spe(c.s10a), c.s10a.root());
  check_header(v, "valuation");
  CHECK(v.at("holds") == true);
  CHECK(v.at("polarity") == "greatest");

  Json p = payoff_result_json(c.s10a, payoff(c.s10a, c.s10a.root()), c.s10a.root());
  CHECK(p.at("payoff").at("A") == "1");
  EscalationSystems e = escalation_strategies();
  Json loop = payoff_result_json(e.s_a, payoff(e.s_a, e.s_a.root()), e.s_a.root());
  CHECK(loop.at("defined") == false);
  CHECK(loop.at("cycle").size() == 2);
}

TEST_CASE("rationals are strings") {
  CHECK(rational_json(Rational(-3, 4)) == "-3/4");
  CHECK(payoff_json({{"A", Rational(1, 2)}}).dump() == R"({"A":"1/2"})");
}

TEST_CASE("other documents") {
  check_header(truncation_json(truncation_report(2)), "truncation");
  check_header(payroll_json(bounded_payroll_note(1)), "payroll");
  check_header(bisim_json("a", "b", true), "bisim");
  EscalationSystems e = escalation_strategies();
  Json esc = escalation_json(escalation_check({{"A", e.st_a}, {"B", e.st_b}}));
  check_header(esc, "escalation");
  CHECK(esc.at("escalates") == true);
  Json t = unfold_json("g", 2, unfold(build_01_game(), 0, 2));
  check_header(t, "tree");
  CHECK(t.at("tree").at("r").at("r").at("cut") == true);
}
