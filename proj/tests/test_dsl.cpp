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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coindgame/bisim.hpp"
#include "coindgame/dsl.hpp"
#include "coindgame/random.hpp"
#include "coindgame/zero_one.hpp"
#include "helpers.hpp"

using namespace coindgame;
using testing::ab;

namespace {

struct Diagnostic {
  ErrorCode code;
  int line;
  int column;
};

std::optional<Diagnostic> diagnose(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return Diagnostic{e.code(), e.line(), e.column()};
  }
  return std::nullopt;
}

void expect_error(const std::string& text, ErrorCode code, int line, int column) {
  auto d = diagnose(text);
  REQUIRE(d);
  CHECK(d->code == code);
  CHECK(d->line == line);
  CHECK(d->column == column);
}

const char* kG01 =
    "agents A B  game g01 = x: A(d -> l01, r -> y), y: B(d -> l10, r -> x), "
    "l01: leaf{A:0, B:1}, l10: leaf{A:1, B:0}";

}  // namespace

TEST_CASE("parse the 0,1-game") {
  SourceFile f = parse(kG01);
  CHECK(f.agents == std::vector<AgentId>{"A", "B"});
  const Declaration& g = f.get("g01", Kind::Game);
  CHECK(g.system.kind() == Kind::Game);
  CHECK(g.system.name(g.system.root()) == "x");
  CHECK(bisimilar(g.system, build_01_game()));
}

TEST_CASE("one-leaf system") {
  SourceFile f = parse("agents A  game t = x: leaf{A:0}");
  const EquationSystem& s = f.get("t").system;
  CHECK(s.size() == 1);
  CHECK(s.leaf(0).payoff == PayoffMap{{"A", 0}});
}

TEST_CASE("profile with markers") {
  SourceFile f = parse(
      "agents A B\n"
      "profile s = a: A(d -> f01, r! -> b), b: B(d! -> f10, r -> a),\n"
      "  f01: leaf{A:0, B:1}, f10: leaf{A:1, B:0}\n");
  const EquationSystem& s = f.get("s", Kind::Profile).system;
  CHECK(classify_01(s, s.root()) == Shape01::S0);
  CHECK(bisimilar(s, canonical_profiles().s10a));
}

TEST_CASE("strategies, comments and of") {
  SourceFile f = parse(
      "# escalation\n"
      "agents A B\n"
      "game g = x: A(d -> l01, r -> y), y: B(d -> l10, r -> x), l01: leaf{A:0, B:1}, l10: leaf{A:1, B:0}\n"
      "strategy stA of A = s: move(d -> f01, r! -> t), # A goes on\n"
      "  t: B(d -> f10, r -> s), f01: leaf{A:0, B:1}, f10: leaf{A:1, B:0}\n"
      "profile p of g = a: A(d -> f01, r! -> b), b: B(d -> f10, r! -> a), f01: leaf{A:0, B:1}, f10: leaf{A:1, B:0}\n");
  CHECK(f.declarations.size() == 3);
  const Declaration& st = f.get("stA", Kind::Strategy);
  CHECK(st.of == "A");
  CHECK(bisimilar(st.system, escalation_strategies().st_a));
  CHECK(f.get("p").of == "g");
  CHECK(testing::error_of([&] { f.get("p", Kind::Game); }) == ErrorCode::KindMismatch);
  CHECK(testing::error_of([&] { f.get("nope"); }) == ErrorCode::UnresolvedReference);
}

TEST_CASE("rationals are exact") {
  SourceFile f = parse("agents A B game t = x: leaf{A:-7/3, B:4/6}");
  const EquationSystem& s = f.get("t").system;
  CHECK(s.leaf(0).payoff == PayoffMap{{"A", Rational(-7, 3)}, {"B", Rational(2, 3)}});
  SourceFile again = parse(render(s, "t"));
  CHECK(again.get("t").system.leaf(0).payoff == s.leaf(0).payoff);
}

TEST_CASE("positioned diagnostics") {
  expect_error("agents A B\ngame g = x: C(d -> y, r -> y), y: leaf{A:0, B:0}", ErrorCode::UnknownAgent, 2, 13);
  expect_error("agents A B\nprofile p = x: A(d -> y, r -> y), y: leaf{A:0, B:0}", ErrorCode::MissingChoiceMarker, 2, 16);
  expect_error("agents A B\ngame g = x: A(d! -> y, r -> y), y: leaf{A:0, B:0}", ErrorCode::StrayChoiceMarker, 2, 16);
  expect_error("agents A B\nprofile p = x: A(d! -> y, r! -> y), y: leaf{A:0, B:0}", ErrorCode::StrayChoiceMarker, 2, 28);
  expect_error("agents A B\ngame g = x: leaf{A:0.5, B:0}", ErrorCode::SyntaxError, 2, 20);
  expect_error("agents A B\ngame g = x: leaf{A:0, B:0}, x: leaf{A:1, B:1}", ErrorCode::DuplicateName, 2, 29);
  expect_error("agents A B\ngame g = x: A(d -> y, r -> zz), y: leaf{A:0, B:0}", ErrorCode::UnresolvedReference, 2, 28);
  expect_error("agents A B\ngame g = x: leaf{A:0}", ErrorCode::PayoffDomainMismatch, 2, 13);
  expect_error("agents A A", ErrorCode::DuplicateName, 1, 10);
  expect_error("agents A B\ngame g = x: leaf{A:0, B:1/0}", ErrorCode::SyntaxError, 2, 27);
  expect_error("agents A B\ngame g = x: move(d! -> y, r -> y), y: leaf{A:0, B:0}", ErrorCode::MalformedNode, 2, 13);
  expect_error("agents A B\nstrategy s = x: move(d -> y, r -> y), y: leaf{A:0, B:0}", ErrorCode::MissingChoiceMarker, 2, 17);
  expect_error("agents A B\ngame g = x: A(d -> y, r -> y)\n", ErrorCode::UnresolvedReference, 2, 20);
  expect_error("", ErrorCode::SyntaxError, 1, 1);
  expect_error("game g = x: leaf{}", ErrorCode::UnknownAgent, 1, 1);
  expect_error("agents A B\ngame g = x: leaf{A:0, B:0}\ngame g = y: leaf{A:0, B:0}", ErrorCode::DuplicateName, 3, 6);
  expect_error("agents A B\ngame g = x: leaf{A:0, B:0} @", ErrorCode::SyntaxError, 2, 28);
  expect_error(
      "agents A B\ngame g = x: leaf{A:0, B:1}\nprofile p of g = y: leaf{A:1, B:0}", ErrorCode::UnderlyingGameMismatch, 3, 14);
  expect_error("agents A B\nprofile p of h = y: leaf{A:1, B:0}", ErrorCode::UnresolvedReference, 2, 14);
  expect_error("agents A B\nstrategy s of Q = y: leaf{A:1, B:0}", ErrorCode::UnknownAgent, 2, 15);
}

TEST_CASE("a cycle of branches is guarded and accepted") {
  SourceFile f = parse("agents A B\ngame g = x: A(d -> x, r -> x)");
  CHECK(f.get("g").system.size() == 1);
}

TEST_CASE("render") {
  EquationSystem g = build_01_game();
  std::string text = render(g, "g01");
  CHECK(text ==
        "agents A B\n\n"
        "game g01 =\n"
        "  G01: A(d -> f01, r -> G10),\n"
        "  G10: B(d -> f10, r -> G01),\n"
        "  f01: leaf{A:0, B:1},\n"
        "  f10: leaf{A:1, B:0}\n");
  CHECK(bisimilar(parse(text).get("g01").system, g));
  CHECK(render(parse(text)) == text);

  RawSystem r = testing::raw(Kind::Profile);
  r.leaf("only", ab(1, 2));
  std::string leaf = render(validate_system(r), "p");
  CHECK(leaf == "agents A B\n\nprofile p =\n  only: leaf{A:1, B:2}\n");

  std::string st = render(escalation_strategies().st_a, "stA", std::string("A"));
  CHECK(st.find("strategy stA of A =") != std::string::npos);
  CHECK(st.find("stA: move(d -> f01, r! -> stA')") != std::string::npos);
}

TEST_CASE("corpus round-trips") {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(COINDGAME_CORPUS_DIR)) {
    if (entry.path().extension() != ".cg") continue;
    ++files;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    SourceFile f = parse(buf.str());
    SourceFile again = parse(render(f));
    REQUIRE(again.declarations.size() == f.declarations.size());
    for (std::size_t k = 0; k < f.declarations.size(); ++k) {
      CHECK(again.declarations[k].name == f.declarations[k].name);
      CHECK(again.declarations[k].of == f.declarations[k].of);
      CHECK(bisimilar(again.declarations[k].system, f.declarations[k].system));
    }
  }
  CHECK(files >= 4);
}

TEST_CASE("random systems round-trip") {
  Rng rng(17);
  for (int k = 0; k < 300; ++k) {
    Kind kind = static_cast<Kind>(k % 3);
    RandomOptions opts{12, 0.3, 1 + static_cast<std::size_t>(k % 3)};
    EquationSystem s = random_system(rng, kind, opts);
    std::string text = render(s, "s");
    SourceFile f = parse(text);
    CHECK(bisimilar(f.get("s").system, s));
    CHECK(render(f.get("s").system, "s") == text);
  }
}

TEST_CASE("identifiers") {
  CHECK(is_identifier("stA'"));
  CHECK(is_identifier("a.b_c9"));
  CHECK_FALSE(is_identifier("9a"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("a-b"));
}
