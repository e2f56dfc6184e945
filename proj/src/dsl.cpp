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

#include "coindgame/dsl.hpp"

#include <cctype>
#include <map>
#include <set>

#include "coindgame/bisim.hpp"
#include "coindgame/error.hpp"
#include "coindgame/transform.hpp"

namespace coindgame {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

const std::set<std::string, std::less<>> kReserved = {"agents", "game", "profile", "strategy",
                                                      "of", "leaf", "move"};

enum class Tok { Ident, Int, Slash, Colon, Comma, Equals, LParen, RParen, LBrace, RBrace, Bang, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident:
    case Tok::Int: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      int line = line_, col = col_;
      char c = src_[pos_];
      if (ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
        out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && next_is_digit())) {
        std::size_t start = pos_;
        advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E'))
          throw ParseError(ErrorCode::SyntaxError, line, col,
                           "decimal numbers are not allowed; write an exact rational p/q");
        out.push_back({Tok::Int, std::string(src_.substr(start, pos_ - start)), line, col});
        continue;
      }
      if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        advance();
        advance();
        out.push_back({Tok::Arrow, "->", line, col});
        continue;
      }
      Tok kind;
      switch (c) {
        case '/': kind = Tok::Slash; break;
        case ':': kind = Tok::Colon; break;
        case ',': kind = Tok::Comma; break;
        case '=': kind = Tok::Equals; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '!': kind = Tok::Bang; break;
        default: {
          std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "\\x" + hex(c);
          throw ParseError(ErrorCode::SyntaxError, line, col, "unexpected character '" + shown + "'");
        }
      }
      advance();
      out.push_back({kind, std::string(1, c), line, col});
    }
  }

 private:
  static std::string hex(char c) {
    const char* digits = "0123456789abcdef";
    auto u = static_cast<unsigned char>(c);
    return {digits[u >> 4], digits[u & 15]};
  }

  bool next_is_digit() const {
    return pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]));
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count UTF-8 code points, not bytes
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct RefSite {
  std::string target;
  int line, column;
};

struct ParsedEquation {
  RawEquation eq;
  Token at;
  std::vector<RefSite> refs;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SourceFile run() {
    SourceFile file;
    if (peek().kind == Tok::End) fail(peek(), "empty input: expected a declaration");
    while (peek().kind != Tok::End) {
      const Token& kw = expect_ident("a declaration keyword");
      if (kw.text == "agents") {
        parse_agents(kw);
      } else if (kw.text == "game" || kw.text == "profile" || kw.text == "strategy") {
        Kind kind = kw.text == "game" ? Kind::Game : kw.text == "profile" ? Kind::Profile : Kind::Strategy;
        file.declarations.push_back(parse_decl(kind, kw, file));
      } else {
        fail(kw, "expected 'agents', 'game', 'profile' or 'strategy', got " + describe(kw));
      }
    }
    file.agents = agents_;
    return file;
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) {
    throw ParseError(code, t.line, t.column, msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  const Token& expect(Tok kind, const char* what) {
    const Token& t = take();
    if (t.kind != kind) fail(t, std::string("expected ") + what + ", got " + describe(t));
    return t;
  }

  const Token& expect_ident(const char* what) { return expect(Tok::Ident, what); }

  void expect_word(const char* word) {
    const Token& t = take();
    if (t.kind != Tok::Ident || t.text != word)
      fail(t, std::string("expected '") + word + "', got " + describe(t));
  }

  bool at_keyword() const {
    const Token& t = peek();
    return t.kind == Tok::Ident &&
           (t.text == "agents" || t.text == "game" || t.text == "profile" || t.text == "strategy");
  }

  void parse_agents(const Token& kw) {
    if (peek().kind != Tok::Ident || at_keyword()) fail(peek(), "expected at least one agent name");
    while (peek().kind == Tok::Ident && !at_keyword()) {
      const Token& t = take();
      if (kReserved.contains(t.text)) fail(t, "'" + t.text + "' is reserved and cannot name an agent");
      if (t.text.find('\'') != std::string::npos || t.text.find('.') != std::string::npos)
        fail(t, "agent names may not contain quotes or dots");
      if (std::find(agents_.begin(), agents_.end(), t.text) != agents_.end())
        fail(t, "agent '" + t.text + "' declared twice", ErrorCode::DuplicateName);
      agents_.push_back(t.text);
    }
    (void)kw;
  }

  Rational parse_rational() {
    const Token& num = expect(Tok::Int, "an integer");
    Rational value{boost::multiprecision::cpp_int(num.text)};
    if (peek().kind == Tok::Slash) {
      take();
      const Token& den = expect(Tok::Int, "a positive denominator");
      boost::multiprecision::cpp_int d(den.text);
      if (d <= 0) fail(den, "denominator must be positive");
      value /= Rational(d);
    }
    return value;
  }

  ParsedEquation parse_equation(Kind kind) {
    const Token& name = expect_ident("an equation name");
    expect(Tok::Colon, "':'");
    const Token& head = expect_ident("'leaf' or a head");
    ParsedEquation out{{name.text, Leaf{}}, name, {}};

    if (head.text == "leaf" && peek().kind == Tok::LBrace) {
      take();
      PayoffMap payoff;
      while (true) {
        const Token& agent = expect_ident("an agent name");
        if (std::find(agents_.begin(), agents_.end(), agent.text) == agents_.end())
          fail(agent, "'" + agent.text + "' is not a declared agent", ErrorCode::UnknownAgent);
        if (payoff.contains(agent.text))
          fail(agent, "payoff for '" + agent.text + "' given twice", ErrorCode::DuplicateName);
        expect(Tok::Colon, "':'");
        payoff.emplace(agent.text, parse_rational());
        if (peek().kind == Tok::Comma) {
          take();
          continue;
        }
        expect(Tok::RBrace, "',' or '}'");
        break;
      }
      if (payoff.size() != agents_.size())
        fail(head, "leaf '" + name.text + "' must give a payoff to every declared agent",
             ErrorCode::PayoffDomainMismatch);
      out.eq.rhs = Leaf{std::move(payoff)};
      return out;
    }

    Head h;
    if (head.text == "move") {
      if (kind != Kind::Strategy) fail(head, "'move' heads only appear in strategies", ErrorCode::MalformedNode);
    } else {
      if (std::find(agents_.begin(), agents_.end(), head.text) == agents_.end())
        fail(head, "'" + head.text + "' is not a declared agent", ErrorCode::UnknownAgent);
      h = head.text;
    }

    expect(Tok::LParen, "'('");
    std::optional<Token> marks[2];
    std::string targets[2];
    for (Choice c : kChoices) {
      if (c == Choice::Right) expect(Tok::Comma, "','");
      expect_word(c == Choice::Down ? "d" : "r");
      if (peek().kind == Tok::Bang) marks[slot(c)] = take();
      expect(Tok::Arrow, "'->'");
      const Token& target = expect_ident("a node name");
      targets[slot(c)] = target.text;
      out.refs.push_back({target.text, target.line, target.column});
    }
    expect(Tok::RParen, "')'");

    std::optional<Choice> chosen;
    if (marks[0] && marks[1]) fail(*marks[1], "only one child may be marked with '!'", ErrorCode::StrayChoiceMarker);
    if (marks[0]) chosen = Choice::Down;
    if (marks[1]) chosen = Choice::Right;

    bool wants_marker = kind == Kind::Profile || (kind == Kind::Strategy && head.text == "move");
    if (wants_marker && !chosen)
      fail(head, "branch '" + name.text + "' needs exactly one child marked with '!'",
           ErrorCode::MissingChoiceMarker);
    if (!wants_marker && chosen)
      fail(*marks[slot(*chosen)], "'!' is not allowed here", ErrorCode::StrayChoiceMarker);

    if (kind == Kind::Strategy && head.text == "move") {
      out.eq.rhs = RawBranch{*chosen, std::nullopt, targets[0], targets[1]};
    } else {
      out.eq.rhs = RawBranch{h, kind == Kind::Profile ? chosen : std::nullopt, targets[0], targets[1]};
    }
    return out;
  }

  Declaration parse_decl(Kind kind, const Token& kw, const SourceFile& file) {
    const Token& name = expect_ident("a declaration name");
    if (kReserved.contains(name.text)) fail(name, "'" + name.text + "' is reserved");
    if (file.find(name.text, kind))
      fail(name, std::string(to_string(kind)) + " '" + name.text + "' declared twice", ErrorCode::DuplicateName);
    if (agents_.empty()) fail(kw, "declare agents before any " + std::string(to_string(kind)), ErrorCode::UnknownAgent);

    std::optional<Token> of;
    if (peek().kind == Tok::Ident && peek().text == "of") {
      take();
      of = expect_ident("a name after 'of'");
    }
    expect(Tok::Equals, "'='");

    std::vector<ParsedEquation> eqs;
    std::map<std::string, std::size_t> seen;
    while (true) {
      ParsedEquation pe = parse_equation(kind);
      if (seen.contains(pe.eq.name))
        fail(pe.at, "equation '" + pe.eq.name + "' defined twice", ErrorCode::DuplicateName);
      seen.emplace(pe.eq.name, eqs.size());
      eqs.push_back(std::move(pe));
      if (peek().kind == Tok::Comma) {
        take();
        continue;
      }
      break;
    }
    for (const auto& pe : eqs)
      for (const auto& ref : pe.refs)
        if (!seen.contains(ref.target))
          throw ParseError(ErrorCode::UnresolvedReference, ref.line, ref.column,
                           "'" + ref.target + "' is not defined in " + std::string(to_string(kind)) + " '" +
                               name.text + "'");

    RawSystem raw;
    raw.kind = kind;
    raw.agents = agents_;
    for (auto& pe : eqs) raw.equations.push_back(std::move(pe.eq));

    Declaration decl{name.text, EquationSystem{}, std::nullopt, name.line};
    try {
      decl.system = validate_system(raw);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), name.line, name.column, e.what());
    }

    if (of) {
      decl.of = of->text;
      check_of(kind, decl, *of, file);
    }
    return decl;
  }

  void check_of(Kind kind, const Declaration& decl, const Token& of, const SourceFile& file) {
    switch (kind) {
      case Kind::Strategy:
        if (std::find(agents_.begin(), agents_.end(), of.text) == agents_.end())
          fail(of, "'" + of.text + "' is not a declared agent", ErrorCode::UnknownAgent);
        return;
      case Kind::Profile: {
        const Declaration* game = file.find(of.text, Kind::Game);
        if (!game) fail(of, "no game named '" + of.text + "' declared before", ErrorCode::UnresolvedReference);
        if (game->system.agents() != decl.system.agents() ||
            !bisimilar(underlying_game(decl.system), game->system))
          fail(of, "the underlying game of '" + decl.name + "' is not game '" + of.text + "'",
               ErrorCode::UnderlyingGameMismatch);
        return;
      }
      case Kind::Game:
        fail(of, "'of' is not allowed on a game");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<AgentId> agents_;
};

std::string render_declaration(const EquationSystem& sys, const std::string& name,
                               const std::optional<std::string>& of) {
  std::string out = std::string(to_string(sys.kind())) + " " + name;
  if (of) out += " of " + *of;
  out += " =";
  auto line = [&](NodeIndex i) {
    std::string s = "  " + sys.name(i) + ": ";
    if (sys.is_leaf(i)) {
      s += "leaf" + to_string(sys.leaf(i).payoff);
      return s;
    }
    const Branch& b = sys.branch(i);
    s += is_choice(b.head) ? std::string("move") : to_string(b.head);
    std::optional<Choice> mark = is_choice(b.head) ? std::optional(std::get<Choice>(b.head)) : b.chosen;
    s += "(";
    for (Choice c : kChoices) {
      if (c == Choice::Right) s += ", ";
      s += std::string(to_string(c)) + (mark == c ? "!" : "") + " -> " + sys.name(b.next(c));
    }
    return s + ")";
  };
  std::vector<NodeIndex> order{sys.root()};
  for (NodeIndex i = 0; i < sys.size(); ++i)
    if (i != sys.root()) order.push_back(i);
  for (std::size_t k = 0; k < order.size(); ++k) out += (k ? ",\n" : "\n") + line(order[k]);
  return out + "\n";
}

std::string render_agents(const std::vector<AgentId>& agents) {
  std::string out = "agents";
  for (const auto& a : agents) out += " " + a;
  return out + "\n";
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), ident_char);
}

const Declaration* SourceFile::find(std::string_view name, std::optional<Kind> kind) const {
  for (const auto& d : declarations)
    if (d.name == name && (!kind || d.system.kind() == *kind)) return &d;
  return nullptr;
}

const Declaration& SourceFile::get(std::string_view name, std::optional<Kind> kind) const {
  if (const Declaration* d = find(name, kind)) return *d;
  if (kind && find(name))
    throw Error(ErrorCode::KindMismatch, "'" + std::string(name) + "' is not a " + std::string(to_string(*kind)));
  throw Error(ErrorCode::UnresolvedReference, "no declaration named '" + std::string(name) + "'");
}

SourceFile parse(std::string_view source) {
  Lexer lexer(source);
  Parser parser(lexer.run());
  return parser.run();
}

std::string render(const EquationSystem& sys, const std::string& name, const std::optional<std::string>& of) {
  std::vector<AgentId> agents(sys.agents().begin(), sys.agents().end());
  return render_agents(agents) + "\n" + render_declaration(sys, name, of);
}

std::string render(const SourceFile& file) {
  std::string out = render_agents(file.agents);
  for (const auto& d : file.declarations) out += "\n" + render_declaration(d.system, d.name, d.of);
  return out;
}

}  // namespace coindgame
