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

#include "coindgame/export.hpp"

namespace coindgame {

namespace {

Json document(const char* type) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = type;
  return j;
}

Json moves_json(const std::vector<Move>& moves) {
  Json out = Json::array();
  for (const auto& m : moves) out.push_back({{"node", m.node}, {"choice", to_string(m.choice)}});
  return out;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Json payoff_json(const PayoffMap& p) {
  Json out = Json::object();
  for (const auto& [agent, value] : p) out[agent] = rational_json(value);
  return out;
}

Json word_json(const CombProfileWord& w) {
  Json prefix = Json::array(), cycle = Json::array();
  for (Choice c : w.prefix) prefix.push_back(to_string(c));
  for (Choice c : w.cycle) cycle.push_back(to_string(c));
  return {{"text", to_string(w)}, {"prefix", prefix}, {"cycle", cycle}};
}

Json tree_json(const FiniteTree& t) {
  if (t.is_cut()) return {{"cut", true}};
  if (t.is_leaf()) return {{"leaf", payoff_json(t.payoff)}};
  Json out;
  out["head"] = to_string(t.head);
  if (t.chosen) out["chosen"] = to_string(*t.chosen);
  out["d"] = tree_json(t.down());
  out["r"] = tree_json(t.right());
  return out;
}

Json system_body(const EquationSystem& sys) {
  Json out;
  out["kind"] = to_string(sys.kind());
  out["agents"] = Json(std::vector<std::string>(sys.agents().begin(), sys.agents().end()));
  out["root"] = sys.name(sys.root());
  Json nodes = Json::array();
  for (NodeIndex i = 0; i < sys.size(); ++i) {
    Json n;
    n["name"] = sys.name(i);
    if (sys.is_leaf(i)) {
      n["leaf"] = payoff_json(sys.leaf(i).payoff);
    } else {
      const Branch& b = sys.branch(i);
      if (is_choice(b.head)) {
        n["move"] = to_string(std::get<Choice>(b.head));
      } else {
        n["head"] = b.owner();
      }
      if (b.chosen) n["chosen"] = to_string(*b.chosen);
      n["d"] = sys.name(b.down());
      n["r"] = sys.name(b.right());
    }
    nodes.push_back(std::move(n));
  }
  out["nodes"] = std::move(nodes);
  return out;
}

Json system_json(const EquationSystem& sys, const std::string& name) {
  Json j = document("system");
  j["name"] = name;
  j.update(system_body(sys));
  return j;
}

Json valuation_json(const EquationSystem& sys, const PredicateValuation& v, NodeIndex node) {
  Json j = document("valuation");
  j["predicate"] = v.predicate;
  j["polarity"] = v.polarity == Polarity::Least ? "least" : "greatest";
  j["node"] = sys.name(node);
  j["holds"] = static_cast<bool>(v[node]);
  j["evaluations"] = v.evaluations;
  Json values = Json::object();
  for (NodeIndex i = 0; i < sys.size(); ++i) values[sys.name(i)] = static_cast<bool>(v[i]);
  j["values"] = std::move(values);
  return j;
}

Json payoff_result_json(const EquationSystem& sys, const PayoffResult& r, NodeIndex node) {
  Json j = document("payoff");
  j["node"] = sys.name(node);
  j["defined"] = r.defined();
  if (r.defined()) {
    j["payoff"] = payoff_json(r.map());
  } else {
    Json cycle = Json::array();
    for (NodeIndex i : r.cycle) cycle.push_back(sys.name(i));
    j["cycle"] = std::move(cycle);
  }
  return j;
}

Json nash_json(const EquationSystem& sys, const NashResult& r, NodeIndex node) {
  Json j = document("nash");
  j["node"] = sys.name(node);
  j["holds"] = r.holds;
  if (r.witness) {
    const DeviationWitness& w = *r.witness;
    Json wj;
    wj["agent"] = w.agent;
    wj["before"] = rational_json(w.before);
    wj["after"] = rational_json(w.after);
    wj["path"] = moves_json(w.path);
    wj["flips"] = moves_json(w.flips);
    wj["deviant"] = system_body(w.deviant);
    j["witness"] = std::move(wj);
  }
  return j;
}

Json bisim_json(const std::string& left, const std::string& right, bool result) {
  Json j = document("bisim");
  j["left"] = left;
  j["right"] = right;
  j["bisimilar"] = result;
  return j;
}

Json escalation_json(const EscalationResult& r) {
  Json j = document("escalation");
  j["escalates"] = r.escalates;
  j["profile"] = system_body(r.profile);
  return j;
}

Json conjecture_json(const ConjectureReport& r) {
  Json j = document("conjecture");
  j["max_prefix"] = r.max_prefix;
  j["max_cycle"] = r.max_cycle;
  j["profiles_checked"] = r.profiles_checked;
  j["verdict"] = to_string(r.verdict);
  Json ce = Json::array();
  for (const auto& w : r.counterexamples) ce.push_back(word_json(w));
  j["counterexamples"] = std::move(ce);
  return j;
}

Json truncation_row_json(const TruncationRow& row) {
  Json j;
  j["family"] = to_string(row.family);
  j["blocks"] = row.blocks;
  j["equilibria"] = row.equilibria;
  Json pays = Json::array();
  for (const auto& p : row.payoffs) pays.push_back(payoff_json(p));
  j["payoffs"] = std::move(pays);
  j["continuer_always_right"] = row.continuer_always_right;
  j["other_agent_free"] = row.other_agent_free;
  j["matches_characterization"] = row.matches_characterization;
  j["matches_brute_force"] = row.matches_brute_force ? Json(*row.matches_brute_force) : Json(nullptr);
  return j;
}

Json truncation_json(const TruncationReport& r) {
  Json j = document("truncation");
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(truncation_row_json(row));
  j["rows"] = std::move(rows);
  j["parity_inconsistent"] = r.parity_inconsistent;
  return j;
}

Json payroll_json(const PayrollNote& n) {
  Json j = document("payroll");
  j["bound"] = rational_json(n.bound);
  j["max_payoff"] = rational_json(n.max_payoff);
  j["payoffs_within_bound"] = n.payoffs_within_bound;
  j["escalates"] = n.escalates;
  j["note"] = n.note;
  return j;
}

Json unfold_json(const std::string& name, std::size_t depth, const FiniteTree& t) {
  Json j = document("tree");
  j["name"] = name;
  j["depth"] = depth;
  j["tree"] = tree_json(t);
  return j;
}

Json error_json(const std::string& code, const std::string& message) {
  Json j = document("error");
  j["code"] = code;
  j["message"] = message;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace coindgame
