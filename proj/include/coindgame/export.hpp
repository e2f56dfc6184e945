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

#ifndef COINDGAME_EXPORT_HPP
#define COINDGAME_EXPORT_HPP

// JSON export. Every document is an object carrying "schema": "coindgame/1"
// and a "type" tag. Rationals are written as strings ("1/2") so they stay
// exact.

#include <string>

#include "json.hpp"

#include "coindgame/equilibria.hpp"
#include "coindgame/zero_one.hpp"

namespace coindgame {

inline constexpr const char* kSchema = "coindgame/1";

using Json = nlohmann::ordered_json;

// Bare values, used inside documents.
Json rational_json(const Rational& r);
Json payoff_json(const PayoffMap& p);
Json word_json(const CombProfileWord& w);
Json tree_json(const FiniteTree& t);
Json system_body(const EquationSystem& sys);

// Full documents.
Json system_json(const EquationSystem& sys, const std::string& name);
Json valuation_json(const EquationSystem& sys, const PredicateValuation& v, NodeIndex node);
Json payoff_result_json(const EquationSystem& sys, const PayoffResult& r, NodeIndex node);
Json nash_json(const EquationSystem& sys, const NashResult& r, NodeIndex node);
Json bisim_json(const std::string& left, const std::string& right, bool result);
Json escalation_json(const EscalationResult& r);
Json conjecture_json(const ConjectureReport& r);
Json truncation_row_json(const TruncationRow& row);
Json truncation_json(const TruncationReport& r);
Json payroll_json(const PayrollNote& n);
Json unfold_json(const std::string& name, std::size_t depth, const FiniteTree& t);
Json error_json(const std::string& code, const std::string& message);

// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace coindgame

#endif  // COINDGAME_EXPORT_HPP
