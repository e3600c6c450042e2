// Copyright 2026 The epseq Authors
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

#ifndef EPSEQ_JSON_IO_HPP_
#define EPSEQ_JSON_IO_HPP_

#include <string>
#include <variant>

#include <json.hpp>

#include "epseq/epistemic.hpp"
#include "epseq/game.hpp"
#include "epseq/strategy.hpp"
#include "epseq/verdict.hpp"
#include "epseq/verify.hpp"

namespace epseq {

using Json = nlohmann::json;

// All numerics are exact: rationals as "p/q" strings, eps-field values
// as {"order", "num", "den"} with coefficient arrays by ascending
// power. Parsers accept the shortcuts "p/q" (a standard value) and
// "eps" (the infinitesimal) wherever an eps-field value is expected.
// Emitters produce canonical documents; keys are sorted, so repeated
// runs emit byte-identical output.

Json nonstd_to_json(const NonstdNum& x);
NonstdNum nonstd_from_json(const Json& j);

// -------- games --------

Json game_to_json(const GameTree& g);
Json game_to_json(const StrategicGame& g);
std::variant<GameTree, StrategicGame> game_from_json(const Json& j);

// -------- profiles and distributions --------

Json profile_to_json(const GameTree& g, const BehavioralProfile& p);
BehavioralProfile profile_from_json(const GameTree& g, const Json& j);

Json mixed_to_json(const StrategicGame& g, const MixedProfile& p);
MixedProfile mixed_from_json(const StrategicGame& g, const Json& j);

Json distribution_to_json(const StrategicGame& g, const ProfileDistribution& eta);
ProfileDistribution distribution_from_json(const StrategicGame& g, const Json& j);

std::map<std::pair<int, int>, EpsPoly> tremble_spec_from_json(const GameTree& g, const Json& j);

// -------- beliefs and models --------

Json beliefs_to_json(const GameTree& g, const BeliefSystem& mu);
BeliefSystem beliefs_from_json(const GameTree& g, const Json& j);

Json model_to_json(const GameTree& g, const ExtensiveModel& m);
ExtensiveModel model_from_json(const GameTree& g, const Json& j);

Json model_to_json(const StrategicGame& g, const StrategicModel& m);
StrategicModel model_from_json(const StrategicGame& g, const Json& j);

// -------- reports --------

Json report_to_json(const ValidationReport& report);
Json shortfall_to_json(const GameTree& g, const Shortfall& s);
// `g` may be null for strategic-form verdicts (no tremble/belief).
Json verdict_to_json(const GameTree* g, const Verdict& v);
Json rationalizable_to_json(const StrategicGame& g, const RationalizableResult& r);

// -------- files --------

// Reads a file, or stdin when path is "-".
std::string read_input(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin);

}  // namespace epseq

#endif  // EPSEQ_JSON_IO_HPP_
