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

#ifndef EPSEQ_EPISTEMIC_HPP_
#define EPSEQ_EPISTEMIC_HPP_

#include <string>
#include <vector>

#include "epseq/game.hpp"
#include "epseq/parallel.hpp"
#include "epseq/strategy.hpp"
#include "epseq/valuation.hpp"
#include "epseq/verdict.hpp"

namespace epseq {

// Finite state space over an extensive-form game: each state carries a
// terminal history, each player a prior over states. "Common knowledge"
// of a property in such a model means the property holds at every
// state, for every player.
struct ExtensiveModel {
  std::vector<std::string> state_names;
  std::vector<int> outcome;                    // terminal node index per state
  std::vector<std::vector<NonstdNum>> priors;  // [player - 1][state]

  std::size_t num_states() const { return outcome.size(); }
};

void validate_model(const GameTree& g, const ExtensiveModel& m);

// Distribution over terminal histories induced by a player's prior.
OutcomeDistribution pushforward(const GameTree& g, const ExtensiveModel& m, int player);

// Every player's pushforward equals the outcome distribution of trem,
// exactly.
bool is_compatible(const GameTree& g, const ExtensiveModel& m, const BehavioralProfile& trem);

// One state per terminal history, all players sharing the prior
// Pr(state_h) = reach probability of h under trem.
ExtensiveModel canonical_model(const GameTree& g, const BehavioralProfile& trem);

// Player `player` is eps-locally-rational at a state: at each own
// information set met along the state's outcome, if the action the
// outcome takes there keeps positive probability in the standard part
// of the tremble, that action is a local eps-best response.
bool is_locally_rational(const GameTree& g, const ExtensiveModel& m,
                         const BehavioralProfile& trem, const BehavioralProfile& sigma,
                         int player, int state, const NonstdNum& eps);

// Player `player` is eps-rational at a state: at each own information
// set met along the state's outcome, the standard strategy is an
// eps-best response from there on.
bool is_rational(const GameTree& g, const ExtensiveModel& m, const BehavioralProfile& trem,
                 const BehavioralProfile& sigma, int player, int state, const NonstdNum& eps);

enum class RationalityMode { local, global };

// Universality check: the chosen rationality predicate holds for every
// (player, state). The reported counterexample is the minimum in
// (player, state) order regardless of execution policy.
Verdict ck_rationality(const GameTree& g, const ExtensiveModel& m, const BehavioralProfile& trem,
                       const BehavioralProfile& sigma, const NonstdNum& eps, RationalityMode mode,
                       ExecPolicy exec = ExecPolicy::parallel);

// -------- strategic form --------

// State space over a strategic game: each state carries a pure profile.
struct StrategicModel {
  std::vector<std::string> state_names;
  std::vector<std::vector<int>> profile;       // [state][player - 1] strategy index
  std::vector<std::vector<NonstdNum>> priors;  // [player - 1][state]

  std::size_t num_states() const { return profile.size(); }
};

void validate_model(const StrategicGame& g, const StrategicModel& m);

// The player's belief about opponents at a state: their prior
// conditioned on their own strategy there, marginalized to opponent
// profiles. Indexed by flat profile index with the player's own
// coordinate fixed to s_i(state); entries for other own strategies are
// zero. ZeroConditioningEventError when the conditioning event is null.
std::vector<NonstdNum> condition_prior(const StrategicGame& g, const StrategicModel& m,
                                       int player, int state);

// The state's own strategy maximizes expected utility against the
// conditional belief among all of the player's strategies.
bool is_rational_strategic(const StrategicGame& g, const StrategicModel& m, int player,
                           int state);

Verdict ck_rationality_strategic(const StrategicGame& g, const StrategicModel& m,
                                 ExecPolicy exec = ExecPolicy::parallel);

bool has_common_prior(const StrategicModel& m);

// The profile distribution induced by the player's prior factorizes as
// the product of its per-player marginals, exactly.
bool is_product_prior(const StrategicGame& g, const StrategicModel& m, int player);

}  // namespace epseq

#endif  // EPSEQ_EPISTEMIC_HPP_
