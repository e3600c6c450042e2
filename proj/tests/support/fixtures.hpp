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

#ifndef EPSEQ_TESTS_SUPPORT_FIXTURES_HPP_
#define EPSEQ_TESTS_SUPPORT_FIXTURES_HPP_

#include <map>
#include <string>
#include <vector>

#include "epseq/game.hpp"
#include "epseq/strategy.hpp"

namespace epseq::testing {

// Entry game: player 1 stays out (0, 2) or enters; after entry player 2
// fights (-1, -1) or accommodates (1, 1).
GameTree entry_game();

// Player 1 moves twice in a row (a chain of two own information sets),
// then payoffs; used for height and local-to-global checks.
GameTree chain_game();

// An imperfect-recall game: player 1 moves, then a second decision of
// player 1 pools nodes reached by different own actions.
GameTree forgetful_game();

// Imperfect information with perfect recall: player 1 moves T/B unseen
// by player 2, whose single information set pools both nodes. Payoffs
// (T,x) = (2,1), (T,y) = (0,0), (B,x) = (0,0), (B,y) = (1,2), so both
// (T,x) and (B,y) survive every refinement while (T,y) does not.
GameTree pooled_game();

// Strategic fixtures; strategy labels are disjoint across players.
StrategicGame matching_pennies();   // H1/T1 vs H2/T2, zero-sum
StrategicGame prisoners_dilemma();  // C1/D1 vs C2/D2, defect dominates
StrategicGame chicken();            // D1/C1 vs D2/C2
// Dominance-solvable in two rounds: R2 strictly dominated, then D1.
StrategicGame two_round_solvable();

// The pure behavioral profile selecting the named action at each
// information set.
BehavioralProfile pure_profile(const GameTree& g,
                               const std::map<std::string, std::string>& actions);

// A behavioral profile from rational rows keyed by infoset id.
BehavioralProfile profile_from_rows(
    const GameTree& g, const std::map<std::string, std::vector<Rational>>& rows);

// Index of the information set with the given id.
int infoset_index(const GameTree& g, const std::string& id);
// Index of an action label within an information set.
int action_index(const GameTree& g, int infoset, const std::string& label);

MixedProfile mixed(const StrategicGame& g, const std::vector<std::vector<Rational>>& probs);

}  // namespace epseq::testing

#endif  // EPSEQ_TESTS_SUPPORT_FIXTURES_HPP_
