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

#ifndef EPSEQ_TESTS_SUPPORT_ORACLE_HPP_
#define EPSEQ_TESTS_SUPPORT_ORACLE_HPP_

#include <random>
#include <vector>

#include "epseq/game.hpp"
#include "epseq/strategy.hpp"

namespace epseq::testing {

// Brute-force shortfall oracle, independent of the response module: it
// enumerates the full cartesian product of actions over every own
// information set weakly after I (reachable or not) and recomputes
// reach probabilities, beliefs and expected utilities with its own
// tree walks. Exponential; only for small fixtures.
NonstdNum oracle_global_shortfall(const GameTree& g, int player, int infoset,
                                  const BehavioralStrategy& sigma_i,
                                  const BehavioralProfile& trem);

// Ex ante best pure-strategy gain for `player` over the whole game
// against sigma_{-i}, by enumerating every pure behavioral strategy.
// Used for the on-path equilibrium cross-check.
NonstdNum oracle_ex_ante_gain(const GameTree& g, int player, const BehavioralProfile& sigma);

// -------- random instances --------

struct RandomGameConfig {
  int min_players = 1;
  int max_players = 3;
  int max_depth = 4;
  int max_actions = 3;
  // Per mille knobs keep the generator integer-only and deterministic.
  int chance_per_mille = 120;    // a non-terminal node is a chance node
  int stop_per_mille = 260;      // stop early and emit a terminal
  int pool_per_mille = 350;      // join an existing compatible information set
  bool perfect_information = false;
  int payoff_halves = 10;  // payoffs k/2 with k in [-payoff_halves*2, payoff_halves*2]
};

GameTree random_game(std::mt19937_64& rng, const RandomGameConfig& cfg);

// Random standard profile from a small grid of exact distributions
// (biased towards pure rows).
BehavioralProfile random_standard_profile(const GameTree& g, std::mt19937_64& rng);

// Pure profile maximizing each mover's own payoff by backward
// induction; defined for perfect-information games only.
BehavioralProfile backward_induction_profile(const GameTree& g);

// Random element of the eps field: eps^order * num/den with small
// integer-coefficient polynomials, num(0) != 0, den(0) != 0.
NonstdNum random_nonstd(std::mt19937_64& rng, int max_degree = 3, int max_order = 2,
                        int coeff_bound = 4);

// Degree/coefficient guard for comparing field order against exact
// evaluation at eps = point: after clearing denominators both parts
// must have degree <= max_degree and integer coefficients bounded so
// that point < 1/(degree*bound + 1).
bool eval_agreement_applicable(const NonstdNum& x, int max_degree, const Rational& point);

}  // namespace epseq::testing

#endif  // EPSEQ_TESTS_SUPPORT_ORACLE_HPP_
