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

#ifndef EPSEQ_RESPONSE_HPP_
#define EPSEQ_RESPONSE_HPP_

#include <map>
#include <vector>

#include "epseq/game.hpp"
#include "epseq/parallel.hpp"
#include "epseq/strategy.hpp"
#include "epseq/valuation.hpp"

namespace epseq {

// Outcome of a best-deviation analysis at one information set. The
// amount is the maximal conditional-EU gain available to the player
// from deviating (may be <= 0); the witness deviation attains it.
struct Shortfall {
  int infoset = -1;
  NonstdNum amount;
  // Witness: for global shortfalls, the maximizing pure continuation
  // (action per own information set at/below `infoset` that the
  // maximization visited); for local shortfalls only `action` is set.
  std::map<int, int> continuation;
  int action = -1;  // witness action at `infoset`
};

// Maximal gain over all pure continuation strategies of player i at and
// below I, against the tremble and the beliefs it induces, relative to
// playing sigma_i from I on. Pure continuations suffice: conditional EU
// is multilinear in i's per-infoset distributions, so an extreme point
// attains the maximum. The maximization walks only own information
// sets actually reachable from I (others cannot affect the value) and
// decomposes per branch, which is exact for games with perfect recall.
// NotCompletelyMixedError unless trem is completely mixed.
Shortfall global_shortfall(const GameTree& g, int player, int infoset,
                           const BehavioralStrategy& sigma_i, const BehavioralProfile& trem);

// Maximal gain over single-action deviations at I, holding the tremble
// continuation fixed elsewhere, relative to playing `action_dist` at I.
Shortfall local_shortfall(const GameTree& g, int player, int infoset,
                          const std::vector<NonstdNum>& action_dist,
                          const BehavioralProfile& trem);

// sigma_i is an eps-best response relative to trem: every own
// information set's global shortfall is at most eps. The per-infoset
// report (aligned with infosets_of(player)) is filled when requested.
bool is_eps_best(const GameTree& g, int player, const BehavioralStrategy& sigma_i,
                 const BehavioralProfile& trem, const NonstdNum& eps,
                 std::vector<Shortfall>* report = nullptr,
                 ExecPolicy exec = ExecPolicy::parallel);

// sigma_i(I) is a local eps-best response at every own information set.
bool is_local_eps_best_profile(const GameTree& g, int player, const BehavioralStrategy& sigma_i,
                               const BehavioralProfile& trem, const NonstdNum& eps,
                               std::vector<Shortfall>* report = nullptr,
                               ExecPolicy exec = ExecPolicy::parallel);

// Largest conditional-EU change from swapping sigma_i for the
// tremble's own component, over all of i's information sets:
//   max_I | EU_i((sigma_i, trem_-i) | I) - EU_i((trem_i, trem_-i) | I) |.
// Infinitesimal whenever sigma_i and trem_i differ infinitesimally;
// NotInfinitesimallyCloseError otherwise.
NonstdNum substitution_gap(const GameTree& g, int player, const BehavioralStrategy& sigma_i,
                           const BehavioralProfile& trem);

// Smallest positive probability a standard profile assigns anywhere.
Rational min_support_prob(const GameTree& g, const BehavioralProfile& sigma);

// Certificate turning local eps-optimality into a global bound: if
// sigma_i is a local eps-best response relative to trem, then it is a
// d*(eps + eps')-best response, where eps' is the substitution gap and
// d bounds the own-information-set height.
struct LocalToGlobalCert {
  NonstdNum eps;
  NonstdNum eps_prime;
  int d = 0;
  NonstdNum bound;  // d * (eps + eps_prime)
};

// PreconditionFailedError unless is_local_eps_best_profile holds at eps.
LocalToGlobalCert local_to_global(const GameTree& g, int player,
                                  const BehavioralStrategy& sigma_i,
                                  const BehavioralProfile& trem, const NonstdNum& eps);

}  // namespace epseq

#endif  // EPSEQ_RESPONSE_HPP_
