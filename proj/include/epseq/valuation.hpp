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

#ifndef EPSEQ_VALUATION_HPP_
#define EPSEQ_VALUATION_HPP_

#include <functional>
#include <vector>

#include "epseq/game.hpp"
#include "epseq/nonstd.hpp"
#include "epseq/strategy.hpp"

namespace epseq {

// Per-information-set distribution over member histories, aligned with
// InformationSet::members.
struct BeliefSystem {
  std::vector<std::vector<NonstdNum>> beliefs;  // [infoset][member position]

  const NonstdNum& at(int infoset, int member_pos) const {
    return beliefs[static_cast<std::size_t>(infoset)][static_cast<std::size_t>(member_pos)];
  }
  bool operator==(const BeliefSystem& other) const = default;
};

// Probability mass on terminal histories, aligned with
// GameTree::terminal_nodes().
struct OutcomeDistribution {
  std::vector<NonstdNum> mass;
  bool operator==(const OutcomeDistribution& other) const = default;
};

// Product of the acting player's (or chance's) probabilities along the
// path from the root to `node`.
NonstdNum reach_prob(const GameTree& g, const BehavioralProfile& p, int node);

// Sum of member reach probabilities; positive whenever p is completely
// mixed.
NonstdNum reach_prob_infoset(const GameTree& g, const BehavioralProfile& p, int infoset);

// Beliefs determined by a completely mixed profile by conditioning:
// mu_I(h) = reach(h) / reach(I). NotCompletelyMixedError otherwise.
BeliefSystem induced_beliefs(const GameTree& g, const BehavioralProfile& p);

// Conditional expected utility for `player` at `infoset`:
// sum over members h and terminals z of mu_I(h) * Pr_p(z | h) * u_i(z),
// where Pr_p(z | h) is the product of action probabilities on the
// segment from h to z (zero when h is not a prefix of z).
NonstdNum cond_eu(const GameTree& g, int player, const BehavioralProfile& p,
                  const BeliefSystem& mu, int infoset);

OutcomeDistribution outcome_distribution(const GameTree& g, const BehavioralProfile& p);

// Ex ante expected utility: sum over terminals of reach * payoff.
NonstdNum ex_ante_eu(const GameTree& g, const BehavioralProfile& p, int player);

namespace detail {

// Distribution provider for one player's decision nodes; lets the
// response machinery evaluate deviations without materializing whole
// profiles. Returns the per-action distribution at the given node.
using OwnDistFn = std::function<const std::vector<NonstdNum>&(int node)>;

// Expected utility for `player` of the subtree rooted at `node`, using
// `p` for other players and chance, and `own` for `player`'s nodes.
NonstdNum subtree_eu(const GameTree& g, int player, const BehavioralProfile& p, int node,
                     const OwnDistFn& own);

// Conditional EU over an infoset with explicit member weights.
NonstdNum weighted_eu(const GameTree& g, int player, const BehavioralProfile& p, int infoset,
                      const std::vector<NonstdNum>& member_weights, const OwnDistFn& own);

}  // namespace detail

}  // namespace epseq

#endif  // EPSEQ_VALUATION_HPP_
