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

#include "epseq/valuation.hpp"

#include "epseq/errors.hpp"

namespace epseq {

NonstdNum reach_prob(const GameTree& g, const BehavioralProfile& p, int node) {
  NonstdNum prob(1);
  int cur = node;
  while (g.node(cur).parent >= 0) {
    const int parent = g.node(cur).parent;
    const int action = g.node(cur).parent_action;
    const Node& n = g.node(parent);
    if (n.kind == NodeKind::decision) {
      prob *= p.at(n.infoset)[static_cast<std::size_t>(action)];
    } else {
      prob *= NonstdNum(n.chance_probs[static_cast<std::size_t>(action)]);
    }
    cur = parent;
  }
  return prob;
}

NonstdNum reach_prob_infoset(const GameTree& g, const BehavioralProfile& p, int infoset) {
  NonstdNum total;
  for (int member : g.infoset(infoset).members) total += reach_prob(g, p, member);
  return total;
}

BeliefSystem induced_beliefs(const GameTree& g, const BehavioralProfile& p) {
  if (!is_completely_mixed(g, p)) {
    throw NotCompletelyMixedError("beliefs are only induced by completely mixed profiles");
  }
  BeliefSystem mu;
  mu.beliefs.resize(g.infosets().size());
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const InformationSet& iset = g.infosets()[i];
    std::vector<NonstdNum> reach;
    reach.reserve(iset.members.size());
    NonstdNum total;
    for (int member : iset.members) {
      reach.push_back(reach_prob(g, p, member));
      total += reach.back();
    }
    for (auto& r : reach) r /= total;
    mu.beliefs[i] = std::move(reach);
  }
  return mu;
}

namespace detail {

NonstdNum subtree_eu(const GameTree& g, int player, const BehavioralProfile& p, int node,
                     const OwnDistFn& own) {
  const Node& n = g.node(node);
  switch (n.kind) {
    case NodeKind::terminal:
      return NonstdNum(n.payoffs[static_cast<std::size_t>(player - 1)]);
    case NodeKind::chance: {
      NonstdNum acc;
      for (std::size_t a = 0; a < n.children.size(); ++a) {
        acc += NonstdNum(n.chance_probs[a]) * subtree_eu(g, player, p, n.children[a], own);
      }
      return acc;
    }
    case NodeKind::decision: {
      const std::vector<NonstdNum>& dist =
          (n.player == player) ? own(node) : p.at(n.infoset);
      NonstdNum acc;
      for (std::size_t a = 0; a < n.children.size(); ++a) {
        if (dist[a].is_zero()) continue;
        acc += dist[a] * subtree_eu(g, player, p, n.children[a], own);
      }
      return acc;
    }
  }
  return NonstdNum();
}

NonstdNum weighted_eu(const GameTree& g, int player, const BehavioralProfile& p, int infoset,
                      const std::vector<NonstdNum>& member_weights, const OwnDistFn& own) {
  const InformationSet& iset = g.infoset(infoset);
  NonstdNum acc;
  for (std::size_t k = 0; k < iset.members.size(); ++k) {
    if (member_weights[k].is_zero()) continue;
    acc += member_weights[k] * subtree_eu(g, player, p, iset.members[k], own);
  }
  return acc;
}

}  // namespace detail

NonstdNum cond_eu(const GameTree& g, int player, const BehavioralProfile& p,
                  const BeliefSystem& mu, int infoset) {
  const auto own = [&](int node) -> const std::vector<NonstdNum>& {
    return p.at(g.node(node).infoset);
  };
  return detail::weighted_eu(g, player, p, infoset,
                             mu.beliefs[static_cast<std::size_t>(infoset)], own);
}

OutcomeDistribution outcome_distribution(const GameTree& g, const BehavioralProfile& p) {
  OutcomeDistribution out;
  out.mass.reserve(g.terminal_nodes().size());
  for (int t : g.terminal_nodes()) out.mass.push_back(reach_prob(g, p, t));
  return out;
}

NonstdNum ex_ante_eu(const GameTree& g, const BehavioralProfile& p, int player) {
  NonstdNum acc;
  for (int t : g.terminal_nodes()) {
    acc += reach_prob(g, p, t) * NonstdNum(g.node(t).payoffs[static_cast<std::size_t>(player - 1)]);
  }
  return acc;
}

}  // namespace epseq
