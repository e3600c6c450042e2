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

#include "epseq/response.hpp"

#include <utility>

#include "epseq/errors.hpp"

namespace epseq {

namespace {

// Belief weights over the members of one information set under trem.
std::vector<NonstdNum> belief_row(const GameTree& g, const BehavioralProfile& trem, int infoset) {
  const InformationSet& iset = g.infoset(infoset);
  std::vector<NonstdNum> reach;
  reach.reserve(iset.members.size());
  NonstdNum total;
  for (int member : iset.members) {
    reach.push_back(reach_prob(g, trem, member));
    total += reach.back();
  }
  if (total.sign() <= 0) {
    throw NotCompletelyMixedError("information set '" + iset.id +
                                  "' is unreached; shortfalls need a completely mixed tremble");
  }
  for (auto& r : reach) r /= total;
  return reach;
}

void require_completely_mixed(const GameTree& g, const BehavioralProfile& trem) {
  if (!is_completely_mixed(g, trem)) {
    throw NotCompletelyMixedError("shortfall analysis needs a completely mixed profile");
  }
}

// Weighted entry points into the player's next own information sets,
// plus the terminal payoff mass collected on the way.
struct Fringe {
  NonstdNum terminal_eu;
  std::map<int, std::map<int, NonstdNum>> entries;  // infoset -> node -> weight
};

void gather(const GameTree& g, int player, const BehavioralProfile& others, int node,
            const NonstdNum& weight, Fringe* out) {
  const Node& n = g.node(node);
  switch (n.kind) {
    case NodeKind::terminal:
      out->terminal_eu += weight * NonstdNum(n.payoffs[static_cast<std::size_t>(player - 1)]);
      return;
    case NodeKind::decision:
      if (n.player == player) {
        out->entries[n.infoset][node] += weight;
        return;
      }
      for (std::size_t a = 0; a < n.children.size(); ++a) {
        const NonstdNum& prob = others.at(n.infoset)[a];
        if (prob.is_zero()) continue;
        gather(g, player, others, n.children[a], weight * prob, out);
      }
      return;
    case NodeKind::chance:
      for (std::size_t a = 0; a < n.children.size(); ++a) {
        gather(g, player, others, n.children[a], weight * NonstdNum(n.chance_probs[a]), out);
      }
      return;
  }
}

// Value of the best pure continuation from one own information set,
// entered with the given member weights. Each own information set
// reachable from here is entered through exactly one (infoset, action)
// pair above it (perfect recall), so per-branch maxima compose.
NonstdNum best_continuation(const GameTree& g, int player, const BehavioralProfile& trem,
                            int infoset, const std::map<int, NonstdNum>& weights,
                            std::map<int, int>* choices) {
  const InformationSet& iset = g.infoset(infoset);
  NonstdNum best;
  int best_action = -1;
  std::map<int, int> best_branch;
  for (std::size_t a = 0; a < iset.actions.size(); ++a) {
    Fringe fringe;
    for (const auto& [member, w] : weights) {
      gather(g, player, trem, g.node(member).children[a], w, &fringe);
    }
    NonstdNum value = fringe.terminal_eu;
    std::map<int, int> branch_choices;
    for (const auto& [next, next_weights] : fringe.entries) {
      value += best_continuation(g, player, trem, next, next_weights, &branch_choices);
    }
    if (best_action < 0 || cmp(value, best) > 0) {
      best = value;
      best_action = static_cast<int>(a);
      best_branch = std::move(branch_choices);
    }
  }
  // Merge the winning branch; own information sets reached through
  // different branches are disjoint, so plain insertion is enough.
  choices->insert(best_branch.begin(), best_branch.end());
  (*choices)[infoset] = best_action;
  return best;
}

}  // namespace

Shortfall global_shortfall(const GameTree& g, int player, int infoset,
                           const BehavioralStrategy& sigma_i, const BehavioralProfile& trem) {
  require_completely_mixed(g, trem);
  if (g.infoset(infoset).player != player) {
    throw WrongPlayerError("global shortfall at an information set the player does not own");
  }
  const std::vector<NonstdNum> mu = belief_row(g, trem, infoset);
  const InformationSet& iset = g.infoset(infoset);

  const auto own = [&](int node) -> const std::vector<NonstdNum>& {
    const auto it = sigma_i.choice.find(g.node(node).infoset);
    if (it == sigma_i.choice.end()) {
      throw InvalidProfileError("strategy does not cover information set '" +
                                g.infoset(g.node(node).infoset).id + "'");
    }
    return it->second;
  };
  const NonstdNum baseline = detail::weighted_eu(g, player, trem, infoset, mu, own);

  std::map<int, NonstdNum> weights;
  for (std::size_t k = 0; k < iset.members.size(); ++k) weights[iset.members[k]] = mu[k];

  Shortfall out;
  out.infoset = infoset;
  const NonstdNum best = best_continuation(g, player, trem, infoset, weights, &out.continuation);
  out.amount = best - baseline;
  out.action = out.continuation.at(infoset);
  return out;
}

Shortfall local_shortfall(const GameTree& g, int player, int infoset,
                          const std::vector<NonstdNum>& action_dist,
                          const BehavioralProfile& trem) {
  require_completely_mixed(g, trem);
  if (g.infoset(infoset).player != player) {
    throw WrongPlayerError("local shortfall at an information set the player does not own");
  }
  const InformationSet& iset = g.infoset(infoset);
  if (action_dist.size() != iset.actions.size()) {
    throw BadDistributionError("distribution arity does not match information set '" + iset.id +
                               "'");
  }
  const std::vector<NonstdNum> mu = belief_row(g, trem, infoset);

  // EU of trem with the action at I replaced by a point mass; the
  // value at a mixed distribution is the matching convex combination.
  std::vector<NonstdNum> pure_values;
  pure_values.reserve(iset.actions.size());
  for (std::size_t a = 0; a < iset.actions.size(); ++a) {
    std::vector<NonstdNum> point(iset.actions.size(), NonstdNum());
    point[a] = NonstdNum(1);
    const auto own = [&](int node) -> const std::vector<NonstdNum>& {
      return g.node(node).infoset == infoset ? point : trem.at(g.node(node).infoset);
    };
    pure_values.push_back(detail::weighted_eu(g, player, trem, infoset, mu, own));
  }

  NonstdNum value_at;
  for (std::size_t a = 0; a < pure_values.size(); ++a) value_at += action_dist[a] * pure_values[a];

  Shortfall out;
  out.infoset = infoset;
  out.action = 0;
  NonstdNum best = pure_values[0];
  for (std::size_t a = 1; a < pure_values.size(); ++a) {
    if (cmp(pure_values[a], best) > 0) {
      best = pure_values[a];
      out.action = static_cast<int>(a);
    }
  }
  out.amount = best - value_at;
  return out;
}

namespace {

bool sweep_within(const GameTree& g, int player,
                  const std::function<Shortfall(int)>& shortfall_at, const NonstdNum& eps,
                  std::vector<Shortfall>* report, ExecPolicy exec) {
  const std::vector<int> own = g.infosets_of(player);
  std::vector<Shortfall> results(own.size());
  parallel_for(own.size(), exec,
               [&](std::size_t k) { results[k] = shortfall_at(own[k]); });
  bool ok = true;
  for (const Shortfall& s : results) {
    if (cmp(s.amount, eps) > 0) ok = false;
  }
  if (report != nullptr) *report = std::move(results);
  return ok;
}

}  // namespace

bool is_eps_best(const GameTree& g, int player, const BehavioralStrategy& sigma_i,
                 const BehavioralProfile& trem, const NonstdNum& eps,
                 std::vector<Shortfall>* report, ExecPolicy exec) {
  require_completely_mixed(g, trem);
  return sweep_within(
      g, player, [&](int iset) { return global_shortfall(g, player, iset, sigma_i, trem); }, eps,
      report, exec);
}

bool is_local_eps_best_profile(const GameTree& g, int player, const BehavioralStrategy& sigma_i,
                               const BehavioralProfile& trem, const NonstdNum& eps,
                               std::vector<Shortfall>* report, ExecPolicy exec) {
  require_completely_mixed(g, trem);
  return sweep_within(
      g, player,
      [&](int iset) { return local_shortfall(g, player, iset, sigma_i.choice.at(iset), trem); },
      eps, report, exec);
}

NonstdNum substitution_gap(const GameTree& g, int player, const BehavioralStrategy& sigma_i,
                           const BehavioralProfile& trem) {
  require_completely_mixed(g, trem);
  const auto own_sigma = [&](int node) -> const std::vector<NonstdNum>& {
    return sigma_i.choice.at(g.node(node).infoset);
  };
  const auto own_trem = [&](int node) -> const std::vector<NonstdNum>& {
    return trem.at(g.node(node).infoset);
  };
  NonstdNum gap;
  for (int iset : g.infosets_of(player)) {
    const std::vector<NonstdNum> mu = belief_row(g, trem, iset);
    const NonstdNum with_sigma = detail::weighted_eu(g, player, trem, iset, mu, own_sigma);
    const NonstdNum with_trem = detail::weighted_eu(g, player, trem, iset, mu, own_trem);
    gap = nonstd_max(gap, nonstd_abs(with_sigma - with_trem));
  }
  if (!gap.is_infinitesimal()) {
    throw NotInfinitesimallyCloseError(
        "strategy and tremble are not infinitesimally close (gap " + gap.to_string() + ")");
  }
  return gap;
}

Rational min_support_prob(const GameTree& g, const BehavioralProfile& sigma) {
  if (!is_standard(sigma)) {
    throw PreconditionFailedError("min_support_prob expects a standard profile");
  }
  bool found = false;
  Rational best(0);
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    for (const NonstdNum& x : sigma.at(static_cast<int>(i))) {
      const Rational q = x.standard_part();
      if (q > 0 && (!found || q < best)) {
        best = q;
        found = true;
      }
    }
  }
  if (!found) throw PreconditionFailedError("profile has no positive entry");
  return best;
}

LocalToGlobalCert local_to_global(const GameTree& g, int player,
                                  const BehavioralStrategy& sigma_i,
                                  const BehavioralProfile& trem, const NonstdNum& eps) {
  if (!is_local_eps_best_profile(g, player, sigma_i, trem, eps)) {
    throw PreconditionFailedError("strategy is not a local eps-best response at eps = " +
                                  eps.to_string());
  }
  LocalToGlobalCert cert;
  cert.eps = eps;
  cert.eps_prime = substitution_gap(g, player, sigma_i, trem);
  cert.d = height_bound(g, player);
  cert.bound = NonstdNum(cert.d) * (cert.eps + cert.eps_prime);
  return cert;
}

}  // namespace epseq
