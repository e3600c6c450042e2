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

#include "epseq/epistemic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "epseq/errors.hpp"
#include "epseq/response.hpp"

namespace epseq {

namespace {

// The (infoset, action-taken) pairs player `player` passes through on
// the path to the given terminal, root-down.
std::vector<std::pair<int, int>> own_visits(const GameTree& g, int player, int terminal) {
  return g.experience(player, terminal);
}

std::string state_label(const GameTree& g, int terminal) {
  const std::vector<std::string> labels = g.path_labels(terminal);
  if (labels.empty()) return "(root)";
  std::string out = labels.front();
  for (std::size_t k = 1; k < labels.size(); ++k) out += "." + labels[k];
  return out;
}

}  // namespace

void validate_model(const GameTree& g, const ExtensiveModel& m) {
  if (m.state_names.size() != m.num_states()) {
    throw IncompatibleModelError("state names and outcomes disagree in length");
  }
  if (static_cast<int>(m.priors.size()) != g.num_players()) {
    throw IncompatibleModelError("model must carry one prior per player");
  }
  for (int t : m.outcome) {
    if (t < 0 || t >= static_cast<int>(g.nodes().size()) ||
        g.node(t).kind != NodeKind::terminal) {
      throw IncompatibleModelError("model outcome is not a terminal history of the game");
    }
  }
  for (const auto& prior : m.priors) {
    if (prior.size() != m.num_states()) {
      throw IncompatibleModelError("prior length does not match the state space");
    }
    NonstdNum total;
    for (const NonstdNum& x : prior) {
      if (x.sign() < 0) throw IncompatibleModelError("negative prior probability");
      total += x;
    }
    if (m.num_states() > 0 && !(total == NonstdNum(1))) {
      throw IncompatibleModelError("prior sums to " + total.to_string() + ", expected 1");
    }
  }
}

OutcomeDistribution pushforward(const GameTree& g, const ExtensiveModel& m, int player) {
  OutcomeDistribution out;
  out.mass.assign(g.terminal_nodes().size(), NonstdNum());
  std::map<int, std::size_t> position;
  for (std::size_t k = 0; k < g.terminal_nodes().size(); ++k) {
    position[g.terminal_nodes()[k]] = k;
  }
  const auto& prior = m.priors[static_cast<std::size_t>(player - 1)];
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    out.mass[position.at(m.outcome[s])] += prior[s];
  }
  return out;
}

bool is_compatible(const GameTree& g, const ExtensiveModel& m, const BehavioralProfile& trem) {
  const OutcomeDistribution target = outcome_distribution(g, trem);
  for (int i = 1; i <= g.num_players(); ++i) {
    if (!(pushforward(g, m, i) == target)) return false;
  }
  return true;
}

ExtensiveModel canonical_model(const GameTree& g, const BehavioralProfile& trem) {
  validate_profile(g, trem);
  ExtensiveModel m;
  std::vector<NonstdNum> prior;
  prior.reserve(g.terminal_nodes().size());
  for (int t : g.terminal_nodes()) {
    m.state_names.push_back(state_label(g, t));
    m.outcome.push_back(t);
    prior.push_back(reach_prob(g, trem, t));
  }
  m.priors.assign(static_cast<std::size_t>(g.num_players()), prior);
  return m;
}

namespace {

void require_rationality_inputs(const GameTree& g, const ExtensiveModel& m,
                                const BehavioralProfile& trem, const BehavioralProfile& sigma) {
  validate_model(g, m);
  validate_profile(g, trem);
  validate_profile(g, sigma);
  if (!is_completely_mixed(g, trem)) {
    throw NotCompletelyMixedError("rationality at a state needs a completely mixed tremble");
  }
  if (!is_standard(sigma) || !differ_infinitesimally(sigma, trem)) {
    throw NotInfinitesimallyCloseError(
        "sigma must be the standard part of the tremble (standard, infinitesimally close)");
  }
  if (!is_compatible(g, m, trem)) {
    throw IncompatibleModelError("model pushforwards do not match the tremble's outcome law");
  }
}

}  // namespace

bool is_locally_rational(const GameTree& g, const ExtensiveModel& m,
                         const BehavioralProfile& trem, const BehavioralProfile& sigma,
                         int player, int state, const NonstdNum& eps) {
  require_rationality_inputs(g, m, trem, sigma);
  for (const auto& [iset, action] : own_visits(g, player, m.outcome[static_cast<std::size_t>(state)])) {
    if (sigma.at(iset)[static_cast<std::size_t>(action)].sign() <= 0) continue;
    std::vector<NonstdNum> point(g.infoset(iset).actions.size(), NonstdNum());
    point[static_cast<std::size_t>(action)] = NonstdNum(1);
    if (cmp(local_shortfall(g, player, iset, point, trem).amount, eps) > 0) return false;
  }
  return true;
}

bool is_rational(const GameTree& g, const ExtensiveModel& m, const BehavioralProfile& trem,
                 const BehavioralProfile& sigma, int player, int state, const NonstdNum& eps) {
  require_rationality_inputs(g, m, trem, sigma);
  const BehavioralStrategy sigma_i = sigma.strategy_of(g, player);
  for (const auto& [iset, action] : own_visits(g, player, m.outcome[static_cast<std::size_t>(state)])) {
    (void)action;
    if (cmp(global_shortfall(g, player, iset, sigma_i, trem).amount, eps) > 0) return false;
  }
  return true;
}

Verdict ck_rationality(const GameTree& g, const ExtensiveModel& m, const BehavioralProfile& trem,
                       const BehavioralProfile& sigma, const NonstdNum& eps, RationalityMode mode,
                       ExecPolicy exec) {
  if (m.num_states() == 0) {
    // Universal quantification over no states: vacuously true. Checked
    // before compatibility, which no empty model can satisfy.
    validate_model(g, m);
    Verdict v = Verdict::passed(Route::epistemic,
                                VerifyCertificate{eps, trem, induced_beliefs(g, trem), {}});
    v.notes.push_back("degenerate: empty state space, rationality holds vacuously");
    return v;
  }
  require_rationality_inputs(g, m, trem, sigma);

  // Which (infoset, action) pairs any state needs (local mode keys on
  // the action taken; global mode only on the infoset).
  std::set<std::pair<int, int>> local_keys;
  std::set<int> global_keys;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    for (int player = 1; player <= g.num_players(); ++player) {
      for (const auto& [iset, action] : own_visits(g, player, m.outcome[s])) {
        if (mode == RationalityMode::local) {
          if (sigma.at(iset)[static_cast<std::size_t>(action)].sign() > 0) {
            local_keys.insert({iset, action});
          }
        } else {
          global_keys.insert(iset);
        }
      }
    }
  }

  // Shortfall kernel: one task per key, merged by key order afterwards.
  std::map<std::pair<int, int>, Shortfall> local_cache;
  std::map<int, Shortfall> global_cache;
  if (mode == RationalityMode::local) {
    std::vector<std::pair<int, int>> keys(local_keys.begin(), local_keys.end());
    std::vector<Shortfall> results(keys.size());
    parallel_for(keys.size(), exec, [&](std::size_t k) {
      const auto [iset, action] = keys[k];
      std::vector<NonstdNum> point(g.infoset(iset).actions.size(), NonstdNum());
      point[static_cast<std::size_t>(action)] = NonstdNum(1);
      results[k] = local_shortfall(g, g.infoset(iset).player, iset, point, trem);
    });
    for (std::size_t k = 0; k < keys.size(); ++k) local_cache[keys[k]] = results[k];
  } else {
    std::vector<int> keys(global_keys.begin(), global_keys.end());
    std::vector<Shortfall> results(keys.size());
    parallel_for(keys.size(), exec, [&](std::size_t k) {
      const int player = g.infoset(keys[k]).player;
      results[k] = global_shortfall(g, player, keys[k], sigma.strategy_of(g, player), trem);
    });
    for (std::size_t k = 0; k < keys.size(); ++k) global_cache[keys[k]] = results[k];
  }

  // Deterministic verdict sweep in (player, state) order.
  for (int player = 1; player <= g.num_players(); ++player) {
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      for (const auto& [iset, action] : own_visits(g, player, m.outcome[s])) {
        const Shortfall* found = nullptr;
        if (mode == RationalityMode::local) {
          auto it = local_cache.find({iset, action});
          if (it == local_cache.end()) continue;  // infinitesimal-probability action
          found = &it->second;
        } else {
          found = &global_cache.at(iset);
        }
        if (cmp(found->amount, eps) > 0) {
          Counterexample cex;
          cex.player = player;
          cex.state = m.state_names[s];
          cex.infoset = g.infoset(iset).id;
          cex.deviation = g.infoset(found->infoset).actions[static_cast<std::size_t>(found->action)];
          for (const auto& [ci, ca] : found->continuation) {
            cex.continuation[g.infoset(ci).id] =
                g.infoset(ci).actions[static_cast<std::size_t>(ca)];
          }
          cex.shortfall = found->amount;
          return Verdict::failed(Route::epistemic, std::move(cex));
        }
      }
    }
  }
  return Verdict::passed(Route::epistemic,
                         VerifyCertificate{eps, trem, induced_beliefs(g, trem), {}});
}

// -------- strategic form --------

void validate_model(const StrategicGame& g, const StrategicModel& m) {
  if (m.state_names.size() != m.num_states()) {
    throw IncompatibleModelError("state names and profiles disagree in length");
  }
  if (static_cast<int>(m.priors.size()) != g.num_players) {
    throw IncompatibleModelError("model must carry one prior per player");
  }
  for (const auto& prof : m.profile) {
    if (static_cast<int>(prof.size()) != g.num_players) {
      throw IncompatibleModelError("state profile does not cover every player");
    }
    for (int p = 0; p < g.num_players; ++p) {
      const int s = prof[static_cast<std::size_t>(p)];
      if (s < 0 || s >= static_cast<int>(g.strategies[static_cast<std::size_t>(p)].size())) {
        throw IncompatibleModelError("state profile uses an unknown strategy");
      }
    }
  }
  for (const auto& prior : m.priors) {
    if (prior.size() != m.num_states()) {
      throw IncompatibleModelError("prior length does not match the state space");
    }
    NonstdNum total;
    for (const NonstdNum& x : prior) {
      if (x.sign() < 0) throw IncompatibleModelError("negative prior probability");
      total += x;
    }
    if (m.num_states() > 0 && !(total == NonstdNum(1))) {
      throw IncompatibleModelError("prior sums to " + total.to_string() + ", expected 1");
    }
  }
}

std::vector<NonstdNum> condition_prior(const StrategicGame& g, const StrategicModel& m,
                                       int player, int state) {
  const auto& prior = m.priors[static_cast<std::size_t>(player - 1)];
  const int own = m.profile[static_cast<std::size_t>(state)][static_cast<std::size_t>(player - 1)];
  NonstdNum event_mass;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (m.profile[s][static_cast<std::size_t>(player - 1)] == own) event_mass += prior[s];
  }
  if (event_mass.sign() <= 0) {
    throw ZeroConditioningEventError(
        "player " + std::to_string(player) + " conditions on strategy '" +
        g.strategies[static_cast<std::size_t>(player - 1)][static_cast<std::size_t>(own)] +
        "', which has prior probability 0");
  }
  std::vector<NonstdNum> out(g.num_profiles(), NonstdNum());
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (m.profile[s][static_cast<std::size_t>(player - 1)] != own) continue;
    out[g.flat_index(m.profile[s])] += prior[s] / event_mass;
  }
  return out;
}

bool is_rational_strategic(const StrategicGame& g, const StrategicModel& m, int player,
                           int state) {
  const std::vector<NonstdNum> belief = condition_prior(g, m, player, state);
  const int own = m.profile[static_cast<std::size_t>(state)][static_cast<std::size_t>(player - 1)];

  const auto expected_utility = [&](int candidate) {
    NonstdNum acc;
    for (std::size_t flat = 0; flat < belief.size(); ++flat) {
      if (belief[flat].is_zero()) continue;
      std::vector<int> prof = g.profile_of(flat);
      prof[static_cast<std::size_t>(player - 1)] = candidate;
      acc += belief[flat] * NonstdNum(g.utility(prof, player));
    }
    return acc;
  };

  const NonstdNum own_value = expected_utility(own);
  const int num_own = static_cast<int>(g.strategies[static_cast<std::size_t>(player - 1)].size());
  for (int candidate = 0; candidate < num_own; ++candidate) {
    if (candidate == own) continue;
    if (cmp(expected_utility(candidate), own_value) > 0) return false;
  }
  return true;
}

Verdict ck_rationality_strategic(const StrategicGame& g, const StrategicModel& m,
                                 ExecPolicy exec) {
  validate_model(g, m);
  if (m.num_states() == 0) {
    Verdict v = Verdict::passed(Route::epistemic, VerifyCertificate{NonstdNum(), {}, {}, {}});
    v.notes.push_back("degenerate: empty state space, rationality holds vacuously");
    return v;
  }

  // Rationality at a state depends only on (player, own strategy); the
  // kernel runs one task per such pair.
  std::set<std::pair<int, int>> key_set;
  for (int player = 1; player <= g.num_players; ++player) {
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      key_set.insert({player, m.profile[s][static_cast<std::size_t>(player - 1)]});
    }
  }
  const std::vector<std::pair<int, int>> keys(key_set.begin(), key_set.end());
  std::vector<char> rational(keys.size(), 1);
  std::vector<std::pair<int, NonstdNum>> best_deviation(keys.size());
  parallel_for(keys.size(), exec, [&](std::size_t k) {
    const auto [player, own] = keys[k];
    // A representative state with this own strategy.
    std::size_t state = 0;
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      if (m.profile[s][static_cast<std::size_t>(player - 1)] == own) {
        state = s;
        break;
      }
    }
    const std::vector<NonstdNum> belief = condition_prior(g, m, player, static_cast<int>(state));
    const auto expected_utility = [&](int candidate) {
      NonstdNum acc;
      for (std::size_t flat = 0; flat < belief.size(); ++flat) {
        if (belief[flat].is_zero()) continue;
        std::vector<int> prof = g.profile_of(flat);
        prof[static_cast<std::size_t>(player - 1)] = candidate;
        acc += belief[flat] * NonstdNum(g.utility(prof, player));
      }
      return acc;
    };
    const NonstdNum own_value = expected_utility(own);
    const int num_own = static_cast<int>(g.strategies[static_cast<std::size_t>(player - 1)].size());
    for (int candidate = 0; candidate < num_own; ++candidate) {
      if (candidate == own) continue;
      const NonstdNum gain = expected_utility(candidate) - own_value;
      if (gain.sign() > 0) {
        rational[k] = 0;
        best_deviation[k] = {candidate, gain};
        break;
      }
    }
  });

  std::map<std::pair<int, int>, std::size_t> key_pos;
  for (std::size_t k = 0; k < keys.size(); ++k) key_pos[keys[k]] = k;

  for (int player = 1; player <= g.num_players; ++player) {
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      const int own = m.profile[s][static_cast<std::size_t>(player - 1)];
      const std::size_t k = key_pos.at({player, own});
      if (rational[k]) continue;
      Counterexample cex;
      cex.player = player;
      cex.state = m.state_names[s];
      cex.infoset =
          g.strategies[static_cast<std::size_t>(player - 1)][static_cast<std::size_t>(own)];
      cex.deviation = g.strategies[static_cast<std::size_t>(player - 1)]
                                  [static_cast<std::size_t>(best_deviation[k].first)];
      cex.shortfall = best_deviation[k].second;
      return Verdict::failed(Route::epistemic, std::move(cex));
    }
  }
  return Verdict::passed(Route::epistemic, VerifyCertificate{NonstdNum(), {}, {}, {}});
}

bool has_common_prior(const StrategicModel& m) {
  for (std::size_t i = 1; i < m.priors.size(); ++i) {
    if (!(m.priors[i] == m.priors[0])) return false;
  }
  return true;
}

bool is_product_prior(const StrategicGame& g, const StrategicModel& m, int player) {
  std::vector<NonstdNum> induced(g.num_profiles(), NonstdNum());
  const auto& prior = m.priors[static_cast<std::size_t>(player - 1)];
  for (std::size_t s = 0; s < m.num_states(); ++s) induced[g.flat_index(m.profile[s])] += prior[s];

  std::vector<std::vector<NonstdNum>> marginals;
  for (int p = 0; p < g.num_players; ++p) {
    marginals.emplace_back(g.strategies[static_cast<std::size_t>(p)].size(), NonstdNum());
  }
  for (std::size_t flat = 0; flat < induced.size(); ++flat) {
    const std::vector<int> prof = g.profile_of(flat);
    for (int p = 0; p < g.num_players; ++p) {
      marginals[static_cast<std::size_t>(p)][static_cast<std::size_t>(prof[static_cast<std::size_t>(p)])] +=
          induced[flat];
    }
  }
  for (std::size_t flat = 0; flat < induced.size(); ++flat) {
    const std::vector<int> prof = g.profile_of(flat);
    NonstdNum product(1);
    for (int p = 0; p < g.num_players; ++p) {
      product *= marginals[static_cast<std::size_t>(p)][static_cast<std::size_t>(prof[static_cast<std::size_t>(p)])];
    }
    if (!(induced[flat] == product)) return false;
  }
  return true;
}

}  // namespace epseq
