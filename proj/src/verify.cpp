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

#include "epseq/verify.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "epseq/errors.hpp"
#include "epseq/feasibility.hpp"
#include "epseq/response.hpp"

namespace epseq {

namespace {

NonstdNum clamp_nonneg(const NonstdNum& x) { return x.sign() > 0 ? x : NonstdNum(); }

void require_strategic(const StrategicGame& g) {
  const ValidationReport report = validate(g);
  if (!report.ok) throw InvalidGameError(report.issues.front().message);
}

void require_extensive_inputs(const GameTree& g, const BehavioralProfile& sigma,
                              const BehavioralProfile& trem) {
  const ValidationReport report = validate(g);
  if (!report.ok) throw InvalidGameError(report.issues.front().message);
  validate_profile(g, sigma);
  validate_profile(g, trem);
  if (!is_standard(sigma)) {
    throw InvalidProfileError("candidate profile must be standard");
  }
  if (!is_completely_mixed(g, trem)) {
    throw NotCompletelyMixedError("tremble must be completely mixed");
  }
  if (!differ_infinitesimally(sigma, trem)) {
    throw NotInfinitesimallyCloseError("tremble must differ infinitesimally from the profile");
  }
}

}  // namespace

// -------- Nash --------

namespace {

// Expected utility of each pure strategy of `player` against the
// product of the other players' mixtures.
std::vector<Rational> pure_strategy_values(const StrategicGame& g, const MixedProfile& sigma,
                                           int player) {
  const std::size_t own = g.strategies[static_cast<std::size_t>(player - 1)].size();
  std::vector<Rational> values(own, Rational(0));
  for (std::size_t flat = 0; flat < g.num_profiles(); ++flat) {
    std::vector<int> prof = g.profile_of(flat);
    Rational weight(1);
    for (int q = 1; q <= g.num_players; ++q) {
      if (q == player) continue;
      weight *= sigma.probs[static_cast<std::size_t>(q - 1)]
                           [static_cast<std::size_t>(prof[static_cast<std::size_t>(q - 1)])];
    }
    if (weight == 0) continue;
    // Group by the player's own coordinate: count each opponent
    // assignment once, at the player's own strategy in this profile.
    const int own_strategy = prof[static_cast<std::size_t>(player - 1)];
    if (own_strategy != 0) continue;  // visit each opponent profile once
    for (std::size_t s = 0; s < own; ++s) {
      prof[static_cast<std::size_t>(player - 1)] = static_cast<int>(s);
      values[s] += weight * g.utility(prof, player);
    }
  }
  return values;
}

StrategicModel nash_witness_model(const StrategicGame& g, const MixedProfile& sigma) {
  StrategicModel m;
  std::vector<NonstdNum> prior;
  for (std::size_t flat = 0; flat < g.num_profiles(); ++flat) {
    const std::vector<int> prof = g.profile_of(flat);
    Rational mass(1);
    for (int q = 1; q <= g.num_players; ++q) {
      mass *= sigma.probs[static_cast<std::size_t>(q - 1)]
                         [static_cast<std::size_t>(prof[static_cast<std::size_t>(q - 1)])];
    }
    if (mass == 0) continue;
    m.state_names.push_back(g.profile_label(prof));
    m.profile.push_back(prof);
    prior.emplace_back(mass);
  }
  m.priors.assign(static_cast<std::size_t>(g.num_players), prior);
  return m;
}

}  // namespace

Verdict check_nash(const StrategicGame& g, const MixedProfile& sigma, const CheckOptions& opts) {
  require_strategic(g);
  validate_mixed(g, sigma);

  bool direct_pass = true;
  Counterexample cex;
  for (int player = 1; player <= g.num_players && direct_pass; ++player) {
    const std::vector<Rational> values = pure_strategy_values(g, sigma, player);
    std::size_t best = 0;
    for (std::size_t s = 1; s < values.size(); ++s) {
      if (values[s] > values[best]) best = s;
    }
    for (std::size_t s = 0; s < values.size(); ++s) {
      if (sigma.probs[static_cast<std::size_t>(player - 1)][s] == 0) continue;
      if (values[s] < values[best]) {
        direct_pass = false;
        cex.player = player;
        cex.infoset = g.strategies[static_cast<std::size_t>(player - 1)][s];
        cex.deviation = g.strategies[static_cast<std::size_t>(player - 1)][best];
        cex.shortfall = NonstdNum(values[best] - values[s]);
        break;
      }
    }
  }

  if (opts.epistemic) {
    const StrategicModel model = nash_witness_model(g, sigma);
    const Verdict epi = ck_rationality_strategic(g, model, opts.exec);
    if (!has_common_prior(model) || !is_product_prior(g, model, 1)) {
      throw RouteDisagreementError("nash witness model lost its common product prior");
    }
    if (epi.pass != direct_pass) {
      throw RouteDisagreementError("nash: direct and epistemic routes disagree");
    }
  }

  if (direct_pass) return Verdict::passed(Route::direct, VerifyCertificate{NonstdNum(), {}, {}, {}});
  return Verdict::failed(Route::direct, std::move(cex));
}

// -------- correlated --------

Verdict check_correlated(const StrategicGame& g, const ProfileDistribution& eta,
                         const CheckOptions& opts) {
  require_strategic(g);
  validate_profile_distribution(g, eta);

  bool direct_pass = true;
  Counterexample cex;
  for (int player = 1; player <= g.num_players && direct_pass; ++player) {
    const std::size_t own = g.strategies[static_cast<std::size_t>(player - 1)].size();
    for (std::size_t rec = 0; rec < own && direct_pass; ++rec) {
      // Unnormalized obedience comparison conditional on the
      // recommendation `rec`.
      Rational marginal(0);
      std::vector<Rational> values(own, Rational(0));
      for (std::size_t flat = 0; flat < g.num_profiles(); ++flat) {
        if (eta.mass[flat] == 0) continue;
        std::vector<int> prof = g.profile_of(flat);
        if (prof[static_cast<std::size_t>(player - 1)] != static_cast<int>(rec)) continue;
        marginal += eta.mass[flat];
        for (std::size_t alt = 0; alt < own; ++alt) {
          prof[static_cast<std::size_t>(player - 1)] = static_cast<int>(alt);
          values[alt] += eta.mass[flat] * g.utility(prof, player);
        }
      }
      if (marginal == 0) continue;  // recommendation never issued
      for (std::size_t alt = 0; alt < own; ++alt) {
        if (values[alt] > values[rec]) {
          direct_pass = false;
          cex.player = player;
          cex.infoset = g.strategies[static_cast<std::size_t>(player - 1)][rec];
          cex.deviation = g.strategies[static_cast<std::size_t>(player - 1)][alt];
          cex.shortfall = NonstdNum((values[alt] - values[rec]) / marginal);
          break;
        }
      }
    }
  }

  if (opts.epistemic) {
    StrategicModel model;
    std::vector<NonstdNum> prior;
    for (std::size_t flat = 0; flat < g.num_profiles(); ++flat) {
      if (eta.mass[flat] == 0) continue;
      const std::vector<int> prof = g.profile_of(flat);
      model.state_names.push_back(g.profile_label(prof));
      model.profile.push_back(prof);
      prior.emplace_back(eta.mass[flat]);
    }
    model.priors.assign(static_cast<std::size_t>(g.num_players), prior);
    const Verdict epi = ck_rationality_strategic(g, model, opts.exec);
    if (epi.pass != direct_pass) {
      throw RouteDisagreementError("correlated: direct and epistemic routes disagree");
    }
  }

  if (direct_pass) return Verdict::passed(Route::direct, VerifyCertificate{NonstdNum(), {}, {}, {}});
  return Verdict::failed(Route::direct, std::move(cex));
}

// -------- rationalizability --------

namespace {

// Opponent assignments drawn from the given surviving sets, as full
// profiles with `player`'s coordinate left at -1; lexicographic order.
std::vector<std::vector<int>> opponent_profiles(const StrategicGame& g,
                                                const std::vector<std::vector<int>>& surviving,
                                                int player) {
  std::vector<std::vector<int>> out;
  std::vector<int> prof(static_cast<std::size_t>(g.num_players), -1);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(g.num_players), 0);
  while (true) {
    for (int q = 1; q <= g.num_players; ++q) {
      if (q == player) continue;
      prof[static_cast<std::size_t>(q - 1)] =
          surviving[static_cast<std::size_t>(q - 1)][cursor[static_cast<std::size_t>(q - 1)]];
    }
    out.push_back(prof);
    // odometer over opponents, last player fastest
    int q = g.num_players;
    for (; q >= 1; --q) {
      if (q == player) continue;
      auto& c = cursor[static_cast<std::size_t>(q - 1)];
      if (++c < surviving[static_cast<std::size_t>(q - 1)].size()) break;
      c = 0;
    }
    if (q < 1) break;
  }
  return out;
}

// A belief over the opponents' surviving profiles making `strategy` a
// best response among all of the player's strategies, if one exists.
std::optional<std::vector<Rational>> justifying_belief(
    const StrategicGame& g, const std::vector<std::vector<int>>& surviving, int player,
    int strategy, std::vector<std::vector<int>>* opponents_out = nullptr) {
  std::vector<std::vector<int>> opponents = opponent_profiles(g, surviving, player);
  std::vector<std::vector<Rational>> rows;
  const int own = static_cast<int>(g.strategies[static_cast<std::size_t>(player - 1)].size());
  for (int dev = 0; dev < own; ++dev) {
    if (dev == strategy) continue;
    std::vector<Rational> row;
    row.reserve(opponents.size());
    for (auto prof : opponents) {
      prof[static_cast<std::size_t>(player - 1)] = strategy;
      const Rational keep = g.utility(prof, player);
      prof[static_cast<std::size_t>(player - 1)] = dev;
      row.push_back(keep - g.utility(prof, player));
    }
    rows.push_back(std::move(row));
  }
  auto mu = feasible_belief(opponents.size(), rows);
  if (mu && opponents_out != nullptr) *opponents_out = std::move(opponents);
  return mu;
}

}  // namespace

RationalizableResult rationalizable(const StrategicGame& g) {
  require_strategic(g);
  RationalizableResult result;
  result.surviving.resize(static_cast<std::size_t>(g.num_players));
  for (int p = 0; p < g.num_players; ++p) {
    for (std::size_t s = 0; s < g.strategies[static_cast<std::size_t>(p)].size(); ++s) {
      result.surviving[static_cast<std::size_t>(p)].push_back(static_cast<int>(s));
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> next = result.surviving;
    for (int player = 1; player <= g.num_players; ++player) {
      std::vector<int> kept;
      for (int s : result.surviving[static_cast<std::size_t>(player - 1)]) {
        if (justifying_belief(g, result.surviving, player, s)) {
          kept.push_back(s);
        } else {
          changed = true;
        }
      }
      next[static_cast<std::size_t>(player - 1)] = std::move(kept);
    }
    result.surviving = std::move(next);
  }

  // Record justifying beliefs against the final sets, keyed to full
  // flat profile indices.
  for (int player = 1; player <= g.num_players; ++player) {
    for (int s : result.surviving[static_cast<std::size_t>(player - 1)]) {
      std::vector<std::vector<int>> opponents;
      auto mu = justifying_belief(g, result.surviving, player, s, &opponents);
      std::vector<Rational> flat_belief(g.num_profiles(), Rational(0));
      for (std::size_t k = 0; k < opponents.size(); ++k) {
        opponents[k][static_cast<std::size_t>(player - 1)] = s;
        flat_belief[g.flat_index(opponents[k])] += (*mu)[k];
      }
      result.beliefs[{player, s}] = std::move(flat_belief);
    }
  }
  return result;
}

StrategicModel witness_model(const StrategicGame& g, const RationalizableResult& r, int player,
                             int strategy) {
  const auto& own = r.surviving[static_cast<std::size_t>(player - 1)];
  if (std::find(own.begin(), own.end(), strategy) == own.end()) {
    throw NotRationalizableError(
        "strategy '" +
        g.strategies[static_cast<std::size_t>(player - 1)][static_cast<std::size_t>(strategy)] +
        "' was eliminated");
  }

  StrategicModel m;
  // States: the product of the surviving sets, lexicographic.
  std::vector<std::size_t> cursor(static_cast<std::size_t>(g.num_players), 0);
  while (true) {
    std::vector<int> prof(static_cast<std::size_t>(g.num_players));
    for (int q = 0; q < g.num_players; ++q) {
      prof[static_cast<std::size_t>(q)] =
          r.surviving[static_cast<std::size_t>(q)][cursor[static_cast<std::size_t>(q)]];
    }
    m.state_names.push_back(g.profile_label(prof));
    m.profile.push_back(prof);
    int q = g.num_players - 1;
    for (; q >= 0; --q) {
      auto& c = cursor[static_cast<std::size_t>(q)];
      if (++c < r.surviving[static_cast<std::size_t>(q)].size()) break;
      c = 0;
    }
    if (q < 0) break;
  }

  // Player i's prior: uniform over own surviving strategies, times the
  // justifying belief for that strategy. Conditioning on own strategy
  // then returns exactly the justifying belief.
  for (int i = 1; i <= g.num_players; ++i) {
    const Rational own_weight(1, r.surviving[static_cast<std::size_t>(i - 1)].size());
    std::vector<NonstdNum> prior;
    prior.reserve(m.num_states());
    for (const auto& prof : m.profile) {
      const int s = prof[static_cast<std::size_t>(i - 1)];
      const auto& belief = r.beliefs.at({i, s});
      prior.emplace_back(own_weight * belief[g.flat_index(prof)]);
    }
    m.priors.push_back(std::move(prior));
  }
  return m;
}

// -------- extensive-form checkers --------

namespace {

Counterexample direct_counterexample(const GameTree& g, int player,
                                     const std::vector<int>& own_infosets,
                                     const std::vector<Shortfall>& report, std::size_t k) {
  Counterexample cex;
  cex.player = player;
  cex.infoset = g.infoset(own_infosets[k]).id;
  const Shortfall& s = report[k];
  cex.deviation = g.infoset(s.infoset).actions[static_cast<std::size_t>(s.action)];
  for (const auto& [ci, ca] : s.continuation) {
    cex.continuation[g.infoset(ci).id] = g.infoset(ci).actions[static_cast<std::size_t>(ca)];
  }
  cex.shortfall = s.amount;
  return cex;
}

// Direct route shared by the perfect (local) and quasi-perfect
// (global) checks: exact optimality at every information set.
Verdict zero_shortfall_check(const GameTree& g, const BehavioralProfile& sigma,
                             const BehavioralProfile& trem, RationalityMode mode,
                             const CheckOptions& opts) {
  bool pass = true;
  Counterexample cex;
  for (int player = 1; player <= g.num_players(); ++player) {
    const BehavioralStrategy sigma_i = sigma.strategy_of(g, player);
    std::vector<Shortfall> report;
    const bool ok =
        mode == RationalityMode::local
            ? is_local_eps_best_profile(g, player, sigma_i, trem, NonstdNum(), &report, opts.exec)
            : is_eps_best(g, player, sigma_i, trem, NonstdNum(), &report, opts.exec);
    if (ok) continue;
    const std::vector<int> own = g.infosets_of(player);
    for (std::size_t k = 0; k < report.size(); ++k) {
      if (report[k].amount.sign() > 0) {
        pass = false;
        cex = direct_counterexample(g, player, own, report, k);
        break;
      }
    }
    break;
  }

  if (opts.epistemic) {
    const ExtensiveModel model = canonical_model(g, trem);
    const Verdict epi = ck_rationality(g, model, trem, sigma, NonstdNum(), mode, opts.exec);
    if (epi.pass != pass) {
      throw RouteDisagreementError(mode == RationalityMode::local
                                       ? "perfect: direct and epistemic routes disagree"
                                       : "quasi-perfect: direct and epistemic routes disagree");
    }
  }

  if (pass) {
    return Verdict::passed(Route::direct,
                           VerifyCertificate{NonstdNum(), trem, induced_beliefs(g, trem), {}});
  }
  return Verdict::failed(Route::direct, std::move(cex));
}

}  // namespace

Verdict check_perfect(const GameTree& g, const BehavioralProfile& sigma,
                      const BehavioralProfile& trem, const CheckOptions& opts) {
  require_extensive_inputs(g, sigma, trem);
  return zero_shortfall_check(g, sigma, trem, RationalityMode::local, opts);
}

Verdict check_quasi_perfect(const GameTree& g, const BehavioralProfile& sigma,
                            const BehavioralProfile& trem, const CheckOptions& opts) {
  require_extensive_inputs(g, sigma, trem);
  return zero_shortfall_check(g, sigma, trem, RationalityMode::global, opts);
}

namespace {

// Maximal shortfalls seen through a model: for every (player, state),
// global shortfalls at the information sets met along the state's
// outcome, and local shortfalls of the supported actions taken there.
struct ModelShortfalls {
  NonstdNum max_global;
  NonstdNum max_local;
};

ModelShortfalls model_shortfall_sweep(const GameTree& g, const ExtensiveModel& m,
                                      const BehavioralProfile& trem,
                                      const BehavioralProfile& sigma, ExecPolicy exec) {
  std::set<int> global_keys;
  std::set<std::pair<int, int>> local_keys;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    for (int player = 1; player <= g.num_players(); ++player) {
      for (const auto& [iset, action] : g.experience(player, m.outcome[s])) {
        global_keys.insert(iset);
        if (sigma.at(iset)[static_cast<std::size_t>(action)].sign() > 0) {
          local_keys.insert({iset, action});
        }
      }
    }
  }
  ModelShortfalls out;
  {
    const std::vector<int> keys(global_keys.begin(), global_keys.end());
    std::vector<NonstdNum> amounts(keys.size());
    parallel_for(keys.size(), exec, [&](std::size_t k) {
      const int player = g.infoset(keys[k]).player;
      amounts[k] = global_shortfall(g, player, keys[k], sigma.strategy_of(g, player), trem).amount;
    });
    for (const NonstdNum& a : amounts) out.max_global = nonstd_max(out.max_global, a);
  }
  {
    const std::vector<std::pair<int, int>> keys(local_keys.begin(), local_keys.end());
    std::vector<NonstdNum> amounts(keys.size());
    parallel_for(keys.size(), exec, [&](std::size_t k) {
      const auto [iset, action] = keys[k];
      std::vector<NonstdNum> point(g.infoset(iset).actions.size(), NonstdNum());
      point[static_cast<std::size_t>(action)] = NonstdNum(1);
      amounts[k] = local_shortfall(g, g.infoset(iset).player, iset, point, trem).amount;
    });
    for (const NonstdNum& a : amounts) out.max_local = nonstd_max(out.max_local, a);
  }
  return out;
}

}  // namespace

Verdict check_sequential(const GameTree& g, const BehavioralProfile& sigma,
                         const BehavioralProfile& trem, const CheckOptions& opts) {
  require_extensive_inputs(g, sigma, trem);

  // Direct route: eps* = max clamped global shortfall; pass iff eps*
  // is infinitesimal.
  NonstdNum eps_star;
  bool pass = true;
  Counterexample cex;
  bool have_cex = false;
  for (int player = 1; player <= g.num_players(); ++player) {
    const BehavioralStrategy sigma_i = sigma.strategy_of(g, player);
    std::vector<Shortfall> report;
    is_eps_best(g, player, sigma_i, trem, NonstdNum(), &report, opts.exec);
    const std::vector<int> own = g.infosets_of(player);
    for (std::size_t k = 0; k < report.size(); ++k) {
      eps_star = nonstd_max(eps_star, clamp_nonneg(report[k].amount));
      if (!have_cex && !clamp_nonneg(report[k].amount).is_infinitesimal()) {
        cex = direct_counterexample(g, player, own, report, k);
        have_cex = true;
      }
    }
  }
  pass = eps_star.is_infinitesimal();

  std::optional<LocalToGlobalCert> bounds;
  if (opts.epistemic) {
    const ExtensiveModel model = canonical_model(g, trem);
    const ModelShortfalls swept = model_shortfall_sweep(g, model, trem, sigma, opts.exec);
    const NonstdNum model_eps = clamp_nonneg(swept.max_global);
    const NonstdNum model_lambda = clamp_nonneg(swept.max_local);
    const bool pass_global_route = model_eps.is_infinitesimal();
    const bool pass_local_route = model_lambda.is_infinitesimal();
    if (pass_global_route != pass || pass_local_route != pass) {
      throw RouteDisagreementError("sequential: direct and epistemic routes disagree");
    }
    // Slack bound tying the local route to the global one: every
    // supported action's local shortfall is at most
    // gap + eps* + eps*/r. Vacuous without information sets.
    if (!g.infosets().empty()) {
      NonstdNum gap;
      for (int player = 1; player <= g.num_players(); ++player) {
        gap = nonstd_max(gap, substitution_gap(g, player, sigma.strategy_of(g, player), trem));
      }
      const Rational r = min_support_prob(g, sigma);
      const NonstdNum slack = gap + eps_star + eps_star / NonstdNum(r);
      if (cmp(model_lambda, slack) > 0) {
        throw RouteDisagreementError("sequential: local-route shortfall exceeds the slack bound");
      }
      int d = 0;
      for (int player = 1; player <= g.num_players(); ++player) {
        d = std::max(d, height_bound(g, player));
      }
      bounds = LocalToGlobalCert{model_lambda, gap, d,
                                 NonstdNum(d) * (model_lambda + gap)};
    }
  }

  if (pass) {
    BeliefSystem assessment;
    const BeliefSystem exact = induced_beliefs(g, trem);
    for (const auto& row : exact.beliefs) {
      std::vector<NonstdNum> std_row;
      std_row.reserve(row.size());
      for (const NonstdNum& x : row) std_row.emplace_back(x.standard_part());
      assessment.beliefs.push_back(std::move(std_row));
    }
    return Verdict::passed(Route::direct,
                           VerifyCertificate{eps_star, trem, std::move(assessment), bounds});
  }
  return Verdict::failed(Route::direct, std::move(cex));
}

// -------- tremble search --------

TrembleSearchResult search_tremble(const GameTree& g, const BehavioralProfile& sigma,
                                   Concept target, const TrembleSearchBudget& budget,
                                   const CheckOptions& opts) {
  if (target != Concept::perfect && target != Concept::quasi_perfect &&
      target != Concept::sequential) {
    throw FormMismatchError("tremble search applies to extensive-form concepts only");
  }
  {
    const ValidationReport report = validate(g);
    if (!report.ok) throw InvalidGameError(report.issues.front().message);
  }
  validate_profile(g, sigma);
  if (!is_standard(sigma)) throw InvalidProfileError("tremble search needs a standard profile");
  for (const Rational& c : budget.coefficients) {
    if (c <= 0) throw InvalidTrembleError("tremble coefficients must be positive");
  }

  const auto run_checker = [&](const BehavioralProfile& trem) -> Verdict {
    switch (target) {
      case Concept::perfect:
        return check_perfect(g, sigma, trem, opts);
      case Concept::quasi_perfect:
        return check_quasi_perfect(g, sigma, trem, opts);
      default:
        return check_sequential(g, sigma, trem, opts);
    }
  };

  TrembleSearchResult result;
  const auto try_candidate = [&](const BehavioralProfile& trem) -> bool {
    ++result.candidates_tried;
    const Verdict v = run_checker(trem);
    if (v.pass) {
      result.status = TrembleSearchResult::Status::found;
      result.tremble = trem;
      result.verdict = v;
      return true;
    }
    return false;
  };

  if (is_completely_mixed(g, sigma) && try_candidate(sigma)) return result;
  if (result.candidates_tried >= budget.max_candidates) return result;
  if (try_candidate(uniform_tremble(g, sigma))) return result;

  // Monomial family: one weight c * eps^k per off-support action.
  std::vector<std::pair<int, int>> off;
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const auto& row = sigma.at(static_cast<int>(i));
    for (std::size_t a = 0; a < row.size(); ++a) {
      if (row[a].sign() == 0) off.emplace_back(static_cast<int>(i), static_cast<int>(a));
    }
  }
  if (off.empty()) return result;

  std::vector<std::pair<int, Rational>> choices;  // (exponent, coefficient)
  for (int k = 1; k <= budget.max_exponent; ++k) {
    for (const Rational& c : budget.coefficients) choices.emplace_back(k, c);
  }

  std::vector<std::size_t> odo(off.size(), 0);
  while (result.candidates_tried < budget.max_candidates) {
    std::map<std::pair<int, int>, EpsPoly> spec;
    for (std::size_t p = 0; p < off.size(); ++p) {
      const auto& [exponent, coefficient] = choices[odo[p]];
      std::vector<Rational> coeffs(static_cast<std::size_t>(exponent) + 1, Rational(0));
      coeffs.back() = coefficient;
      spec[off[p]] = EpsPoly(std::move(coeffs));
    }
    if (try_candidate(custom_tremble(g, sigma, spec))) return result;
    // odometer, last position fastest
    std::size_t p = off.size();
    while (p > 0) {
      --p;
      if (++odo[p] < choices.size()) break;
      odo[p] = 0;
      if (p == 0) return result;  // family exhausted
    }
  }
  return result;
}

}  // namespace epseq
