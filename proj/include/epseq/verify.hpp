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

#ifndef EPSEQ_VERIFY_HPP_
#define EPSEQ_VERIFY_HPP_

#include <map>
#include <optional>
#include <vector>

#include "epseq/epistemic.hpp"
#include "epseq/game.hpp"
#include "epseq/strategy.hpp"
#include "epseq/verdict.hpp"

namespace epseq {

// The checkers are certificate verifiers, not solvers. Each computes a
// direct inequality route; with `epistemic` set they also construct the
// corresponding knowledge model, check the matching rationality notion
// there, and raise RouteDisagreementError if the two routes ever
// disagree (which would signal an implementation bug, not an input
// property).
struct CheckOptions {
  bool epistemic = true;
  ExecPolicy exec = ExecPolicy::parallel;
};

enum class Concept { nash, correlated, rationalizable, perfect, quasi_perfect, sequential };

// -------- strategic form --------

// sigma is a Nash equilibrium: every supported pure strategy is a best
// response to the product of the others' mixtures. Epistemic route:
// witness model on the support of the product distribution with the
// common product prior, checked for universal rationality.
Verdict check_nash(const StrategicGame& g, const MixedProfile& sigma,
                   const CheckOptions& opts = {});

// eta is a correlated equilibrium: obeying each recommendation with
// positive marginal is optimal under the induced posterior. Epistemic
// route: states are the support of eta, every prior equals eta.
Verdict check_correlated(const StrategicGame& g, const ProfileDistribution& eta,
                         const CheckOptions& opts = {});

struct RationalizableResult {
  std::vector<std::vector<int>> surviving;  // per player, strategy indices ascending
  // Justifying belief per (player, surviving strategy index):
  // probability per flat profile index (own coordinate fixed to the
  // strategy, support within the surviving opponents).
  std::map<std::pair<int, int>, std::vector<Rational>> beliefs;
};

// Iterated elimination of strategies that are never best responses to
// any (possibly correlated) belief over the opponents' surviving
// profiles; deviations range over the full strategy set.
RationalizableResult rationalizable(const StrategicGame& g);

// Model on the product of the surviving sets in which rationality is
// universal and some state plays `strategy`; NotRationalizableError if
// the strategy was eliminated.
StrategicModel witness_model(const StrategicGame& g, const RationalizableResult& r, int player,
                             int strategy);

// -------- extensive form --------

// sigma is a local best response at every information set against the
// tremble (exact, eps = 0); epistemic route: local rationality is
// universal in the canonical model of the tremble.
Verdict check_perfect(const GameTree& g, const BehavioralProfile& sigma,
                      const BehavioralProfile& trem, const CheckOptions& opts = {});

// sigma is a best response from every information set on (eps = 0);
// epistemic route: rationality is universal in the canonical model.
Verdict check_quasi_perfect(const GameTree& g, const BehavioralProfile& sigma,
                            const BehavioralProfile& trem, const CheckOptions& opts = {});

// sigma is an eps-best response for an infinitesimal eps: the maximal
// clamped shortfall eps* must have standard part 0. The certificate
// carries eps*, the tremble, and the assessment beliefs (standard part
// of the beliefs the tremble induces). Epistemic routes: both
// eps-rationality and eps-local-rationality are universal in the
// canonical model for infinitesimal thresholds; their verdicts are
// cross-checked against the direct route.
Verdict check_sequential(const GameTree& g, const BehavioralProfile& sigma,
                         const BehavioralProfile& trem, const CheckOptions& opts = {});

// -------- bounded tremble search --------

// Heuristic search over candidate trembles: the profile itself when
// completely mixed, the uniform tremble, then monomial weights
// c * eps^k per off-support action (renormalized). Sound: a returned
// tremble certifies the concept via the corresponding checker.
// Incomplete: exhaustion is not a refutation.
struct TrembleSearchBudget {
  int max_exponent = 3;
  std::vector<Rational> coefficients = {Rational(1)};
  std::size_t max_candidates = 10000;
};

struct TrembleSearchResult {
  enum class Status { found, exhausted };
  Status status = Status::exhausted;
  std::optional<BehavioralProfile> tremble;
  std::optional<Verdict> verdict;       // the certifying verdict when found
  std::size_t candidates_tried = 0;
};

TrembleSearchResult search_tremble(const GameTree& g, const BehavioralProfile& sigma,
                                   Concept target, const TrembleSearchBudget& budget = {},
                                   const CheckOptions& opts = {});

}  // namespace epseq

#endif  // EPSEQ_VERIFY_HPP_
