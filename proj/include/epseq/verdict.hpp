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

#ifndef EPSEQ_VERDICT_HPP_
#define EPSEQ_VERDICT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epseq/nonstd.hpp"
#include "epseq/response.hpp"
#include "epseq/strategy.hpp"
#include "epseq/valuation.hpp"

namespace epseq {

// Localized witness for a failed check: who can gain, where, and by
// how much. String fields are external ids so a verdict is readable
// without the game object.
struct Counterexample {
  int player = 0;
  std::string state;       // epistemic route: offending state
  std::string infoset;     // information set id, or strategy label in strategic checks
  std::string deviation;   // action/strategy label attaining the gain
  std::map<std::string, std::string> continuation;  // full witness continuation, if any
  NonstdNum shortfall;
};

// Replayable evidence for a passed check. For extensive-form concepts
// the tremble is the existential witness: re-running the checker with
// it reproduces the verdict.
struct VerifyCertificate {
  NonstdNum eps;
  std::optional<BehavioralProfile> tremble;
  std::optional<BeliefSystem> belief;
  std::optional<LocalToGlobalCert> bounds;
};

enum class Route { direct, epistemic };

struct Verdict {
  bool pass = false;
  Route route = Route::direct;
  std::optional<VerifyCertificate> certificate;   // present iff pass
  std::optional<Counterexample> counterexample;   // present iff !pass
  std::vector<std::string> notes;                 // e.g. degenerate-input flags

  static Verdict passed(Route route, VerifyCertificate cert) {
    Verdict v;
    v.pass = true;
    v.route = route;
    v.certificate = std::move(cert);
    return v;
  }
  static Verdict failed(Route route, Counterexample cex) {
    Verdict v;
    v.pass = false;
    v.route = route;
    v.counterexample = std::move(cex);
    return v;
  }
};

}  // namespace epseq

#endif  // EPSEQ_VERDICT_HPP_
