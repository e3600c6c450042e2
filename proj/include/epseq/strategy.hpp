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

#ifndef EPSEQ_STRATEGY_HPP_
#define EPSEQ_STRATEGY_HPP_

#include <map>
#include <utility>
#include <vector>

#include "epseq/game.hpp"
#include "epseq/nonstd.hpp"

namespace epseq {

// One player's behavioral strategy: an action distribution per owned
// information set. Entries live in the eps field, so standard
// strategies and trembles share one representation.
struct BehavioralStrategy {
  int player = 0;
  std::map<int, std::vector<NonstdNum>> choice;  // infoset index -> per-action probs
};

// A complete assignment of action distributions to every information
// set of the game, all players at once. Indexed by infoset index.
class BehavioralProfile {
 public:
  BehavioralProfile() = default;
  explicit BehavioralProfile(std::vector<std::vector<NonstdNum>> table)
      : table_(std::move(table)) {}

  std::size_t size() const { return table_.size(); }
  const std::vector<NonstdNum>& at(int infoset) const {
    return table_[static_cast<std::size_t>(infoset)];
  }
  std::vector<NonstdNum>& at(int infoset) { return table_[static_cast<std::size_t>(infoset)]; }
  const std::vector<std::vector<NonstdNum>>& table() const { return table_; }

  BehavioralStrategy strategy_of(const GameTree& g, int player) const;
  BehavioralProfile with_strategy(const BehavioralStrategy& s) const;
  // Copy with the distribution at one infoset replaced.
  BehavioralProfile with_row(int infoset, std::vector<NonstdNum> dist) const;

  bool operator==(const BehavioralProfile& other) const = default;

 private:
  std::vector<std::vector<NonstdNum>> table_;
};

// Throws InvalidProfileError unless every infoset's distribution has
// the right arity, nonnegative entries and an exact unit sum.
void validate_profile(const GameTree& g, const BehavioralProfile& p);

bool is_completely_mixed(const GameTree& g, const BehavioralProfile& p);
bool is_standard(const BehavioralProfile& p);
bool is_standard(const BehavioralStrategy& s);

// Entrywise standard parts; sums stay exactly 1. NotFiniteError if an
// entry is infinite.
BehavioralProfile standard_part_profile(const BehavioralProfile& p);

// Entrywise: every corresponding difference has standard part 0.
bool differ_infinitesimally(const BehavioralProfile& p, const BehavioralProfile& q);

// The canonical tremble: at each infoset with action set A,
//   p'(a) = (1 - |A|*eps) * p(a) + eps.
// Completely mixed, unit sums exact, infinitesimally close to p.
BehavioralProfile uniform_tremble(const GameTree& g, const BehavioralProfile& p);

// Non-uniform tremble from per-(infoset, action) infinitesimal weights,
// renormalized: p'(I) proportional to p(I)(a) + spec[I][a]. Every spec
// entry must be an infinitesimal-positive polynomial and every
// resulting entry must be positive, else InvalidTrembleError.
BehavioralProfile custom_tremble(const GameTree& g, const BehavioralProfile& p,
                                 const std::map<std::pair<int, int>, EpsPoly>& spec);

// The strategy that agrees with s except at `infoset`, where it plays
// `dist`. WrongPlayerError / BadDistributionError on misuse.
BehavioralStrategy substitute(const GameTree& g, const BehavioralStrategy& s, int infoset,
                              std::vector<NonstdNum> dist);

// -------- strategic form --------

// Mixed profile over a strategic game: exact rational weights.
struct MixedProfile {
  std::vector<std::vector<Rational>> probs;  // [player - 1][strategy index]
};

void validate_mixed(const StrategicGame& g, const MixedProfile& p);

// Distribution over full pure profiles (the mediator's distribution in
// a correlated equilibrium check).
struct ProfileDistribution {
  std::vector<Rational> mass;  // by flat profile index
};

void validate_profile_distribution(const StrategicGame& g, const ProfileDistribution& eta);

}  // namespace epseq

#endif  // EPSEQ_STRATEGY_HPP_
