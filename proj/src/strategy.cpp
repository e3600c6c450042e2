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

#include "epseq/strategy.hpp"

#include "epseq/errors.hpp"

namespace epseq {

BehavioralStrategy BehavioralProfile::strategy_of(const GameTree& g, int player) const {
  BehavioralStrategy s;
  s.player = player;
  for (int iset : g.infosets_of(player)) s.choice[iset] = at(iset);
  return s;
}

BehavioralProfile BehavioralProfile::with_strategy(const BehavioralStrategy& s) const {
  BehavioralProfile out(*this);
  for (const auto& [iset, dist] : s.choice) out.at(iset) = dist;
  return out;
}

BehavioralProfile BehavioralProfile::with_row(int infoset, std::vector<NonstdNum> dist) const {
  BehavioralProfile out(*this);
  out.at(infoset) = std::move(dist);
  return out;
}

void validate_profile(const GameTree& g, const BehavioralProfile& p) {
  if (p.size() != g.infosets().size()) {
    throw InvalidProfileError("profile covers " + std::to_string(p.size()) + " infosets, game has " +
                              std::to_string(g.infosets().size()));
  }
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const InformationSet& iset = g.infosets()[i];
    const auto& dist = p.at(static_cast<int>(i));
    if (dist.size() != iset.actions.size()) {
      throw InvalidProfileError("wrong arity at information set '" + iset.id + "'");
    }
    NonstdNum total;
    for (const NonstdNum& x : dist) {
      if (x.sign() < 0) {
        throw InvalidProfileError("negative probability at information set '" + iset.id + "'");
      }
      total += x;
    }
    if (!(total == NonstdNum(1))) {
      throw InvalidProfileError("probabilities at information set '" + iset.id +
                                "' sum to " + total.to_string() + ", expected 1");
    }
  }
}

bool is_completely_mixed(const GameTree& g, const BehavioralProfile& p) {
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    for (const NonstdNum& x : p.at(static_cast<int>(i))) {
      if (x.sign() <= 0) return false;
    }
  }
  return true;
}

bool is_standard(const BehavioralProfile& p) {
  for (const auto& row : p.table()) {
    for (const NonstdNum& x : row) {
      if (!x.is_standard()) return false;
    }
  }
  return true;
}

bool is_standard(const BehavioralStrategy& s) {
  for (const auto& [iset, row] : s.choice) {
    (void)iset;
    for (const NonstdNum& x : row) {
      if (!x.is_standard()) return false;
    }
  }
  return true;
}

BehavioralProfile standard_part_profile(const BehavioralProfile& p) {
  std::vector<std::vector<NonstdNum>> table;
  table.reserve(p.size());
  for (const auto& row : p.table()) {
    std::vector<NonstdNum> out;
    out.reserve(row.size());
    for (const NonstdNum& x : row) out.emplace_back(x.standard_part());
    table.push_back(std::move(out));
  }
  return BehavioralProfile(std::move(table));
}

bool differ_infinitesimally(const BehavioralProfile& p, const BehavioralProfile& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p.at(static_cast<int>(i));
    const auto& b = q.at(static_cast<int>(i));
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!(a[k] - b[k]).is_infinitesimal()) return false;
    }
  }
  return true;
}

BehavioralProfile uniform_tremble(const GameTree& g, const BehavioralProfile& p) {
  validate_profile(g, p);
  const NonstdNum eps = NonstdNum::epsilon();
  std::vector<std::vector<NonstdNum>> table;
  table.reserve(p.size());
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const auto& row = p.at(static_cast<int>(i));
    const NonstdNum shrink = NonstdNum(1) - NonstdNum(Rational(row.size())) * eps;
    std::vector<NonstdNum> out;
    out.reserve(row.size());
    for (const NonstdNum& x : row) out.push_back(shrink * x + eps);
    table.push_back(std::move(out));
  }
  return BehavioralProfile(std::move(table));
}

BehavioralProfile custom_tremble(const GameTree& g, const BehavioralProfile& p,
                                 const std::map<std::pair<int, int>, EpsPoly>& spec) {
  validate_profile(g, p);
  for (const auto& [key, poly] : spec) {
    const auto [iset, action] = key;
    if (iset < 0 || iset >= static_cast<int>(g.infosets().size()) || action < 0 ||
        action >= static_cast<int>(g.infoset(iset).actions.size())) {
      throw InvalidTrembleError("tremble entry addresses an unknown infoset/action");
    }
    const NonstdNum value = NonstdNum::make(0, poly, EpsPoly::one());
    if (!(value.sign() > 0 && value.is_infinitesimal())) {
      throw InvalidTrembleError("tremble weight at information set '" + g.infoset(iset).id +
                                "' must be a positive infinitesimal polynomial, got " +
                                value.to_string());
    }
  }
  std::vector<std::vector<NonstdNum>> table;
  table.reserve(p.size());
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const auto& row = p.at(static_cast<int>(i));
    std::vector<NonstdNum> raw;
    raw.reserve(row.size());
    NonstdNum total;
    for (std::size_t a = 0; a < row.size(); ++a) {
      NonstdNum w = row[a];
      auto it = spec.find({static_cast<int>(i), static_cast<int>(a)});
      if (it != spec.end()) w += NonstdNum::make(0, it->second, EpsPoly::one());
      if (w.sign() <= 0) {
        throw InvalidTrembleError("action '" + g.infoset(static_cast<int>(i)).actions[a] +
                                  "' at information set '" + g.infoset(static_cast<int>(i)).id +
                                  "' keeps probability " + w.to_string());
      }
      total += w;
      raw.push_back(std::move(w));
    }
    for (auto& w : raw) w /= total;
    table.push_back(std::move(raw));
  }
  BehavioralProfile out(std::move(table));
  if (!differ_infinitesimally(p, out)) {
    throw InvalidTrembleError("tremble weights are not infinitesimal after renormalization");
  }
  return out;
}

BehavioralStrategy substitute(const GameTree& g, const BehavioralStrategy& s, int infoset,
                              std::vector<NonstdNum> dist) {
  if (infoset < 0 || infoset >= static_cast<int>(g.infosets().size()) ||
      g.infoset(infoset).player != s.player) {
    throw WrongPlayerError("information set is not owned by player " + std::to_string(s.player));
  }
  if (dist.size() != g.infoset(infoset).actions.size()) {
    throw BadDistributionError("distribution arity does not match the action set");
  }
  NonstdNum total;
  for (const NonstdNum& x : dist) {
    if (x.sign() < 0) throw BadDistributionError("negative probability");
    total += x;
  }
  if (!(total == NonstdNum(1))) throw BadDistributionError("probabilities must sum to 1");
  BehavioralStrategy out = s;
  out.choice[infoset] = std::move(dist);
  return out;
}

void validate_mixed(const StrategicGame& g, const MixedProfile& p) {
  if (static_cast<int>(p.probs.size()) != g.num_players) {
    throw InvalidProfileError("mixed profile does not cover every player");
  }
  for (int i = 0; i < g.num_players; ++i) {
    const auto& row = p.probs[static_cast<std::size_t>(i)];
    if (row.size() != g.strategies[static_cast<std::size_t>(i)].size()) {
      throw InvalidProfileError("mixed profile arity mismatch for player " + std::to_string(i + 1));
    }
    Rational total(0);
    for (const Rational& q : row) {
      if (q < 0) throw InvalidProfileError("negative probability in mixed profile");
      total += q;
    }
    if (total != 1) throw InvalidProfileError("mixed profile must sum to 1 per player");
  }
}

void validate_profile_distribution(const StrategicGame& g, const ProfileDistribution& eta) {
  if (eta.mass.size() != g.num_profiles()) {
    throw InvalidProfileError("profile distribution does not cover every pure profile");
  }
  Rational total(0);
  for (const Rational& q : eta.mass) {
    if (q < 0) throw InvalidProfileError("negative probability in profile distribution");
    total += q;
  }
  if (total != 1) throw InvalidProfileError("profile distribution must sum to 1");
}

}  // namespace epseq
