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

#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace epseq::testing {

GameTree entry_game() {
  GameBuilder b(2);
  const int t_out = b.terminal({Rational(0), Rational(2)}, "t_out");
  const int t_fight = b.terminal({Rational(-1), Rational(-1)}, "t_fight");
  const int t_acc = b.terminal({Rational(1), Rational(1)}, "t_acc");
  const int n2 = b.decision(2, "I2", {"Fight", "Acc"}, {t_fight, t_acc}, "n2");
  const int root = b.decision(1, "I1", {"Out", "In"}, {t_out, n2}, "root");
  return b.build(root);
}

GameTree chain_game() {
  // Player 1: first Up/Down, after Up again Left/Right.
  GameBuilder b(1);
  const int t_down = b.terminal({Rational(1)}, "t_down");
  const int t_left = b.terminal({Rational(0)}, "t_left");
  const int t_right = b.terminal({Rational(3)}, "t_right");
  const int second = b.decision(1, "I_second", {"Left", "Right"}, {t_left, t_right}, "n_second");
  const int root = b.decision(1, "I_first", {"Up", "Down"}, {second, t_down}, "root");
  return b.build(root);
}

GameTree forgetful_game() {
  // Player 1 chooses L/R, then must act again without remembering the
  // first move: both second-stage nodes share one information set.
  GameBuilder b(1);
  const int t1 = b.terminal({Rational(1)}, "t1");
  const int t2 = b.terminal({Rational(0)}, "t2");
  const int t3 = b.terminal({Rational(0)}, "t3");
  const int t4 = b.terminal({Rational(2)}, "t4");
  const int after_l = b.decision(1, "I_pool", {"a", "b"}, {t1, t2}, "after_l");
  const int after_r = b.decision(1, "I_pool", {"a", "b"}, {t3, t4}, "after_r");
  const int root = b.decision(1, "I_root", {"L", "R"}, {after_l, after_r}, "root");
  return b.build(root);
}

GameTree pooled_game() {
  GameBuilder b(2);
  const int t_tx = b.terminal({Rational(2), Rational(1)}, "t_tx");
  const int t_ty = b.terminal({Rational(0), Rational(0)}, "t_ty");
  const int t_bx = b.terminal({Rational(0), Rational(0)}, "t_bx");
  const int t_by = b.terminal({Rational(1), Rational(2)}, "t_by");
  const int after_t = b.decision(2, "J", {"x", "y"}, {t_tx, t_ty}, "after_t");
  const int after_b = b.decision(2, "J", {"x", "y"}, {t_bx, t_by}, "after_b");
  const int root = b.decision(1, "I", {"T", "B"}, {after_t, after_b}, "root");
  return b.build(root);
}

namespace {

StrategicGame two_by_two(const std::string& a1, const std::string& b1, const std::string& a2,
                         const std::string& b2, const std::vector<std::vector<Rational>>& table) {
  StrategicGame g;
  g.num_players = 2;
  g.strategies = {{a1, b1}, {a2, b2}};
  g.utilities = table;  // row-major: (a1,a2),(a1,b2),(b1,a2),(b1,b2)
  return g;
}

}  // namespace

StrategicGame matching_pennies() {
  return two_by_two("H1", "T1", "H2", "T2",
                    {{Rational(1), Rational(-1)},
                     {Rational(-1), Rational(1)},
                     {Rational(-1), Rational(1)},
                     {Rational(1), Rational(-1)}});
}

StrategicGame prisoners_dilemma() {
  return two_by_two("C1", "D1", "C2", "D2",
                    {{Rational(3), Rational(3)},
                     {Rational(0), Rational(5)},
                     {Rational(5), Rational(0)},
                     {Rational(1), Rational(1)}});
}

StrategicGame chicken() {
  return two_by_two("D1", "C1", "D2", "C2",
                    {{Rational(0), Rational(0)},
                     {Rational(7), Rational(2)},
                     {Rational(2), Rational(7)},
                     {Rational(6), Rational(6)}});
}

StrategicGame two_round_solvable() {
  // P2: L2 strictly dominates R2; afterwards P1 prefers U1.
  return two_by_two("U1", "D1", "L2", "R2",
                    {{Rational(3), Rational(1)},
                     {Rational(0), Rational(0)},
                     {Rational(2), Rational(1)},
                     {Rational(1), Rational(0)}});
}

int infoset_index(const GameTree& g, const std::string& id) {
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    if (g.infosets()[i].id == id) return static_cast<int>(i);
  }
  throw std::out_of_range("no information set '" + id + "'");
}

int action_index(const GameTree& g, int infoset, const std::string& label) {
  const auto& actions = g.infoset(infoset).actions;
  const auto it = std::find(actions.begin(), actions.end(), label);
  if (it == actions.end()) throw std::out_of_range("no action '" + label + "'");
  return static_cast<int>(it - actions.begin());
}

BehavioralProfile pure_profile(const GameTree& g,
                               const std::map<std::string, std::string>& actions) {
  std::vector<std::vector<NonstdNum>> table(g.infosets().size());
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const InformationSet& iset = g.infosets()[i];
    table[i].assign(iset.actions.size(), NonstdNum());
    const auto it = actions.find(iset.id);
    if (it == actions.end()) throw std::out_of_range("no action chosen at '" + iset.id + "'");
    table[i][static_cast<std::size_t>(action_index(g, static_cast<int>(i), it->second))] =
        NonstdNum(1);
  }
  return BehavioralProfile(std::move(table));
}

BehavioralProfile profile_from_rows(
    const GameTree& g, const std::map<std::string, std::vector<Rational>>& rows) {
  std::vector<std::vector<NonstdNum>> table(g.infosets().size());
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const InformationSet& iset = g.infosets()[i];
    const auto it = rows.find(iset.id);
    if (it == rows.end()) throw std::out_of_range("no row for '" + iset.id + "'");
    for (const Rational& q : it->second) table[i].emplace_back(q);
  }
  return BehavioralProfile(std::move(table));
}

MixedProfile mixed(const StrategicGame& g, const std::vector<std::vector<Rational>>& probs) {
  (void)g;
  MixedProfile p;
  p.probs = probs;
  return p;
}

}  // namespace epseq::testing
