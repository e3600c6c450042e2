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

#ifndef EPSEQ_GAME_HPP_
#define EPSEQ_GAME_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "epseq/rational.hpp"

namespace epseq {

// Players are 1-based throughout (player 0 is reserved for chance in
// diagnostics). Nodes, information sets and actions are dense indices;
// external string ids are kept for reporting and serialization.

enum class NodeKind { decision, chance, terminal };

struct Node {
  NodeKind kind = NodeKind::terminal;
  std::string id;
  int parent = -1;
  int parent_action = -1;

  // decision
  int player = 0;
  int infoset = -1;

  // chance
  std::vector<std::string> chance_labels;
  std::vector<Rational> chance_probs;

  // decision and chance
  std::vector<int> children;  // by action index

  // terminal
  std::vector<Rational> payoffs;  // by player - 1
};

struct InformationSet {
  std::string id;
  int player = 0;
  std::vector<int> members;          // node indices, ascending
  std::vector<std::string> actions;  // shared ordered action list
};

// A history is a node together with the action path that replays to it
// from the root; the node determines the path uniquely in a tree.
struct History {
  int node = -1;
  std::vector<int> path;  // action indices, root downward
};

// Finite extensive-form game tree. Immutable after construction; build
// through GameBuilder or the JSON loader and run validate() before
// using any of the quantitative machinery.
class GameTree {
 public:
  GameTree() = default;
  GameTree(int num_players, std::vector<Node> nodes, std::vector<InformationSet> infosets,
           int root);

  int num_players() const { return num_players_; }
  int root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int idx) const { return nodes_[static_cast<std::size_t>(idx)]; }
  const std::vector<InformationSet>& infosets() const { return infosets_; }
  const InformationSet& infoset(int idx) const { return infosets_[static_cast<std::size_t>(idx)]; }
  int num_actions_at(int node_idx) const;

  // Terminal node indices in depth-first order (children in action
  // order); this is the canonical enumeration of terminal histories.
  const std::vector<int>& terminal_nodes() const { return terminals_; }

  History history_of(int node_idx) const;
  // Prefixes of h in root-to-leaf order, including the empty history
  // and h itself.
  std::vector<History> prefixes(const History& h) const;
  // Action labels along the path to a node.
  std::vector<std::string> path_labels(int node_idx) const;

  // Information sets owned by a player, ascending by index.
  std::vector<int> infosets_of(int player) const;
  bool is_ancestor(int ancestor, int node_idx) const;  // strict

  // Player `player`'s own experience on the path to node_idx: the
  // sequence of (infoset, action) pairs at their decision nodes,
  // excluding node_idx itself.
  std::vector<std::pair<int, int>> experience(int player, int node_idx) const;

 private:
  int num_players_ = 0;
  int root_ = -1;
  std::vector<Node> nodes_;
  std::vector<InformationSet> infosets_;
  std::vector<int> terminals_;
};

// Convenience builder used by tests, fixtures and the random-game
// generator. Nodes are created leaves-first; build() fixes parents and
// runs structural wiring.
class GameBuilder {
 public:
  explicit GameBuilder(int num_players) : num_players_(num_players) {}

  int terminal(std::vector<Rational> payoffs, std::string id = "");
  int decision(int player, const std::string& infoset_id, std::vector<std::string> actions,
               std::vector<int> children, std::string id = "");
  int chance(std::vector<std::string> labels, std::vector<Rational> probs,
             std::vector<int> children, std::string id = "");
  GameTree build(int root);

 private:
  int num_players_;
  std::vector<Node> nodes_;
  std::vector<InformationSet> infosets_;
  std::map<std::string, int> infoset_index_;
};

struct ValidationIssue {
  std::string code;     // e.g. "perfect-recall", "chance-sum"
  std::string message;  // human-readable, names the offending ids
  std::string node_id;
  std::string infoset_id;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;  // first entry localizes the first violation
};

// Structural invariants plus perfect recall: all members of an
// information set carry the same own experience; members are pairwise
// non-nested; chance distributions sum to one with positive entries;
// terminals pay every player. Pure; safe to call repeatedly.
ValidationReport validate(const GameTree& g);

// The strict "comes after" order on one player's information sets:
// succ(g, I, J) holds iff every member of I has a proper ancestor in J.
// DifferentPlayersError if I and J belong to different players.
bool succ(const GameTree& g, int infoset_i, int infoset_j);

// Longest own-infoset chain below I (inclusive): 1 for a maximal set,
// else 1 + max over own information sets strictly after I.
int height(const GameTree& g, int infoset_idx);

// max height over the player's information sets; 0 if they have none.
int height_bound(const GameTree& g, int player);

std::vector<History> terminal_histories(const GameTree& g);

// -------- strategic form --------

// Finite strategic-form game with a dense utility table. Strategy
// labels are disjoint across players.
struct StrategicGame {
  int num_players = 0;
  std::vector<std::vector<std::string>> strategies;  // per player
  // utilities[flat_index(profile)][player - 1]
  std::vector<std::vector<Rational>> utilities;

  std::size_t num_profiles() const;
  std::size_t flat_index(const std::vector<int>& profile) const;
  std::vector<int> profile_of(std::size_t flat) const;
  const Rational& utility(const std::vector<int>& profile, int player) const;
  std::string profile_label(const std::vector<int>& profile) const;
};

ValidationReport validate(const StrategicGame& g);

}  // namespace epseq

#endif  // EPSEQ_GAME_HPP_
