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

#include "epseq/game.hpp"

#include <algorithm>
#include <set>

#include "epseq/errors.hpp"

namespace epseq {

namespace {

void collect_terminals(const std::vector<Node>& nodes, int idx, std::vector<int>* out) {
  const Node& n = nodes[static_cast<std::size_t>(idx)];
  if (n.kind == NodeKind::terminal) {
    out->push_back(idx);
    return;
  }
  for (int child : n.children) collect_terminals(nodes, child, out);
}

}  // namespace

GameTree::GameTree(int num_players, std::vector<Node> nodes,
                   std::vector<InformationSet> infosets, int root)
    : num_players_(num_players), root_(root), nodes_(std::move(nodes)),
      infosets_(std::move(infosets)) {
  if (root_ >= 0 && root_ < static_cast<int>(nodes_.size())) {
    collect_terminals(nodes_, root_, &terminals_);
  }
}

int GameTree::num_actions_at(int node_idx) const {
  const Node& n = node(node_idx);
  switch (n.kind) {
    case NodeKind::decision:
      return static_cast<int>(infoset(n.infoset).actions.size());
    case NodeKind::chance:
      return static_cast<int>(n.chance_probs.size());
    case NodeKind::terminal:
      return 0;
  }
  return 0;
}

History GameTree::history_of(int node_idx) const {
  History h;
  h.node = node_idx;
  int cur = node_idx;
  while (node(cur).parent >= 0) {
    h.path.push_back(node(cur).parent_action);
    cur = node(cur).parent;
  }
  std::reverse(h.path.begin(), h.path.end());
  return h;
}

std::vector<History> GameTree::prefixes(const History& h) const {
  std::vector<History> out;
  std::vector<int> chain;  // nodes root -> h.node
  int cur = h.node;
  while (cur >= 0) {
    chain.push_back(cur);
    cur = node(cur).parent;
  }
  std::reverse(chain.begin(), chain.end());
  for (int n : chain) out.push_back(history_of(n));
  return out;
}

std::vector<std::string> GameTree::path_labels(int node_idx) const {
  std::vector<std::string> out;
  const History h = history_of(node_idx);
  int cur = root_;
  for (int action : h.path) {
    const Node& n = node(cur);
    if (n.kind == NodeKind::decision) {
      out.push_back(infoset(n.infoset).actions[static_cast<std::size_t>(action)]);
    } else {
      out.push_back(n.chance_labels[static_cast<std::size_t>(action)]);
    }
    cur = n.children[static_cast<std::size_t>(action)];
  }
  return out;
}

std::vector<int> GameTree::infosets_of(int player) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(infosets_.size()); ++i) {
    if (infosets_[static_cast<std::size_t>(i)].player == player) out.push_back(i);
  }
  return out;
}

bool GameTree::is_ancestor(int ancestor, int node_idx) const {
  int cur = node(node_idx).parent;
  while (cur >= 0) {
    if (cur == ancestor) return true;
    cur = node(cur).parent;
  }
  return false;
}

std::vector<std::pair<int, int>> GameTree::experience(int player, int node_idx) const {
  std::vector<std::pair<int, int>> out;
  std::vector<std::pair<int, int>> rev;  // (node, action taken) above node_idx
  int cur = node_idx;
  while (node(cur).parent >= 0) {
    rev.emplace_back(node(cur).parent, node(cur).parent_action);
    cur = node(cur).parent;
  }
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    const Node& n = node(it->first);
    if (n.kind == NodeKind::decision && n.player == player) {
      out.emplace_back(n.infoset, it->second);
    }
  }
  return out;
}

// -------- builder --------

int GameBuilder::terminal(std::vector<Rational> payoffs, std::string id) {
  Node n;
  n.kind = NodeKind::terminal;
  n.payoffs = std::move(payoffs);
  n.id = id.empty() ? "n" + std::to_string(nodes_.size()) : std::move(id);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int GameBuilder::decision(int player, const std::string& infoset_id,
                          std::vector<std::string> actions, std::vector<int> children,
                          std::string id) {
  auto it = infoset_index_.find(infoset_id);
  int iset;
  if (it == infoset_index_.end()) {
    InformationSet s;
    s.id = infoset_id;
    s.player = player;
    s.actions = std::move(actions);
    infosets_.push_back(std::move(s));
    iset = static_cast<int>(infosets_.size()) - 1;
    infoset_index_[infoset_id] = iset;
  } else {
    iset = it->second;
    if (infosets_[static_cast<std::size_t>(iset)].actions != actions ||
        infosets_[static_cast<std::size_t>(iset)].player != player) {
      throw InvalidGameError("information set '" + infoset_id +
                             "' reused with a different player or action list");
    }
  }
  Node n;
  n.kind = NodeKind::decision;
  n.player = player;
  n.infoset = iset;
  n.children = std::move(children);
  n.id = id.empty() ? "n" + std::to_string(nodes_.size()) : std::move(id);
  infosets_[static_cast<std::size_t>(iset)].members.push_back(static_cast<int>(nodes_.size()));
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int GameBuilder::chance(std::vector<std::string> labels, std::vector<Rational> probs,
                        std::vector<int> children, std::string id) {
  Node n;
  n.kind = NodeKind::chance;
  n.chance_labels = std::move(labels);
  n.chance_probs = std::move(probs);
  n.children = std::move(children);
  n.id = id.empty() ? "n" + std::to_string(nodes_.size()) : std::move(id);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

GameTree GameBuilder::build(int root) {
  // Fix parent pointers; reject nodes with several parents outright.
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t a = 0; a < nodes_[i].children.size(); ++a) {
      Node& child = nodes_[static_cast<std::size_t>(nodes_[i].children[a])];
      if (child.parent != -1) {
        throw InvalidGameError("node '" + child.id + "' has more than one parent");
      }
      child.parent = static_cast<int>(i);
      child.parent_action = static_cast<int>(a);
    }
  }
  for (auto& iset : infosets_) std::sort(iset.members.begin(), iset.members.end());
  return GameTree(num_players_, std::move(nodes_), std::move(infosets_), root);
}

// -------- validation --------

namespace {

void add_issue(ValidationReport* report, std::string code, std::string message,
               std::string node_id = "", std::string infoset_id = "") {
  report->ok = false;
  report->issues.push_back(
      {std::move(code), std::move(message), std::move(node_id), std::move(infoset_id)});
}

}  // namespace

ValidationReport validate(const GameTree& g) {
  ValidationReport report;
  if (g.root() < 0 || g.root() >= static_cast<int>(g.nodes().size())) {
    add_issue(&report, "root", "missing or out-of-range root node");
    return report;
  }

  // Tree shape: the root has no parent, every other node exactly one,
  // and every node is reachable from the root.
  std::vector<int> seen(g.nodes().size(), 0);
  std::vector<int> stack = {g.root()};
  while (!stack.empty()) {
    const int idx = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(idx)]++) {
      add_issue(&report, "tree-shape", "node '" + g.node(idx).id + "' reached twice",
                g.node(idx).id);
      return report;
    }
    const Node& n = g.node(idx);
    if (n.kind != NodeKind::terminal) {
      const std::size_t expected = n.kind == NodeKind::decision
                                       ? g.infoset(n.infoset).actions.size()
                                       : n.chance_probs.size();
      if (n.children.size() != expected) {
        add_issue(&report, "children",
                  "node '" + n.id + "' has " + std::to_string(n.children.size()) +
                      " children for " + std::to_string(expected) + " actions",
                  n.id);
      }
      for (int child : n.children) {
        if (child < 0 || child >= static_cast<int>(g.nodes().size())) {
          add_issue(&report, "children", "node '" + n.id + "' has an out-of-range child", n.id);
        } else {
          stack.push_back(child);
        }
      }
    }
  }
  if (!report.ok) return report;
  for (std::size_t i = 0; i < g.nodes().size(); ++i) {
    if (!seen[i]) {
      add_issue(&report, "tree-shape", "node '" + g.nodes()[i].id + "' unreachable from root",
                g.nodes()[i].id);
    }
  }

  std::set<std::string> node_ids;
  for (const Node& n : g.nodes()) {
    if (!node_ids.insert(n.id).second) {
      add_issue(&report, "node-id", "node id '" + n.id + "' is not unique", n.id);
    }
    switch (n.kind) {
      case NodeKind::terminal: {
        if (static_cast<int>(n.payoffs.size()) != g.num_players()) {
          add_issue(&report, "payoffs",
                    "terminal '" + n.id + "' does not pay every player", n.id);
        }
        break;
      }
      case NodeKind::chance: {
        Rational total(0);
        bool positive = true;
        for (const Rational& p : n.chance_probs) {
          total += p;
          if (p <= 0) positive = false;
        }
        if (total != 1 || !positive) {
          add_issue(&report, "chance-sum",
                    "chance node '" + n.id + "' needs positive probabilities summing to 1", n.id);
        }
        if (n.chance_labels.size() != n.chance_probs.size() ||
            std::set<std::string>(n.chance_labels.begin(), n.chance_labels.end()).size() !=
                n.chance_labels.size()) {
          add_issue(&report, "chance-labels",
                    "chance node '" + n.id + "' needs one distinct label per branch", n.id);
        }
        break;
      }
      case NodeKind::decision: {
        if (n.player < 1 || n.player > g.num_players()) {
          add_issue(&report, "player", "node '" + n.id + "' has an out-of-range player", n.id);
        }
        if (n.infoset < 0 || n.infoset >= static_cast<int>(g.infosets().size())) {
          add_issue(&report, "infoset", "node '" + n.id + "' has an out-of-range infoset", n.id);
        }
        break;
      }
    }
  }
  if (!report.ok) return report;

  for (const InformationSet& iset : g.infosets()) {
    if (iset.members.empty()) {
      add_issue(&report, "infoset-empty", "information set '" + iset.id + "' has no members", "",
                iset.id);
      continue;
    }
    if (std::set<std::string>(iset.actions.begin(), iset.actions.end()).size() !=
        iset.actions.size()) {
      add_issue(&report, "action-labels",
                "information set '" + iset.id + "' repeats an action label", "", iset.id);
    }
    for (int m : iset.members) {
      const Node& n = g.node(m);
      if (n.kind != NodeKind::decision || n.player != iset.player ||
          g.infoset(n.infoset).id != iset.id) {
        add_issue(&report, "infoset-member",
                  "information set '" + iset.id + "' member '" + n.id + "' is inconsistent",
                  n.id, iset.id);
      }
    }
    // Non-nesting: no member may sit on the path to another member.
    for (int a : iset.members) {
      for (int b : iset.members) {
        if (a != b && g.is_ancestor(a, b)) {
          add_issue(&report, "nested-members",
                    "information set '" + iset.id + "' contains nested nodes '" + g.node(a).id +
                        "' and '" + g.node(b).id + "'",
                    g.node(b).id, iset.id);
        }
      }
    }
    // Perfect recall: identical own experience across members.
    const auto reference = g.experience(iset.player, iset.members.front());
    for (std::size_t k = 1; k < iset.members.size(); ++k) {
      if (g.experience(iset.player, iset.members[k]) != reference) {
        add_issue(&report, "perfect-recall",
                  "information set '" + iset.id + "' pools nodes with different experiences ('" +
                      g.node(iset.members.front()).id + "' vs '" + g.node(iset.members[k]).id +
                      "')",
                  g.node(iset.members[k]).id, iset.id);
        break;
      }
    }
  }
  return report;
}

bool succ(const GameTree& g, int infoset_i, int infoset_j) {
  const InformationSet& a = g.infoset(infoset_i);
  const InformationSet& b = g.infoset(infoset_j);
  if (a.player != b.player) {
    throw DifferentPlayersError("information sets '" + a.id + "' and '" + b.id +
                                "' belong to different players");
  }
  if (infoset_i == infoset_j) return false;
  for (int member : a.members) {
    bool found = false;
    for (int anc : b.members) {
      if (g.is_ancestor(anc, member)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

int height_rec(const GameTree& g, int iset, const std::vector<int>& own,
               std::vector<int>* memo) {
  int& slot = (*memo)[static_cast<std::size_t>(iset)];
  if (slot != 0) return slot;
  int best = 0;
  for (int below : own) {
    if (below != iset && succ(g, below, iset)) best = std::max(best, height_rec(g, below, own, memo));
  }
  slot = best + 1;
  return slot;
}

}  // namespace

int height(const GameTree& g, int infoset_idx) {
  const int player = g.infoset(infoset_idx).player;
  const std::vector<int> own = g.infosets_of(player);
  std::vector<int> memo(g.infosets().size(), 0);
  return height_rec(g, infoset_idx, own, &memo);
}

int height_bound(const GameTree& g, int player) {
  int best = 0;
  std::vector<int> memo(g.infosets().size(), 0);
  const std::vector<int> own = g.infosets_of(player);
  for (int iset : own) best = std::max(best, height_rec(g, iset, own, &memo));
  return best;
}

std::vector<History> terminal_histories(const GameTree& g) {
  std::vector<History> out;
  out.reserve(g.terminal_nodes().size());
  for (int t : g.terminal_nodes()) out.push_back(g.history_of(t));
  return out;
}

// -------- strategic form --------

std::size_t StrategicGame::num_profiles() const {
  std::size_t total = 1;
  for (const auto& s : strategies) total *= s.size();
  return total;
}

std::size_t StrategicGame::flat_index(const std::vector<int>& profile) const {
  std::size_t flat = 0;
  for (int p = 0; p < num_players; ++p) {
    flat = flat * strategies[static_cast<std::size_t>(p)].size() +
           static_cast<std::size_t>(profile[static_cast<std::size_t>(p)]);
  }
  return flat;
}

std::vector<int> StrategicGame::profile_of(std::size_t flat) const {
  std::vector<int> profile(static_cast<std::size_t>(num_players), 0);
  for (int p = num_players - 1; p >= 0; --p) {
    const std::size_t size = strategies[static_cast<std::size_t>(p)].size();
    profile[static_cast<std::size_t>(p)] = static_cast<int>(flat % size);
    flat /= size;
  }
  return profile;
}

const Rational& StrategicGame::utility(const std::vector<int>& profile, int player) const {
  return utilities[flat_index(profile)][static_cast<std::size_t>(player - 1)];
}

std::string StrategicGame::profile_label(const std::vector<int>& profile) const {
  std::string out;
  for (int p = 0; p < num_players; ++p) {
    if (p) out += ',';
    out += strategies[static_cast<std::size_t>(p)]
                     [static_cast<std::size_t>(profile[static_cast<std::size_t>(p)])];
  }
  return out;
}

ValidationReport validate(const StrategicGame& g) {
  ValidationReport report;
  if (g.num_players < 1) add_issue(&report, "players", "at least one player required");
  std::set<std::string> labels;
  for (const auto& per_player : g.strategies) {
    if (per_player.empty()) add_issue(&report, "strategies", "a player has no strategies");
    for (const auto& label : per_player) {
      if (!labels.insert(label).second) {
        add_issue(&report, "labels", "strategy label '" + label + "' reused across players");
      }
      if (label.find(',') != std::string::npos) {
        add_issue(&report, "labels", "strategy label '" + label + "' contains ','");
      }
    }
  }
  if (g.utilities.size() != g.num_profiles()) {
    add_issue(&report, "utilities", "utility table does not cover every profile");
  }
  for (const auto& row : g.utilities) {
    if (static_cast<int>(row.size()) != g.num_players) {
      add_issue(&report, "utilities", "a profile is missing a player's payoff");
      break;
    }
  }
  return report;
}

}  // namespace epseq
