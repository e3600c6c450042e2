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

#include "epseq/json_io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "epseq/errors.hpp"

namespace epseq {

namespace {

const Json& require_field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  }
  return *it;
}

std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

Rational rational_from_json(const Json& j, const char* what) {
  if (j.is_number()) {
    throw ParseError(std::string(what) +
                     ": numeric literals are rejected, use exact \"p/q\" strings");
  }
  return parse_rational(require_string(j, what));
}

EpsPoly poly_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected a coefficient array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const Json& c : j) coeffs.push_back(rational_from_json(c, what));
  return EpsPoly(std::move(coeffs));
}

Json poly_to_json(const EpsPoly& p) {
  Json out = Json::array();
  for (const Rational& c : p.coeffs()) out.push_back(format_rational(c));
  return out;
}

}  // namespace

Json nonstd_to_json(const NonstdNum& x) {
  Json out = Json::object();
  out["order"] = x.order();
  out["num"] = poly_to_json(x.num());
  out["den"] = poly_to_json(x.den());
  return out;
}

NonstdNum nonstd_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if (text == "eps") return NonstdNum::epsilon();
    return NonstdNum(parse_rational(text));
  }
  if (j.is_number()) {
    throw ParseError("eps-field value: numeric literals are rejected, use \"p/q\" or \"eps\"");
  }
  if (!j.is_object()) throw ParseError("eps-field value: expected object, \"p/q\" or \"eps\"");
  const Json& order = require_field(j, "order", "eps-field value");
  if (!order.is_number_integer()) throw ParseError("eps-field value: 'order' must be an integer");
  return NonstdNum::make(order.get<int>(),
                         poly_from_json(require_field(j, "num", "eps-field value"), "num"),
                         poly_from_json(require_field(j, "den", "eps-field value"), "den"));
}

// -------- games --------

Json game_to_json(const GameTree& g) {
  Json nodes = Json::object();
  for (const Node& n : g.nodes()) {
    Json jn = Json::object();
    switch (n.kind) {
      case NodeKind::terminal: {
        jn["kind"] = "terminal";
        Json payoffs = Json::array();
        for (const Rational& u : n.payoffs) payoffs.push_back(format_rational(u));
        jn["payoffs"] = payoffs;
        break;
      }
      case NodeKind::chance: {
        jn["kind"] = "chance";
        Json actions = Json::array();
        Json dist = Json::object();
        Json children = Json::object();
        for (std::size_t a = 0; a < n.chance_labels.size(); ++a) {
          actions.push_back(n.chance_labels[a]);
          dist[n.chance_labels[a]] = format_rational(n.chance_probs[a]);
          children[n.chance_labels[a]] = g.node(n.children[a]).id;
        }
        jn["actions"] = actions;
        jn["dist"] = dist;
        jn["children"] = children;
        break;
      }
      case NodeKind::decision: {
        jn["kind"] = "decision";
        jn["player"] = n.player;
        jn["infoset"] = g.infoset(n.infoset).id;
        Json children = Json::object();
        const auto& actions = g.infoset(n.infoset).actions;
        for (std::size_t a = 0; a < actions.size(); ++a) {
          children[actions[a]] = g.node(n.children[a]).id;
        }
        jn["children"] = children;
        break;
      }
    }
    nodes[n.id] = jn;
  }
  Json infosets = Json::object();
  for (const InformationSet& iset : g.infosets()) {
    Json ji = Json::object();
    ji["player"] = iset.player;
    ji["actions"] = iset.actions;
    // Sorted by id so that emit(parse(emit(g))) is byte-stable even
    // though internal indices depend on key order.
    std::vector<std::string> member_ids;
    for (int m : iset.members) member_ids.push_back(g.node(m).id);
    std::sort(member_ids.begin(), member_ids.end());
    ji["members"] = member_ids;
    infosets[iset.id] = ji;
  }
  Json out = Json::object();
  out["form"] = "extensive";
  out["players"] = g.num_players();
  out["root"] = g.node(g.root()).id;
  out["nodes"] = nodes;
  out["infosets"] = infosets;
  return out;
}

Json game_to_json(const StrategicGame& g) {
  Json out = Json::object();
  out["form"] = "strategic";
  out["players"] = g.num_players;
  out["strategies"] = g.strategies;
  Json payoffs = Json::object();
  for (std::size_t flat = 0; flat < g.num_profiles(); ++flat) {
    const std::vector<int> prof = g.profile_of(flat);
    Json row = Json::array();
    for (int p = 1; p <= g.num_players; ++p) row.push_back(format_rational(g.utility(prof, p)));
    payoffs[g.profile_label(prof)] = row;
  }
  out["payoffs"] = payoffs;
  return out;
}

namespace {

GameTree extensive_from_json(const Json& j) {
  const int players = require_field(j, "players", "game").get<int>();
  const Json& jnodes = require_field(j, "nodes", "game");
  const Json& jinfosets = require_field(j, "infosets", "game");
  if (!jnodes.is_object() || !jinfosets.is_object()) {
    throw ParseError("game: 'nodes' and 'infosets' must be objects");
  }

  // Information sets first: they fix the action order of decision nodes.
  std::vector<InformationSet> infosets;
  std::map<std::string, int> infoset_index;
  for (auto it = jinfosets.begin(); it != jinfosets.end(); ++it) {
    InformationSet iset;
    iset.id = it.key();
    iset.player = require_field(it.value(), "player", "infoset").get<int>();
    for (const Json& a : require_field(it.value(), "actions", "infoset")) {
      iset.actions.push_back(require_string(a, "action label"));
    }
    infoset_index[iset.id] = static_cast<int>(infosets.size());
    infosets.push_back(std::move(iset));
  }

  std::vector<Node> nodes;
  std::map<std::string, int> node_index;
  for (auto it = jnodes.begin(); it != jnodes.end(); ++it) {
    node_index[it.key()] = static_cast<int>(node_index.size());
  }
  nodes.resize(node_index.size());

  for (auto it = jnodes.begin(); it != jnodes.end(); ++it) {
    Node n;
    n.id = it.key();
    const Json& jn = it.value();
    const std::string kind = require_string(require_field(jn, "kind", "node"), "node kind");
    const auto child_at = [&](const std::string& label) {
      const Json& children = require_field(jn, "children", "node");
      auto cit = children.find(label);
      if (cit == children.end()) {
        throw ParseError("node '" + n.id + "': missing child for action '" + label + "'");
      }
      const std::string child_id = require_string(*cit, "child id");
      auto nit = node_index.find(child_id);
      if (nit == node_index.end()) {
        throw ParseError("node '" + n.id + "': unknown child node '" + child_id + "'");
      }
      return nit->second;
    };
    if (kind == "terminal") {
      n.kind = NodeKind::terminal;
      for (const Json& u : require_field(jn, "payoffs", "terminal node")) {
        n.payoffs.push_back(rational_from_json(u, "payoff"));
      }
    } else if (kind == "chance") {
      n.kind = NodeKind::chance;
      const Json& dist = require_field(jn, "dist", "chance node");
      for (const Json& a : require_field(jn, "actions", "chance node")) {
        const std::string label = require_string(a, "chance label");
        auto dit = dist.find(label);
        if (dit == dist.end()) {
          throw ParseError("chance node '" + n.id + "': no probability for '" + label + "'");
        }
        n.chance_labels.push_back(label);
        n.chance_probs.push_back(rational_from_json(*dit, "chance probability"));
        n.children.push_back(child_at(label));
      }
    } else if (kind == "decision") {
      n.kind = NodeKind::decision;
      n.player = require_field(jn, "player", "decision node").get<int>();
      const std::string iset_id =
          require_string(require_field(jn, "infoset", "decision node"), "infoset id");
      auto iit = infoset_index.find(iset_id);
      if (iit == infoset_index.end()) {
        throw ParseError("node '" + n.id + "': unknown information set '" + iset_id + "'");
      }
      n.infoset = iit->second;
      for (const std::string& label : infosets[static_cast<std::size_t>(n.infoset)].actions) {
        n.children.push_back(child_at(label));
      }
      infosets[static_cast<std::size_t>(n.infoset)].members.push_back(node_index.at(n.id));
    } else {
      throw ParseError("node '" + n.id + "': unknown kind '" + kind + "'");
    }
    nodes[static_cast<std::size_t>(node_index.at(n.id))] = std::move(n);
  }

  // Wire parents; a child with two parents is rejected here, anything
  // subtler is left to validate().
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t a = 0; a < nodes[i].children.size(); ++a) {
      Node& child = nodes[static_cast<std::size_t>(nodes[i].children[a])];
      if (child.parent != -1) {
        throw ParseError("node '" + child.id + "' has more than one parent");
      }
      child.parent = static_cast<int>(i);
      child.parent_action = static_cast<int>(a);
    }
  }
  for (auto& iset : infosets) std::sort(iset.members.begin(), iset.members.end());

  const std::string root_id = require_string(require_field(j, "root", "game"), "root id");
  auto rit = node_index.find(root_id);
  if (rit == node_index.end()) throw ParseError("game: unknown root node '" + root_id + "'");

  GameTree g(players, std::move(nodes), std::move(infosets), rit->second);

  // Cross-check declared infoset members when present.
  const Json& jis = j.at("infosets");
  for (auto it = jis.begin(); it != jis.end(); ++it) {
    auto mit = it.value().find("members");
    if (mit == it.value().end()) continue;
    const InformationSet& iset = g.infoset(infoset_index.at(it.key()));
    std::vector<std::string> declared;
    for (const Json& m : *mit) declared.push_back(require_string(m, "member id"));
    std::sort(declared.begin(), declared.end());
    std::vector<std::string> actual;
    for (int m : iset.members) actual.push_back(g.node(m).id);
    std::sort(actual.begin(), actual.end());
    if (declared != actual) {
      throw ParseError("infoset '" + it.key() + "': declared members disagree with node usage");
    }
  }
  return g;
}

StrategicGame strategic_from_json(const Json& j) {
  StrategicGame g;
  g.num_players = require_field(j, "players", "game").get<int>();
  const Json& strategies = require_field(j, "strategies", "game");
  if (!strategies.is_array() || static_cast<int>(strategies.size()) != g.num_players) {
    throw ParseError("game: 'strategies' must list one label array per player");
  }
  for (const Json& per_player : strategies) {
    std::vector<std::string> labels;
    for (const Json& s : per_player) labels.push_back(require_string(s, "strategy label"));
    g.strategies.push_back(std::move(labels));
  }
  const Json& payoffs = require_field(j, "payoffs", "game");
  g.utilities.assign(g.num_profiles(), {});
  for (std::size_t flat = 0; flat < g.num_profiles(); ++flat) {
    const std::string key = g.profile_label(g.profile_of(flat));
    auto it = payoffs.find(key);
    if (it == payoffs.end()) throw ParseError("game: missing payoffs for profile '" + key + "'");
    std::vector<Rational> row;
    for (const Json& u : *it) row.push_back(rational_from_json(u, "payoff"));
    if (static_cast<int>(row.size()) != g.num_players) {
      throw ParseError("game: profile '" + key + "' must pay every player");
    }
    g.utilities[flat] = std::move(row);
  }
  return g;
}

}  // namespace

std::variant<GameTree, StrategicGame> game_from_json(const Json& j) {
  const std::string form = require_string(require_field(j, "form", "game"), "game form");
  if (form == "extensive") return extensive_from_json(j);
  if (form == "strategic") return strategic_from_json(j);
  throw ParseError("game: unknown form '" + form + "'");
}

// -------- profiles --------

Json profile_to_json(const GameTree& g, const BehavioralProfile& p) {
  Json by_player = Json::object();
  for (int player = 1; player <= g.num_players(); ++player) {
    Json per_infoset = Json::object();
    for (int iset : g.infosets_of(player)) {
      Json dist = Json::object();
      const auto& actions = g.infoset(iset).actions;
      for (std::size_t a = 0; a < actions.size(); ++a) {
        dist[actions[a]] = nonstd_to_json(p.at(iset)[a]);
      }
      per_infoset[g.infoset(iset).id] = dist;
    }
    by_player[std::to_string(player)] = per_infoset;
  }
  Json out = Json::object();
  out["form"] = "behavioral";
  out["profile"] = by_player;
  return out;
}

BehavioralProfile profile_from_json(const GameTree& g, const Json& j) {
  const Json& by_player = require_field(j, "profile", "behavioral profile");
  std::vector<std::vector<NonstdNum>> table(g.infosets().size());
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const InformationSet& iset = g.infosets()[i];
    const Json& per_infoset =
        require_field(by_player, std::to_string(iset.player).c_str(), "behavioral profile");
    auto iit = per_infoset.find(iset.id);
    if (iit == per_infoset.end()) {
      throw ParseError("behavioral profile: missing information set '" + iset.id + "'");
    }
    std::vector<NonstdNum> dist;
    dist.reserve(iset.actions.size());
    for (const std::string& action : iset.actions) {
      auto ait = iit->find(action);
      if (ait == iit->end()) {
        throw ParseError("behavioral profile: missing action '" + action + "' at '" + iset.id +
                         "'");
      }
      dist.push_back(nonstd_from_json(*ait));
    }
    table[i] = std::move(dist);
  }
  BehavioralProfile p(std::move(table));
  validate_profile(g, p);
  return p;
}

Json mixed_to_json(const StrategicGame& g, const MixedProfile& p) {
  Json profile = Json::array();
  for (int i = 0; i < g.num_players; ++i) {
    Json row = Json::object();
    for (std::size_t s = 0; s < g.strategies[static_cast<std::size_t>(i)].size(); ++s) {
      row[g.strategies[static_cast<std::size_t>(i)][s]] =
          format_rational(p.probs[static_cast<std::size_t>(i)][s]);
    }
    profile.push_back(row);
  }
  Json out = Json::object();
  out["form"] = "mixed";
  out["profile"] = profile;
  return out;
}

MixedProfile mixed_from_json(const StrategicGame& g, const Json& j) {
  const Json& profile = require_field(j, "profile", "mixed profile");
  if (!profile.is_array() || static_cast<int>(profile.size()) != g.num_players) {
    throw ParseError("mixed profile: expected one distribution per player");
  }
  MixedProfile p;
  for (int i = 0; i < g.num_players; ++i) {
    const Json& row = profile[static_cast<std::size_t>(i)];
    std::vector<Rational> probs;
    for (const std::string& label : g.strategies[static_cast<std::size_t>(i)]) {
      auto it = row.find(label);
      if (it == row.end()) {
        probs.emplace_back(0);
      } else {
        probs.push_back(rational_from_json(*it, "mixed probability"));
      }
    }
    p.probs.push_back(std::move(probs));
  }
  validate_mixed(g, p);
  return p;
}

Json distribution_to_json(const StrategicGame& g, const ProfileDistribution& eta) {
  Json dist = Json::object();
  for (std::size_t flat = 0; flat < g.num_profiles(); ++flat) {
    if (eta.mass[flat] == 0) continue;
    dist[g.profile_label(g.profile_of(flat))] = format_rational(eta.mass[flat]);
  }
  Json out = Json::object();
  out["form"] = "correlated";
  out["dist"] = dist;
  return out;
}

ProfileDistribution distribution_from_json(const StrategicGame& g, const Json& j) {
  const Json& dist = require_field(j, "dist", "profile distribution");
  ProfileDistribution eta;
  eta.mass.assign(g.num_profiles(), Rational(0));
  std::map<std::string, std::size_t> index;
  for (std::size_t flat = 0; flat < g.num_profiles(); ++flat) {
    index[g.profile_label(g.profile_of(flat))] = flat;
  }
  for (auto it = dist.begin(); it != dist.end(); ++it) {
    auto pit = index.find(it.key());
    if (pit == index.end()) {
      throw ParseError("profile distribution: unknown profile '" + it.key() + "'");
    }
    eta.mass[pit->second] = rational_from_json(it.value(), "profile probability");
  }
  validate_profile_distribution(g, eta);
  return eta;
}

std::map<std::pair<int, int>, EpsPoly> tremble_spec_from_json(const GameTree& g, const Json& j) {
  const Json& entries = require_field(j, "entries", "tremble spec");
  std::map<std::string, int> infoset_index;
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    infoset_index[g.infosets()[i].id] = static_cast<int>(i);
  }
  std::map<std::pair<int, int>, EpsPoly> spec;
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    auto iit = infoset_index.find(it.key());
    if (iit == infoset_index.end()) {
      throw ParseError("tremble spec: unknown information set '" + it.key() + "'");
    }
    const InformationSet& iset = g.infoset(iit->second);
    for (auto ait = it.value().begin(); ait != it.value().end(); ++ait) {
      const auto pos = std::find(iset.actions.begin(), iset.actions.end(), ait.key());
      if (pos == iset.actions.end()) {
        throw ParseError("tremble spec: unknown action '" + ait.key() + "' at '" + it.key() + "'");
      }
      spec[{iit->second, static_cast<int>(pos - iset.actions.begin())}] =
          poly_from_json(ait.value(), "tremble weight");
    }
  }
  return spec;
}

// -------- beliefs and models --------

Json beliefs_to_json(const GameTree& g, const BeliefSystem& mu) {
  Json out = Json::object();
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const InformationSet& iset = g.infosets()[i];
    Json row = Json::object();
    for (std::size_t k = 0; k < iset.members.size(); ++k) {
      row[g.node(iset.members[k]).id] = nonstd_to_json(mu.beliefs[i][k]);
    }
    out[iset.id] = row;
  }
  return out;
}

BeliefSystem beliefs_from_json(const GameTree& g, const Json& j) {
  BeliefSystem mu;
  mu.beliefs.resize(g.infosets().size());
  for (std::size_t i = 0; i < g.infosets().size(); ++i) {
    const InformationSet& iset = g.infosets()[i];
    auto it = j.find(iset.id);
    if (it == j.end()) throw ParseError("belief system: missing information set '" + iset.id + "'");
    std::vector<NonstdNum> row;
    row.reserve(iset.members.size());
    for (int member : iset.members) {
      auto mit = it->find(g.node(member).id);
      if (mit == it->end()) {
        throw ParseError("belief system: missing node '" + g.node(member).id + "'");
      }
      row.push_back(nonstd_from_json(*mit));
    }
    mu.beliefs[i] = std::move(row);
  }
  return mu;
}

namespace {

Json priors_to_json(const std::vector<std::vector<NonstdNum>>& priors) {
  Json out = Json::object();
  for (std::size_t i = 0; i < priors.size(); ++i) {
    Json row = Json::array();
    for (const NonstdNum& x : priors[i]) row.push_back(nonstd_to_json(x));
    out[std::to_string(i + 1)] = row;
  }
  return out;
}

std::vector<std::vector<NonstdNum>> priors_from_json(const Json& j, int players,
                                                     std::size_t states) {
  std::vector<std::vector<NonstdNum>> priors;
  for (int i = 1; i <= players; ++i) {
    const Json& row = require_field(j, std::to_string(i).c_str(), "model priors");
    if (row.size() != states) {
      throw ParseError("model priors: player " + std::to_string(i) +
                       " prior length does not match the state count");
    }
    std::vector<NonstdNum> prior;
    prior.reserve(states);
    for (const Json& x : row) prior.push_back(nonstd_from_json(x));
    priors.push_back(std::move(prior));
  }
  return priors;
}

}  // namespace

Json model_to_json(const GameTree& g, const ExtensiveModel& m) {
  Json states = Json::array();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    Json js = Json::object();
    js["name"] = m.state_names[s];
    js["outcome"] = g.path_labels(m.outcome[s]);
    states.push_back(js);
  }
  Json out = Json::object();
  out["form"] = "extensive-model";
  out["states"] = states;
  out["priors"] = priors_to_json(m.priors);
  return out;
}

ExtensiveModel model_from_json(const GameTree& g, const Json& j) {
  ExtensiveModel m;
  // Terminal lookup by label path.
  std::map<std::vector<std::string>, int> by_path;
  for (int t : g.terminal_nodes()) by_path[g.path_labels(t)] = t;
  for (const Json& js : require_field(j, "states", "model")) {
    m.state_names.push_back(require_string(require_field(js, "name", "state"), "state name"));
    std::vector<std::string> path;
    for (const Json& a : require_field(js, "outcome", "state")) {
      path.push_back(require_string(a, "outcome action"));
    }
    auto it = by_path.find(path);
    if (it == by_path.end()) {
      throw ParseError("model: state '" + m.state_names.back() +
                       "' outcome is not a terminal history of this game");
    }
    m.outcome.push_back(it->second);
  }
  m.priors = priors_from_json(require_field(j, "priors", "model"), g.num_players(),
                              m.num_states());
  validate_model(g, m);
  return m;
}

Json model_to_json(const StrategicGame& g, const StrategicModel& m) {
  Json states = Json::array();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    Json js = Json::object();
    js["name"] = m.state_names[s];
    Json prof = Json::array();
    for (int p = 0; p < g.num_players; ++p) {
      prof.push_back(g.strategies[static_cast<std::size_t>(p)]
                                 [static_cast<std::size_t>(m.profile[s][static_cast<std::size_t>(p)])]);
    }
    js["profile"] = prof;
    states.push_back(js);
  }
  Json out = Json::object();
  out["form"] = "strategic-model";
  out["states"] = states;
  out["priors"] = priors_to_json(m.priors);
  return out;
}

StrategicModel model_from_json(const StrategicGame& g, const Json& j) {
  StrategicModel m;
  for (const Json& js : require_field(j, "states", "model")) {
    m.state_names.push_back(require_string(require_field(js, "name", "state"), "state name"));
    const Json& prof = require_field(js, "profile", "state");
    if (static_cast<int>(prof.size()) != g.num_players) {
      throw ParseError("model: state profile must name one strategy per player");
    }
    std::vector<int> indices;
    for (int p = 0; p < g.num_players; ++p) {
      const std::string label = require_string(prof[static_cast<std::size_t>(p)], "strategy");
      const auto& labels = g.strategies[static_cast<std::size_t>(p)];
      const auto pos = std::find(labels.begin(), labels.end(), label);
      if (pos == labels.end()) {
        throw ParseError("model: unknown strategy '" + label + "' for player " +
                         std::to_string(p + 1));
      }
      indices.push_back(static_cast<int>(pos - labels.begin()));
    }
    m.profile.push_back(std::move(indices));
  }
  m.priors = priors_from_json(require_field(j, "priors", "model"), g.num_players, m.num_states());
  validate_model(g, m);
  return m;
}

// -------- reports --------

Json report_to_json(const ValidationReport& report) {
  Json issues = Json::array();
  for (const ValidationIssue& issue : report.issues) {
    Json ji = Json::object();
    ji["code"] = issue.code;
    ji["message"] = issue.message;
    if (!issue.node_id.empty()) ji["node"] = issue.node_id;
    if (!issue.infoset_id.empty()) ji["infoset"] = issue.infoset_id;
    issues.push_back(ji);
  }
  Json out = Json::object();
  out["ok"] = report.ok;
  out["issues"] = issues;
  return out;
}

Json shortfall_to_json(const GameTree& g, const Shortfall& s) {
  Json out = Json::object();
  out["infoset"] = g.infoset(s.infoset).id;
  out["amount"] = nonstd_to_json(s.amount);
  out["deviation"] = g.infoset(s.infoset).actions[static_cast<std::size_t>(s.action)];
  Json continuation = Json::object();
  for (const auto& [iset, action] : s.continuation) {
    continuation[g.infoset(iset).id] = g.infoset(iset).actions[static_cast<std::size_t>(action)];
  }
  out["continuation"] = continuation;
  return out;
}

Json verdict_to_json(const GameTree* g, const Verdict& v) {
  Json out = Json::object();
  out["pass"] = v.pass;
  out["route"] = v.route == Route::direct ? "direct" : "epistemic";
  if (v.certificate) {
    Json cert = Json::object();
    cert["eps"] = nonstd_to_json(v.certificate->eps);
    cert["tremble"] = (v.certificate->tremble && g != nullptr)
                          ? profile_to_json(*g, *v.certificate->tremble)
                          : Json();
    cert["belief"] = (v.certificate->belief && g != nullptr)
                         ? beliefs_to_json(*g, *v.certificate->belief)
                         : Json();
    if (v.certificate->bounds) {
      Json b = Json::object();
      b["eps"] = nonstd_to_json(v.certificate->bounds->eps);
      b["eps_prime"] = nonstd_to_json(v.certificate->bounds->eps_prime);
      b["d"] = v.certificate->bounds->d;
      b["bound"] = nonstd_to_json(v.certificate->bounds->bound);
      cert["bounds"] = b;
    } else {
      cert["bounds"] = Json();
    }
    out["certificate"] = cert;
  } else {
    out["certificate"] = Json();
  }
  if (v.counterexample) {
    Json cex = Json::object();
    cex["player"] = v.counterexample->player;
    if (!v.counterexample->state.empty()) cex["state"] = v.counterexample->state;
    cex["infoset"] = v.counterexample->infoset;
    cex["deviation"] = v.counterexample->deviation;
    if (!v.counterexample->continuation.empty()) {
      cex["continuation"] = v.counterexample->continuation;
    }
    cex["shortfall"] = nonstd_to_json(v.counterexample->shortfall);
    out["counterexample"] = cex;
  } else {
    out["counterexample"] = Json();
  }
  out["notes"] = v.notes;
  return out;
}

Json rationalizable_to_json(const StrategicGame& g, const RationalizableResult& r) {
  Json surviving = Json::object();
  for (int p = 0; p < g.num_players; ++p) {
    Json labels = Json::array();
    for (int s : r.surviving[static_cast<std::size_t>(p)]) {
      labels.push_back(g.strategies[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)]);
    }
    surviving[std::to_string(p + 1)] = labels;
  }
  Json out = Json::object();
  out["surviving"] = surviving;
  return out;
}

// -------- files --------

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(origin + ": malformed JSON");
  return j;
}

}  // namespace epseq
