// Copyright 2026 The ceg authors
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

#include "ceg/game_io.h"

#include <json.hpp>

#include <set>
#include <string>

namespace ceg {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& context, const std::string& what) {
  throw ParseError(context.empty() ? what : context + ": " + what);
}

const json& Require(const json& obj, const char* key,
                    const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(context, std::string("missing key '") + key + "'");
  return *it;
}

std::string RequireString(const json& obj, const char* key,
                          const std::string& context) {
  const json& v = Require(obj, key, context);
  if (!v.is_string()) {
    Fail(context, std::string("key '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

void RejectUnknownKeys(const json& obj, const std::set<std::string>& allowed,
                       const std::string& context) {
  for (const auto& [key, value] : obj.items()) {
    if (allowed.find(key) == allowed.end()) {
      Fail(context, "unknown key '" + key + "'");
    }
  }
}

Rat ParseNumber(const json& v, const std::string& context) {
  if (!v.is_string()) Fail(context, "numbers must be given as strings");
  try {
    return Rat::FromString(v.get<std::string>());
  } catch (const std::exception& e) {
    Fail(context, e.what());
  }
}

UtilityVector ParseUtility(const json& v, const GameTree& t,
                           const std::string& context) {
  if (!v.is_object()) Fail(context, "utility must be an object");
  UtilityVector out(std::vector<Rat>(t.players.size(), Rat(0)));
  std::set<std::string> seen;
  for (const auto& [player, value] : v.items()) {
    int idx = t.PlayerIndex(player);
    if (idx < 0) Fail(context, "unknown player '" + player + "'");
    seen.insert(player);
    out.values[idx] = ParseNumber(value, context + ", player '" + player + "'");
  }
  for (const std::string& p : t.players) {
    if (seen.find(p) == seen.end()) {
      Fail(context, "no utility for player '" + p + "'");
    }
  }
  return out;
}

TreeEdge ParseEdge(const json& v, const GameTree& t, NodeKind parent_kind,
                   const std::string& context) {
  if (!v.is_object()) Fail(context, "edges must be objects");
  RejectUnknownKeys(v, {"label", "to", "p", "edge_utility"}, context);
  TreeEdge e;
  e.label = RequireString(v, "label", context);
  if (e.label.empty()) Fail(context, "empty edge label");
  e.to = RequireString(v, "to", context);
  bool has_p = v.find("p") != v.end();
  if (parent_kind == NodeKind::kChance) {
    if (!has_p) Fail(context, "chance edge '" + e.label + "' needs 'p'");
    e.prob = ParseNumber(v.at("p"), context + ", edge '" + e.label + "'");
  } else if (has_p) {
    Fail(context, "edge '" + e.label + "' of a non-chance node carries 'p'");
  }
  if (auto it = v.find("edge_utility"); it != v.end()) {
    e.edge_utility =
        ParseUtility(*it, t, context + ", edge '" + e.label + "'");
  }
  return e;
}

TreeNode ParseNode(const json& v, const GameTree& t, const NodeId& id) {
  std::string context = "node '" + id + "'";
  if (!v.is_object()) Fail(context, "must be an object");
  TreeNode n;
  std::string kind = RequireString(v, "kind", context);
  if (kind == "decision") {
    n.kind = NodeKind::kDecision;
    RejectUnknownKeys(v, {"kind", "owner", "var", "edges"}, context);
    std::string owner = RequireString(v, "owner", context);
    n.owner = t.PlayerIndex(owner);
    if (n.owner < 0) Fail(context, "unknown owner '" + owner + "'");
  } else if (kind == "chance") {
    n.kind = NodeKind::kChance;
    RejectUnknownKeys(v, {"kind", "var", "edges"}, context);
  } else if (kind == "utility") {
    n.kind = NodeKind::kUtility;
    RejectUnknownKeys(v, {"kind", "u", "var"}, context);
    n.utility = ParseUtility(Require(v, "u", context), t, context);
  } else {
    Fail(context, "unknown kind '" + kind + "'");
  }
  if (auto it = v.find("var"); it != v.end()) {
    if (!it->is_string()) Fail(context, "'var' must be a string");
    n.var = it->get<std::string>();
  }
  if (n.kind != NodeKind::kUtility) {
    const json& edges = Require(v, "edges", context);
    if (!edges.is_array()) Fail(context, "'edges' must be an array");
    for (const json& e : edges) {
      n.edges.push_back(ParseEdge(e, t, n.kind, context));
    }
  }
  return n;
}

json UtilityToJson(const GameTree& t, const UtilityVector& u) {
  json out = json::object();
  for (size_t i = 0; i < t.players.size(); ++i) {
    out[t.players[i]] = u.values[i].ToString();
  }
  return out;
}

}  // namespace

GameTree ParseGame(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON syntax error at byte ") +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  RejectUnknownKeys(doc, {"players", "perspective", "variables", "root",
                          "nodes"},
                    "document");

  GameTree t;
  const json& players = Require(doc, "players", "document");
  if (!players.is_array() || players.empty()) {
    Fail("document", "'players' must be a non-empty array");
  }
  std::set<std::string> seen_players;
  for (const json& p : players) {
    if (!p.is_string() || p.get<std::string>().empty()) {
      Fail("document", "player names must be non-empty strings");
    }
    if (!seen_players.insert(p.get<std::string>()).second) {
      Fail("document", "duplicate player '" + p.get<std::string>() + "'");
    }
    t.players.push_back(p.get<std::string>());
  }

  std::string perspective = RequireString(doc, "perspective", "document");
  t.perspective = t.PlayerIndex(perspective);
  if (t.perspective < 0) {
    Fail("document", "perspective '" + perspective + "' is not a player");
  }

  if (auto it = doc.find("variables"); it != doc.end()) {
    if (!it->is_array()) Fail("document", "'variables' must be an array");
    std::set<std::string> seen_vars;
    for (const json& v : *it) {
      if (!v.is_string() || v.get<std::string>().empty()) {
        Fail("document", "variable names must be non-empty strings");
      }
      if (!seen_vars.insert(v.get<std::string>()).second) {
        Fail("document", "duplicate variable '" + v.get<std::string>() + "'");
      }
      t.variables.push_back(v.get<std::string>());
    }
  }

  t.root = RequireString(doc, "root", "document");
  const json& nodes = Require(doc, "nodes", "document");
  if (!nodes.is_object()) Fail("document", "'nodes' must be an object");
  for (const auto& [id, node] : nodes.items()) {
    t.nodes.emplace(id, ParseNode(node, t, id));
  }
  return t;
}

std::string SerializeGame(const GameTree& t) {
  json doc;
  doc["players"] = t.players;
  doc["perspective"] = t.players.at(t.perspective);
  if (!t.variables.empty()) doc["variables"] = t.variables;
  doc["root"] = t.root;
  json nodes = json::object();
  for (const auto& [id, n] : t.nodes) {
    json node;
    node["kind"] = std::string(NodeKindName(n.kind));
    if (n.kind == NodeKind::kDecision) node["owner"] = t.players.at(n.owner);
    if (n.kind == NodeKind::kUtility) node["u"] = UtilityToJson(t, n.utility);
    if (n.var) node["var"] = *n.var;
    if (n.kind != NodeKind::kUtility) {
      json edges = json::array();
      for (const TreeEdge& e : n.edges) {
        json edge;
        edge["label"] = e.label;
        edge["to"] = e.to;
        if (e.prob) edge["p"] = e.prob->ToString();
        if (e.edge_utility) {
          edge["edge_utility"] = UtilityToJson(t, *e.edge_utility);
        }
        edges.push_back(std::move(edge));
      }
      node["edges"] = std::move(edges);
    }
    nodes[id] = std::move(node);
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

}  // namespace ceg
