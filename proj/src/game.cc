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

#include "ceg/game.h"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ceg {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kDecision:
      return "decision";
    case NodeKind::kChance:
      return "chance";
    case NodeKind::kUtility:
      return "utility";
  }
  return "?";
}

UtilityVector& UtilityVector::operator+=(const UtilityVector& o) {
  if (values.size() != o.values.size()) {
    throw std::invalid_argument("utility vector arity mismatch");
  }
  for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

UtilityVector UtilityVector::Scaled(const Rat& f) const {
  UtilityVector out = *this;
  for (Rat& v : out.values) v *= f;
  return out;
}

std::string UtilityVector::ToString() const {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].ToString();
  }
  out += ")";
  return out;
}

int GameTree::PlayerIndex(std::string_view name) const {
  for (size_t i = 0; i < players.size(); ++i) {
    if (players[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int GameTree::VariableIndex(std::string_view name) const {
  for (size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

void CheckPlayers(const GameTree& t, std::vector<Diagnostic>& out) {
  std::set<std::string> seen;
  for (const std::string& p : t.players) {
    if (p.empty()) {
      out.push_back({DiagCode::kBadPlayerName, "", "empty player name"});
    }
    if (!seen.insert(p).second) {
      out.push_back(
          {DiagCode::kBadPlayerName, "", "duplicate player name '" + p + "'"});
    }
  }
  if (t.players.empty()) {
    out.push_back({DiagCode::kBadPlayerName, "", "no players declared"});
  }
  if (t.perspective < 0 ||
      t.perspective >= static_cast<int>(t.players.size())) {
    out.push_back({DiagCode::kBadPerspective, "",
                   "perspective index " + std::to_string(t.perspective) +
                       " out of range"});
  }
}

void CheckNode(const GameTree& t, const NodeId& id, const TreeNode& n,
               std::vector<Diagnostic>& out) {
  const size_t arity = t.players.size();
  if (n.kind == NodeKind::kUtility) {
    if (!n.edges.empty()) {
      out.push_back({DiagCode::kUtilityHasEdges, id,
                     "utility node '" + id + "' has outgoing edges"});
    }
    if (n.utility.values.size() != arity) {
      out.push_back({DiagCode::kUtilityArity, id,
                     "utility node '" + id + "' has " +
                         std::to_string(n.utility.values.size()) +
                         " components for " + std::to_string(arity) +
                         " players"});
    }
  } else if (n.edges.empty()) {
    out.push_back({DiagCode::kLeafNotUtility, id,
                   std::string(NodeKindName(n.kind)) + " node '" + id +
                       "' has no outgoing edges"});
  }
  if (n.kind == NodeKind::kDecision &&
      (n.owner < 0 || n.owner >= static_cast<int>(arity))) {
    out.push_back({DiagCode::kBadOwner, id,
                   "decision node '" + id + "' has invalid owner index " +
                       std::to_string(n.owner)});
  }
  if (n.var && t.VariableIndex(*n.var) < 0) {
    out.push_back({DiagCode::kUnknownVariable, id,
                   "node '" + id + "' names unknown variable '" + *n.var +
                       "'"});
  }

  std::set<std::string> labels;
  Rat sum;
  for (const TreeEdge& e : n.edges) {
    if (!labels.insert(e.label).second) {
      out.push_back({DiagCode::kDuplicateLabel, id,
                     "node '" + id + "' repeats edge label '" + e.label +
                         "'"});
    }
    if (t.nodes.find(e.to) == t.nodes.end()) {
      out.push_back({DiagCode::kDanglingEdge, id,
                     "edge '" + e.label + "' of node '" + id +
                         "' targets unknown node '" + e.to + "'"});
    }
    if (n.kind == NodeKind::kChance) {
      if (!e.prob) {
        out.push_back({DiagCode::kProbMissing, id,
                       "chance edge '" + e.label + "' of node '" + id +
                           "' has no probability"});
      } else {
        if (*e.prob < Rat(0) || *e.prob > Rat(1)) {
          out.push_back({DiagCode::kProbOutOfRange, id,
                         "edge '" + e.label + "' of node '" + id +
                             "' has probability " + e.prob->ToString()});
        }
        sum += *e.prob;
      }
    } else if (e.prob) {
      out.push_back({DiagCode::kProbUnexpected, id,
                     "non-chance edge '" + e.label + "' of node '" + id +
                         "' carries a probability"});
    }
    if (e.edge_utility && e.edge_utility->values.size() != arity) {
      out.push_back({DiagCode::kUtilityArity, id,
                     "edge '" + e.label + "' of node '" + id +
                         "' has a utility with " +
                         std::to_string(e.edge_utility->values.size()) +
                         " components for " + std::to_string(arity) +
                         " players"});
    }
  }
  if (n.kind == NodeKind::kChance && !n.edges.empty() && sum != Rat(1)) {
    out.push_back({DiagCode::kProbSum, id,
                   "probabilities of node '" + id + "' sum to " +
                       sum.ToString() + ", expected 1"});
  }
}

// Walks from the root checking tree-ness: every node reached once, targets
// resolve, no node shared between two parents. Cycles surface as repeat
// visits or as unreachable components.
void CheckShape(const GameTree& t, std::vector<Diagnostic>& out) {
  if (t.nodes.find(t.root) == t.nodes.end()) {
    out.push_back({DiagCode::kUnknownRoot, t.root,
                   "root '" + t.root + "' is not a declared node"});
    return;
  }
  std::set<NodeId> visited{t.root};
  std::deque<NodeId> queue{t.root};
  while (!queue.empty()) {
    NodeId id = queue.front();
    queue.pop_front();
    for (const TreeEdge& e : t.nodes.at(id).edges) {
      auto it = t.nodes.find(e.to);
      if (it == t.nodes.end()) continue;  // reported by CheckNode
      if (e.to == t.root || !visited.insert(e.to).second) {
        out.push_back({DiagCode::kMultipleParents, e.to,
                       "node '" + e.to + "' is reached by more than one edge"});
        continue;
      }
      queue.push_back(e.to);
    }
  }
  for (const auto& [id, node] : t.nodes) {
    if (visited.find(id) == visited.end()) {
      out.push_back({DiagCode::kUnreachable, id,
                     "node '" + id + "' is not reachable from the root"});
    }
  }
}

void CheckVariableOrder(const GameTree& t, std::vector<Diagnostic>& out) {
  if (t.nodes.find(t.root) == t.nodes.end()) return;
  // (node, last variable index seen on the path above it)
  std::deque<std::pair<NodeId, int>> queue{{t.root, -1}};
  std::set<NodeId> visited{t.root};
  while (!queue.empty()) {
    auto [id, last] = queue.front();
    queue.pop_front();
    const TreeNode& n = t.nodes.at(id);
    int here = last;
    if (n.var) {
      int idx = t.VariableIndex(*n.var);
      if (idx >= 0) {
        if (idx <= last) {
          out.push_back({DiagCode::kVariableOrder, id,
                         "variable '" + *n.var + "' of node '" + id +
                             "' does not increase along its path"});
        }
        here = idx;
      }
    }
    for (const TreeEdge& e : n.edges) {
      if (t.nodes.find(e.to) != t.nodes.end() && visited.insert(e.to).second) {
        queue.push_back({e.to, here});
      }
    }
  }
}

}  // namespace

std::vector<Diagnostic> Validate(const GameTree& t) {
  std::vector<Diagnostic> out;
  CheckPlayers(t, out);
  for (const auto& [id, node] : t.nodes) CheckNode(t, id, node, out);
  CheckShape(t, out);
  CheckVariableOrder(t, out);
  return out;
}

GameTree PushEdgeUtilitiesToLeaves(const GameTree& t) {
  GameTree out = t;
  UtilityVector zero(std::vector<Rat>(t.players.size(), Rat(0)));
  std::deque<std::pair<NodeId, UtilityVector>> queue{{out.root, zero}};
  while (!queue.empty()) {
    auto [id, acc] = queue.front();
    queue.pop_front();
    TreeNode& n = out.nodes.at(id);
    if (n.kind == NodeKind::kUtility) {
      n.utility += acc;
      continue;
    }
    for (TreeEdge& e : n.edges) {
      UtilityVector next = acc;
      if (e.edge_utility) {
        next += *e.edge_utility;
        e.edge_utility.reset();
      }
      queue.push_back({e.to, std::move(next)});
    }
  }
  return out;
}

}  // namespace ceg
