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

#ifndef CEG_GAME_H_
#define CEG_GAME_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ceg/rational.h"

namespace ceg {

using NodeId = std::string;

enum class NodeKind { kDecision, kChance, kUtility };

std::string_view NodeKindName(NodeKind kind);

// One exact payoff per player, in player-list order.
struct UtilityVector {
  std::vector<Rat> values;

  UtilityVector() = default;
  explicit UtilityVector(std::vector<Rat> v) : values(std::move(v)) {}

  UtilityVector& operator+=(const UtilityVector& o);
  friend UtilityVector operator+(UtilityVector a, const UtilityVector& b) {
    return a += b;
  }
  UtilityVector Scaled(const Rat& f) const;

  // "(10, 0)" style rendering used in signatures and DOT labels.
  std::string ToString() const;

  bool operator==(const UtilityVector&) const = default;
};

struct TreeEdge {
  std::string label;
  NodeId to;
  std::optional<Rat> prob;                    // chance edges only
  std::optional<UtilityVector> edge_utility;  // decomposed-utility documents

  bool operator==(const TreeEdge&) const = default;
};

struct TreeNode {
  NodeKind kind = NodeKind::kChance;
  int owner = -1;                  // decision nodes: index into players
  UtilityVector utility;           // utility nodes
  std::optional<std::string> var;  // variable this node resolves
  std::vector<TreeEdge> edges;

  bool operator==(const TreeNode&) const = default;
};

// Rooted game tree over exact rationals. Parsing only checks document
// schema; call Validate before trusting the structural invariants.
struct GameTree {
  std::vector<std::string> players;
  int perspective = 0;                 // index into players
  std::vector<std::string> variables;  // empty means unannotated
  NodeId root;
  std::map<NodeId, TreeNode> nodes;

  int PlayerIndex(std::string_view name) const;
  int VariableIndex(std::string_view name) const;  // -1 if absent

  bool operator==(const GameTree&) const = default;
};

enum class DiagCode {
  kUnknownRoot,
  kDanglingEdge,
  kMultipleParents,
  kUnreachable,
  kLeafNotUtility,
  kUtilityHasEdges,
  kDuplicateLabel,
  kProbMissing,
  kProbUnexpected,
  kProbOutOfRange,
  kProbSum,
  kUtilityArity,
  kBadOwner,
  kBadPerspective,
  kBadPlayerName,
  kUnknownVariable,
  kVariableOrder,
};

struct Diagnostic {
  DiagCode code;
  NodeId node;  // empty for document-level findings
  std::string message;
};

// Structural validation; returns every violation found rather than failing
// fast. An empty result means the tree satisfies all GameTree invariants.
std::vector<Diagnostic> Validate(const GameTree& t);

// Adds each root-to-leaf path's accumulated edge utilities into the leaf
// vectors and strips all edge utilities. Expected utility of every policy
// is unchanged. Requires a valid tree.
GameTree PushEdgeUtilitiesToLeaves(const GameTree& t);

}  // namespace ceg

#endif  // CEG_GAME_H_
