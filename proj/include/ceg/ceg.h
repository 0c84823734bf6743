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

#ifndef CEG_CEG_H_
#define CEG_CEG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ceg/game.h"

namespace ceg {

// Stage partition of a tree's decision and chance vertices. Two chance
// vertices share a stage iff they have the same (label, probability)
// outcome set; two decision vertices iff same owner and label set.
// Stages are numbered by the lexicographically smallest member id.
struct StagePartition {
  std::map<NodeId, int> stage_of;
  std::vector<std::vector<NodeId>> members;  // stage -> sorted vertex ids
  std::vector<std::string> signatures;
};

StagePartition ComputeStages(const GameTree& t);

// Coarsest position partition: vertices share a position iff their rooted
// subtrees are indistinguishable (kind, owner, labels, probabilities, any
// edge utilities, and recursively equivalent targets; utility leaves by
// exact vector equality). Computed bottom-up by canonical signatures.
// A position is keyed by the smallest member id.
struct PositionPartition {
  std::map<NodeId, std::string> position_of;
  std::map<std::string, std::vector<NodeId>> members;  // key -> sorted ids
};

PositionPartition ComputePositions(const GameTree& t);

// One edge of a chain event graph. `labels` starts out as a single action
// or outcome label; simplification may merge payoff-equivalent parallel
// edges, concatenating their sorted labels.
struct CegEdge {
  std::vector<std::string> labels;
  std::string to;  // position key
  std::optional<Rat> prob;
  std::optional<UtilityVector> edge_utility;

  bool operator==(const CegEdge&) const = default;
};

struct CegNode {
  NodeKind kind = NodeKind::kChance;
  int owner = -1;
  UtilityVector utility;
  std::vector<NodeId> members;  // tree vertices this position represents
  std::vector<CegEdge> edges;   // sorted by first label

  bool operator==(const CegNode&) const = default;
};

// Chain event graph: a rooted DAG of positions. Node keys are stable
// across simplification steps (a merged position takes the smallest key),
// which is what lets a simplification trace be replayed and audited.
struct Ceg {
  std::vector<std::string> players;
  int perspective = 0;
  std::string root;
  std::map<std::string, CegNode> nodes;

  bool operator==(const Ceg&) const = default;
};

// Collapses a tree onto its coarsest position partition. Each tree edge
// induces one CEG edge per (source position, label, target position).
Ceg BuildCeg(const GameTree& t);

// Canonical topological order: root first, every node before its children,
// all utility sinks in the final slots; ties resolved by position key.
// Throws std::logic_error if the graph has a cycle.
std::vector<std::string> CanonicalOrder(const Ceg& g);

// Stage partition of a CEG's non-utility positions, from their outgoing
// (labels, probability) signatures.
struct CegStagePartition {
  std::map<std::string, int> stage_of;
  std::vector<std::vector<std::string>> members;
};

CegStagePartition ComputeCegStages(const Ceg& g);

// Structure-only fingerprint (node keys and member lists ignored): equal
// for isomorphic graphs, used for fixpoint detection and the confluence
// checks. Minimal graphs with equal hashes and node counts are isomorphic.
uint64_t CanonicalHash(const Ceg& g);

bool HasEdgeUtilities(const Ceg& g);

// Canonical JSON rendering with positions renumbered "w1".."wn" along
// CanonicalOrder. Byte-deterministic.
std::string CegToJson(const Ceg& g);

}  // namespace ceg

#endif  // CEG_CEG_H_
