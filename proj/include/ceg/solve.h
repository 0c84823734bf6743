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

#ifndef CEG_SOLVE_H_
#define CEG_SOLVE_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ceg/ceg.h"
#include "ceg/game.h"

namespace ceg {

struct DecisionChoice {
  std::vector<int> optimal;     // indices into the position's edge list
  std::vector<int> suboptimal;  // complement, kept for rendering
  int chosen = -1;              // first optimal edge in label order

  bool operator==(const DecisionChoice&) const = default;
};

// Result of backward utility-vector propagation over a CEG. Every position
// gets the full utility vector it guarantees when each decision owner picks
// an edge maximising their own component; ties break to the edge whose
// smallest label sorts first, which keeps solutions deterministic.
struct Solution {
  std::vector<std::string> order;  // canonical topological order used
  std::map<std::string, UtilityVector> value;
  std::map<std::string, DecisionChoice> decisions;

  bool operator==(const Solution&) const = default;
};

// Requires a leaf-utility CEG (push edge utilities down first).
Solution Propagate(const Ceg& g);

// Per-player view of the propagated decisions: for each decision position
// owned by the player, the canonical chosen label set and every optimal
// alternative.
struct StrategyEntry {
  std::vector<std::string> chosen;
  std::vector<std::vector<std::string>> optimal;

  bool operator==(const StrategyEntry&) const = default;
};

std::vector<std::map<std::string, StrategyEntry>> ExtractStrategy(const Ceg& g,
                                                                  const Solution& sol);

// Reference oracle: plain backward induction on the tree itself, same
// tie-break (lexicographically smallest optimal label). Leaf-utility only.
struct TreeDecision {
  std::string chosen;
  std::vector<std::string> optimal;  // sorted labels

  bool operator==(const TreeDecision&) const = default;
};

struct TreeSolution {
  std::map<NodeId, UtilityVector> value;
  std::map<NodeId, TreeDecision> decisions;
};

TreeSolution TreeRollback(const GameTree& t);

// Second oracle: exhaustive pure-policy enumeration. A tree policy fixes
// one label per decision vertex; a CEG policy one edge index per decision
// position. Throws GuardError when the policy space exceeds max_profiles.
using TreePolicy = std::map<NodeId, std::string>;
std::vector<std::pair<TreePolicy, UtilityVector>> EnumerateTreePolicies(
    const GameTree& t, uint64_t max_profiles = uint64_t{1} << 20);

using CegPolicy = std::map<std::string, int>;
std::vector<std::pair<CegPolicy, UtilityVector>> EnumerateCegPolicies(
    const Ceg& g, uint64_t max_profiles = uint64_t{1} << 20);

// Canonical JSON rendering of a solution over its CEG. Byte-deterministic.
std::string SolutionToJson(const Ceg& g, const Solution& sol);

}  // namespace ceg

#endif  // CEG_SOLVE_H_
