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

#ifndef CEG_CI_H_
#define CEG_CI_H_

#include <optional>
#include <string>
#include <vector>

#include "ceg/ceg.h"
#include "ceg/game.h"

namespace ceg {

// Conditional independencies read off a variable-annotated tree. A cut at
// a variable's level asks which earlier variables its stage (or position)
// membership really depends on: the smallest such set R conditions the
// statement and everything else earlier is superfluous. Slicing by a
// context restricts the cut to vertices consistent with one earlier
// variable's value, which surfaces context-specific independencies.
enum class CiKind { kStageCut, kPositionCut, kUtilityCut, kParsimony };

struct CiContext {
  std::string var;
  std::string value;

  bool operator==(const CiContext&) const = default;
};

struct CiStatement {
  CiKind kind = CiKind::kStageCut;
  std::string cut;  // variable whose level was cut; empty for the utility cut
  bool utility_target = false;
  std::vector<std::string> targets;       // variables, document order, U excluded
  std::vector<std::string> superfluous;   // document order
  std::vector<std::string> conditioners;  // minimal R; parsimony puts the decision first
  std::optional<CiContext> context;
  bool alternative = false;  // one of several equally small conditioning sets

  // "A ⟂ B | C [ctx: var=value]", with U leading the target group.
  std::string Render() const;

  bool operator==(const CiStatement&) const = default;
};

// Stage cut at a chance variable: the distribution of v given its past
// depends only on R. One statement per minimal R (the first enumerated is
// unflagged, equally small others carry alternative = true); vacuous cuts
// (nothing superfluous) produce none.
std::vector<CiStatement> StageCutStatements(const GameTree& t, const StagePartition& stages,
                                            const std::string& v,
                                            const std::optional<CiContext>& ctx = std::nullopt);

// Position cut. For a chance variable the whole future from v's level on
// (v, the chance variables after it, and U) is independent of the
// superfluous past given R. For a decision variable the position already
// fixes everything the owner's choice can reach, which yields the
// parsimony reading U independent of the superfluous past given the
// decision itself plus R.
std::vector<CiStatement> PositionCutStatements(const GameTree& t,
                                               const PositionPartition& positions,
                                               const std::string& v,
                                               const std::optional<CiContext>& ctx = std::nullopt);

// Cut through the utility sinks: U depends on its past only through R.
std::vector<CiStatement> UtilityCutStatements(const GameTree& t,
                                              const PositionPartition& positions,
                                              const std::optional<CiContext>& ctx = std::nullopt);

// Every cut on the slice consistent with ctx. Throws std::invalid_argument
// when no vertex realises the context.
std::vector<CiStatement> ContextStatements(const GameTree& t, const CiContext& ctx);

// The full deterministic reading: unconditioned cuts at every level, the
// utility cut, and one slice per (variable, observed value) pair, with
// context statements subsumed by an unconditioned one dropped. Requires a
// fully annotated tree; throws GuardError when the variable count exceeds
// max_vars (the subset search is exponential in it).
std::vector<CiStatement> AllStatements(const GameTree& t, int max_vars = 12);

std::string StatementsToJson(const std::vector<CiStatement>& statements);

}  // namespace ceg

#endif  // CEG_CI_H_
