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

#ifndef CEG_SIMPLIFY_H_
#define CEG_SIMPLIFY_H_

#include <string>
#include <utility>
#include <vector>

#include "ceg/ceg.h"

namespace ceg {

// One auditable rewrite. A barren step deletes one position (positions has
// a single entry) and reroutes its incoming edges into `into`, which also
// becomes the root when the root itself was deleted. A coalesce step merges
// an equivalence class of positions into its smallest key.
struct TraceStep {
  enum class Kind { kBarren, kCoalesce };

  Kind kind = Kind::kBarren;
  std::vector<std::string> positions;
  std::string into;

  bool operator==(const TraceStep&) const = default;
};

using SimplificationTrace = std::vector<TraceStep>;

// Collapses indistinguishable parallel edges node by node (same target,
// same attached utility): label sets union, chance probabilities add.
// Every other simplification entry point starts from this normal form.
Ceg NormalizeParallelEdges(const Ceg& g);

// A position is barren when every outgoing edge leads to one position: it
// resolves nothing, so the graph without it encodes the same model. All
// simplification entry points require leaf-only utilities and throw
// std::invalid_argument otherwise.
std::vector<std::string> FindBarren(const Ceg& g);

// Deletes one barren position. Incoming edges are rerouted to its unique
// target; a parent's parallel edges to one target then merge (label sets
// union, chance probabilities add). Deleting a barren root promotes the
// target to root.
Ceg DeleteBarren(const Ceg& g, const std::string& key);

// Merges payoff-equivalent positions into the smallest key of the set and
// reroutes edges accordingly. Callers are responsible for only merging
// positions with indistinguishable futures.
Ceg MergePositions(const Ceg& g, const std::vector<std::string>& keys);

// Coarsest bisimulation pass: finds every class of mutually equivalent
// positions in one bottom-up sweep and merges each, smallest survivor key
// first. Returns the graph and the steps taken.
std::pair<Ceg, SimplificationTrace> CoalescePositions(const Ceg& g);

// Alternates barren sweeps (reverse-topological, so cascades resolve
// within a sweep) with coalescence until neither applies. The result is
// the parsimonious form; the trace replays to the identical graph.
std::pair<Ceg, SimplificationTrace> Parsimonize(const Ceg& g);

// Re-applies a recorded trace step by step. Throws std::invalid_argument
// if a step does not apply (wrong positions, not barren, missing keys).
Ceg ReplayTrace(const Ceg& g, const SimplificationTrace& trace);

std::string TraceToJson(const SimplificationTrace& trace);

// CLI document: the simplified graph, optionally bundled with its trace.
std::string SimplifyReportToJson(const Ceg& g, const SimplificationTrace& trace,
                                 bool include_trace);

}  // namespace ceg

#endif  // CEG_SIMPLIFY_H_
