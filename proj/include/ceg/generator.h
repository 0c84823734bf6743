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

#ifndef CEG_GENERATOR_H_
#define CEG_GENERATOR_H_

#include <cstdint>

#include "ceg/game.h"

namespace ceg {

struct GenerateOptions {
  uint64_t seed = 0;
  // Forces a decision root and shifts subtree payoffs so every root action
  // rolls back to the same vector: a guaranteed exact tie.
  bool with_ties = false;
};

// Deterministic random game: 2..3 players, 2..5 variable levels of uniform
// kind, per-node branching 2..3, small-denominator exact chance weights,
// integer leaf payoffs in [-50, 50], occasional early terminations. The
// same options always produce the identical document.
GameTree GenerateGame(const GenerateOptions& opts);

}  // namespace ceg

#endif  // CEG_GENERATOR_H_
