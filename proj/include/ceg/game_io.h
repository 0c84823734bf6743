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

#ifndef CEG_GAME_IO_H_
#define CEG_GAME_IO_H_

#include <string>
#include <string_view>

#include "ceg/errors.h"
#include "ceg/game.h"

namespace ceg {

// Parses a JSON game document. Numerals ("3", "-1/2", "0.25") are read
// exactly. Throws ParseError on malformed JSON (position-reported) or on
// schema violations; structural semantics are left to Validate so that a
// broken-but-well-formed document can still be loaded and diagnosed.
GameTree ParseGame(std::string_view text);

// Canonical JSON rendering: keys sorted, two-space indent, rationals in
// reduced "a/b" form, "variables" omitted when empty. Byte-deterministic;
// ParseGame(SerializeGame(t)) reproduces t exactly.
std::string SerializeGame(const GameTree& t);

}  // namespace ceg

#endif  // CEG_GAME_IO_H_
