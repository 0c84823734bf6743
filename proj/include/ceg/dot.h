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

#ifndef CEG_DOT_H_
#define CEG_DOT_H_

#include <string>

#include "ceg/ceg.h"
#include "ceg/solve.h"

namespace ceg {

// Graphviz rendering of a CEG: decision positions as owner-labelled boxes,
// chance positions as ellipses (filled by stage when the stage has more
// than one position), utility positions as diamonds annotated with their
// vectors. With a solution, suboptimal decision edges are dashed. The
// output is byte-deterministic.
std::string ExportDot(const Ceg& g, const Solution* sol = nullptr);

}  // namespace ceg

#endif  // CEG_DOT_H_
