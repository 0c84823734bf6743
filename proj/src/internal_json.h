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

// Shared json helpers for the library's .cc files. Not installed.

#ifndef CEG_SRC_INTERNAL_JSON_H_
#define CEG_SRC_INTERNAL_JSON_H_

#include <json.hpp>

#include "ceg/ceg.h"

namespace ceg {
namespace internal {

// nlohmann::json with std::map object storage keeps keys sorted, so every
// dump of the same value is byte-identical.
using Json = nlohmann::json;

Json CegToJsonValue(const Ceg& g);

inline std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace internal
}  // namespace ceg

#endif  // CEG_SRC_INTERNAL_JSON_H_
