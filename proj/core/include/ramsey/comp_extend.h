// Copyright 2026 The ramsey-online Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// CompExtend on a 3-colored board: grow V1 (inside one c1-component) and V2
// (inside one c2-component) against each other, collecting a c3-connected
// set X3 that covers what neither side could absorb.

#ifndef RAMSEY_COMP_EXTEND_H_
#define RAMSEY_COMP_EXTEND_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/game.h"
#include "ramsey/procedure.h"

namespace ramsey {

// Color roles (c1, c2, c3), a permutation of {1, 2, 3}.
using ColorRoles = std::array<Color, 3>;

struct CompTriple {
  // Sorted.
  std::vector<Vertex> x1;
  std::vector<Vertex> x2;
  std::vector<Vertex> x3;
};

struct CompExtendResult {
  CompTriple triple;
  std::int64_t queries = 0;
  int loops = 0;
};

// Throws PreconditionError unless t = 3, roles is a permutation of [3], V1
// lies in one c1-component and V2 in one c2-component. Postconditions and
// the loop bound 2|V1| + 2|V2| + 1 are asserted.
Procedure<CompExtendResult> CompExtend(const GameState& state,
                                       std::vector<Vertex> v1,
                                       std::vector<Vertex> v2,
                                       ColorRoles roles,
                                       std::string tag = "comp");

// First violated postcondition (1)-(4) on the current board, if any.
std::optional<std::string> CompTripleProblem(const GameState& state,
                                             const std::vector<Vertex>& v1,
                                             const std::vector<Vertex>& v2,
                                             ColorRoles roles,
                                             const CompTriple& triple);

// True iff every vertex of `set` lies in one component of the exposed
// color-c graph. Empty and single-vertex sets qualify.
bool InOneComponent(const GameState& state, Color c,
                    const std::vector<Vertex>& set);

}  // namespace ramsey

#endif  // RAMSEY_COMP_EXTEND_H_
