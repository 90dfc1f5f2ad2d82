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

// TreeExtend: absorb an exposed edge xy, disjoint from a properly colored
// tree T and of a color missing from T, into a properly colored tree T*.
//
// The proper 2-coloring eta of V(T) sends the class of center(T) to x.
// Queries go to v eta_v for a center v of a shrinking subtree T'; the four
// exits are
//   kJoin        T + v eta_v                       (eta_v edge has xy's color)
//   kAppend      T + v eta_v + xy                  (T + v eta_v still proper)
//   kSwapLeaf    T - vv' + v eta_v + xy            (v' a leaf of T)
//   kSwapCached  T - vv' + v eta_v + xy + v' eta_v' (v' a leaf of T' only)

#ifndef RAMSEY_TREE_EXTEND_H_
#define RAMSEY_TREE_EXTEND_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "ramsey/forest.h"
#include "ramsey/game.h"
#include "ramsey/procedure.h"

namespace ramsey {

enum class TreeExtendExit { kJoin, kAppend, kSwapLeaf, kSwapCached };

std::string_view ToString(TreeExtendExit exit);

struct TreeExtendResult {
  ColoredTree tree;
  TreeExtendExit exit = TreeExtendExit::kJoin;
  // Edges newly exposed by this call (xy itself not included).
  std::int64_t queries = 0;
  int iterations = 0;
};

// 1 + floor(lg(diam - 1)), with lg 0 = 0.
int TreeExtendQueryBound(int diameter);

// Throws PreconditionError when (T, xy) violate the hypotheses: T must be
// exposed, properly colored and non-empty; xy exposed, disjoint from T and
// of a color not in T. Postconditions are asserted.
Procedure<TreeExtendResult> TreeExtend(const GameState& state, ColoredTree tree,
                                       Edge xy, std::string tag = "extend");

// Checks items (1)-(4) of the extension guarantee for T* against (T, xy).
// Returns a description of the first failure.
std::optional<std::string> TreeExtendProblem(const ColoredTree& before,
                                             const ColoredEdge& xy,
                                             const ColoredTree& after);

}  // namespace ramsey

#endif  // RAMSEY_TREE_EXTEND_H_
