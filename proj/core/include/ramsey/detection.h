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

// Monochromatic structure detection on exposed color classes, and the
// six-cover witness extractor used by the 3-color tree strategy.

#ifndef RAMSEY_DETECTION_H_
#define RAMSEY_DETECTION_H_

#include <array>
#include <optional>
#include <vector>

#include "ramsey/game.h"
#include "ramsey/graph.h"
#include "ramsey/types.h"

namespace ramsey {

// Maximum-cardinality matching of a general graph (Edmonds' blossom
// algorithm). Exact on every input.
std::vector<Edge> MaxMatching(const SimpleGraph& g);

// The exposed graph of color c.
SimpleGraph ColorGraph(const GameState& state, Color c);

// Connected-component label per vertex in the exposed graph of color c;
// vertices without a color-c edge get their own singleton label.
std::vector<int> ColorComponents(const GameState& state, Color c);

// Vertex set (sorted) of a largest connected component of the exposed
// color-c graph, ties broken by smallest minimum vertex. Only vertices that
// touch a color-c edge count; an empty color class yields {}.
std::vector<Vertex> LargestMonoComponent(const GameState& state, Color c);

// Edges realizing `goal` in the exposed color-c graph, or nullopt.
// Matching(r): a maximum matching, returned when its size is >= r.
// Tree(k): BFS spanning tree (from the lowest vertex) of the largest color-c
// component, returned when it spans >= k vertices.
std::optional<std::vector<Edge>> FindMonoTarget(const GameState& state,
                                                Color c, const Goal& goal);

// True iff `edges` realizes `goal`: pairwise disjoint and at least r of
// them, or a tree on at least k vertices.
bool RealizesGoal(const std::vector<Edge>& edges, const Goal& goal);

// Six vertex sets U_1..U_6 (stored 0-based).
struct SixCover {
  std::array<std::vector<Vertex>, 6> sets;
};

enum class SixCoverFailure { kNone, kCoverage, kDisjointness };

// Checks the hypotheses: every pair of [n] lies inside some set, and the
// first two sets are disjoint. Coverage is reported before disjointness.
SixCoverFailure CheckSixCoverHypotheses(const SixCover& cover, int n);

// Smallest 1-based index i with |U_i| >= k(n). Throws PreconditionError when
// a hypothesis fails and InvariantViolation if no set is large enough.
int SixCoverWitness(const SixCover& cover, int n);

}  // namespace ramsey

#endif  // RAMSEY_DETECTION_H_
