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

// Exhaustive enumeration helpers: every Painter reply sequence against a
// deterministic Builder, free trees up to isomorphism, proper colorings.

#ifndef RAMSEY_EXPLORE_H_
#define RAMSEY_EXPLORE_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <string_view>
#include <vector>

#include "ramsey/forest.h"
#include "ramsey/game.h"
#include "ramsey/painters.h"
#include "ramsey/tree_extend.h"

namespace ramsey {

// Calls `play` once per reply sequence in [1, t]^*. `play` must replay the
// same deterministic game against the painter it is handed; the tree of
// sequences is walked depth-first in lexicographic order. Throws
// IntractableError once more than max_paths sequences are needed.
std::int64_t ForEachReplySequence(
    int t, const std::function<void(ScriptedPainter&)>& play,
    std::int64_t max_paths = std::numeric_limits<std::int64_t>::max());

struct ReplyTreeSummary {
  std::int64_t paths = 0;
  std::int64_t min_queries = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_queries = 0;
};

// Runs the named builder against every painter reply sequence. Each leaf
// game is verified by RunGame; `on_leaf` sees the outcome and final board.
ReplyTreeSummary ExploreBuilder(
    std::string_view builder, int n, int t, const TargetSpec& targets,
    GameVariant variant,
    const std::function<void(const GameOutcome&, const GameState&)>& on_leaf =
        {},
    std::int64_t max_paths = std::numeric_limits<std::int64_t>::max());

// One representative per isomorphism class of trees on `vertices` vertices,
// labelled 0..vertices-1.
std::vector<std::vector<Edge>> FreeTrees(int vertices);

// Every proper edge coloring of `tree` with colors in [1, colors], in
// lexicographic order of the color vector (aligned with `tree`).
std::vector<std::vector<Color>> ProperColorings(const std::vector<Edge>& tree,
                                                int colors);

// Up to `count` distinct proper colorings in [1, colors], drawn by a seeded
// randomized greedy fill. Fewer come back when fewer exist.
std::vector<std::vector<Color>> SampleProperColorings(
    const std::vector<Edge>& tree, int colors, int count, std::uint64_t seed);

struct TreeExtendCase {
  ColoredTree before;
  ColoredEdge xy;
  TreeExtendResult result;
};

// TreeExtend on `tree` (vertices 0..m-1) with x = m, y = m + 1 on a board of
// m + 2 vertices and t colors: every color of xy outside chi(T), every
// painter reply sequence. Returns the number of runs.
std::int64_t ExploreTreeExtend(
    const ColoredTree& tree, int t,
    const std::function<void(const TreeExtendCase&)>& visit);

}  // namespace ramsey

#endif  // RAMSEY_EXPLORE_H_
