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

// The three Builder strategies:
//   matching  grow a good forest covering all but one vertex, then read a
//             monochromatic matching off it;
//   tree2     2 colors, spanning tree in at most 2n - 3 queries;
//   tree3     3 colors, tree on k(n) vertices in at most 5(n - 1) queries.
// Every arbitrary choice is the lowest index available.

#ifndef RAMSEY_BUILDERS_H_
#define RAMSEY_BUILDERS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/comp_extend.h"
#include "ramsey/detection.h"
#include "ramsey/forest.h"
#include "ramsey/game.h"
#include "ramsey/procedure.h"
#include "ramsey/tree_extend.h"

namespace ramsey {

// Component shapes (e(T), |chi(T)|) a matching-builder forest can contain:
// (1,1), (2,2), (3,3) and 4 <= k <= m <= 2k - 3.
bool AllowedForestShape(int m, int k);

struct MatchingReport {
  GoodForest forest;
  std::vector<TreeExtendExit> exits;
  int extensions = 0;
};

struct Tree2Report {
  int rounds = 0;
  Color color = kNoColor;
};

struct Tree3Report {
  std::vector<Vertex> star[3];
  CompTriple triples[3];
  SixCover cover;
  int witness = 0;
  std::int64_t star_queries = 0;
  std::int64_t comp_queries[3] = {0, 0, 0};
};

// Preconditions: all-matching targets, Classic, n >= the Ramsey number.
Procedure<WinCertificate> MatchingStrategy(
    const GameState& state, std::shared_ptr<MatchingReport> report = nullptr);

// Preconditions: t = 2, goal Tree(n) in both colors.
Procedure<WinCertificate> Tree2Strategy(
    const GameState& state, std::shared_ptr<Tree2Report> report = nullptr);

// Preconditions: t = 3, n >= 3, goal Tree(k(n)) in every color.
Procedure<WinCertificate> Tree3Strategy(
    const GameState& state, std::shared_ptr<Tree3Report> report = nullptr);

std::unique_ptr<BuilderStrategy> MakeMatchingBuilder(
    std::shared_ptr<MatchingReport> report = nullptr);
std::unique_ptr<BuilderStrategy> MakeTree2Builder(
    std::shared_ptr<Tree2Report> report = nullptr);
std::unique_ptr<BuilderStrategy> MakeTree3Builder(
    std::shared_ptr<Tree3Report> report = nullptr);

// "matching", "tree2" or "tree3". Throws PreconditionError otherwise.
std::unique_ptr<BuilderStrategy> MakeBuilder(std::string_view name);

// Throws PreconditionError when the named builder cannot play this game.
void CheckBuilderFits(std::string_view name, int n, int t,
                      const TargetSpec& targets, GameVariant variant);

// Proven query bound for the named builder on this board.
std::int64_t BuilderQueryBound(std::string_view name, int n, int t);

}  // namespace ramsey

#endif  // RAMSEY_BUILDERS_H_
