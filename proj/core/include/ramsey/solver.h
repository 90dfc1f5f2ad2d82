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

// Exact minimax values of the Builder-Painter game on small boards, and the
// completion-based win conditions of the locating and cornering variants.
//
// Two routes decide the completion conditions:
//  - kEnumeration walks every completion of the unexposed edges (with
//    pruning) and is the literal reading of the definitions;
//  - kMonotone uses that every goal here is monotone increasing, so "some
//    completion has a color-i copy" is decided by giving every unexposed
//    edge color i.
// Tests hold the two routes equal; the search uses kMonotone.

#ifndef RAMSEY_SOLVER_H_
#define RAMSEY_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/game.h"
#include "ramsey/types.h"

namespace ramsey {

// Partial coloring of K_n, one slot per edge in lexicographic order;
// kNoColor marks an unexposed edge. Boards are limited to n <= 64.
struct SolverState {
  int n = 0;
  int t = 0;
  std::vector<std::uint8_t> colors;

  static SolverState Empty(int n, int t);
  static SolverState FromGame(const GameState& state);

  std::int64_t queries() const;
  std::int64_t unexposed() const {
    return static_cast<std::int64_t>(colors.size()) - queries();
  }
  Color At(const Edge& e) const;
  void Set(const Edge& e, Color c);
};

// Lexicographic index of e among the edges of K_n.
int EdgeIndex(int n, const Edge& e);
// All edges of K_n in lexicographic order.
std::vector<Edge> AllEdges(int n);

enum class WinCheckRoute { kEnumeration, kMonotone };

// c absent:  want=true  -> some completion contains some goal in its color;
//            want=false -> no completion contains any goal.
// c present: want=false -> some valid completion lacks the color-c goal;
//            want=true  -> some completion contains the color-c goal.
// Enumerates completions; throws IntractableError when more than
// `threshold` edges are unexposed.
bool HasCompletionWithTarget(const SolverState& s, const TargetSpec& targets,
                             std::optional<Color> c, bool want,
                             int threshold = 25);

// Locating condition 2: no completion contains any goal in its color.
bool ExclusionHolds(const SolverState& s, const TargetSpec& targets,
                    WinCheckRoute route, int threshold = 25);

// Every valid completion contains the color-c goal (vacuously true when no
// valid completion exists).
bool CorneredHolds(const SolverState& s, const TargetSpec& targets, Color c,
                   WinCheckRoute route, int threshold = 25);

// Classic: an exposed copy. Locating: an exposed copy, else Exclusion when no
// completion holds any goal. Cornering: CorneredColor(c) for the smallest c
// such that every valid completion holds the color-c goal; when no valid
// completion exists this is vacuous and c = 1.
std::optional<WinCertificate> WinCheck(
    const SolverState& s, const TargetSpec& targets, GameVariant variant,
    WinCheckRoute route = WinCheckRoute::kMonotone, int threshold = 25);

struct SolverOptions {
  // Memoize on a key canonical under vertex relabeling.
  bool canonicalize = false;
  // Refuse when C(n,2) * lg t exceeds this.
  double max_log2_states = 30.0;
  WinCheckRoute route = WinCheckRoute::kMonotone;
};

struct SolverResult {
  int value = 0;
  // Absent when the empty board is already won.
  std::optional<Edge> optimal_first_move;
  std::int64_t nodes_explored = 0;
  std::int64_t cache_hits = 0;
};

// Least l such that Builder can force a win within l queries. Classic
// requires n >= the (known) Ramsey number of the targets; intractable
// instances throw IntractableError with a size estimate.
SolverResult SolveValue(int n, int t, const TargetSpec& targets,
                        GameVariant variant, const SolverOptions& options = {});

// Memo key for a partial coloring. With canonicalize, states equal up to a
// vertex permutation share a key.
std::uint64_t CanonicalKey(const SolverState& s, bool canonicalize);

}  // namespace ramsey

#endif  // RAMSEY_SOLVER_H_
