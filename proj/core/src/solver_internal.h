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

#ifndef RAMSEY_SOLVER_INTERNAL_H_
#define RAMSEY_SOLVER_INTERNAL_H_

#include <cstdint>
#include <vector>

#include "ramsey/solver.h"

namespace ramsey::internal {

// Per-color adjacency bitmasks of a partial coloring; row 0 holds the
// unexposed edges.
struct MaskBoard {
  explicit MaskBoard(const SolverState& s);

  const std::uint64_t* Row(Color c) const {
    return masks.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(n);
  }
  void Add(Vertex u, Vertex v, Color c) {
    std::uint64_t* row = masks.data() + static_cast<std::size_t>(c * n);
    row[u] |= std::uint64_t{1} << v;
    row[v] |= std::uint64_t{1} << u;
  }
  void Remove(Vertex u, Vertex v, Color c) {
    std::uint64_t* row = masks.data() + static_cast<std::size_t>(c * n);
    row[u] &= ~(std::uint64_t{1} << v);
    row[v] &= ~(std::uint64_t{1} << u);
  }

  // Color c's exposed graph (plus every unexposed edge when asked) contains
  // the goal.
  bool GoalHolds(Color c, const Goal& goal, bool with_unexposed) const;

  int n;
  int t;
  std::vector<std::uint64_t> masks;
};

}  // namespace ramsey::internal

#endif  // RAMSEY_SOLVER_INTERNAL_H_
