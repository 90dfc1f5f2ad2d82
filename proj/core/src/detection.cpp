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

#include "ramsey/detection.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "ramsey/errors.h"
#include "ramsey/formulas.h"

namespace ramsey {

SimpleGraph ColorGraph(const GameState& state, Color c) {
  return SimpleGraph{state.n(), state.EdgesOfColor(c)};
}

std::vector<int> ColorComponents(const GameState& state, Color c) {
  DisjointSets sets(state.n());
  for (Vertex v = 0; v < state.n(); ++v) {
    for (Vertex w : state.Neighbors(c, v)) {
      if (w > v) sets.Unite(v, w);
    }
  }
  std::vector<int> label(static_cast<std::size_t>(state.n()));
  for (Vertex v = 0; v < state.n(); ++v) {
    label[static_cast<std::size_t>(v)] = sets.Find(v);
  }
  return label;
}

std::vector<Vertex> LargestMonoComponent(const GameState& state, Color c) {
  const std::vector<int> label = ColorComponents(state, c);
  // label -> (size, min vertex); only vertices touching color c.
  std::map<int, std::pair<int, Vertex>> stats;
  for (Vertex v = 0; v < state.n(); ++v) {
    if (state.Neighbors(c, v).empty()) continue;
    auto [it, inserted] =
        stats.try_emplace(label[static_cast<std::size_t>(v)], 0, v);
    it->second.first += 1;
  }
  if (stats.empty()) return {};
  int best_label = -1;
  std::pair<int, Vertex> best{-1, 0};
  for (const auto& [lab, st] : stats) {
    if (st.first > best.first ||
        (st.first == best.first && st.second < best.second)) {
      best = st;
      best_label = lab;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < state.n(); ++v) {
    if (label[static_cast<std::size_t>(v)] == best_label &&
        !state.Neighbors(c, v).empty()) {
      out.push_back(v);
    }
  }
  return out;
}

std::optional<std::vector<Edge>> FindMonoTarget(const GameState& state,
                                                Color c, const Goal& goal) {
  if (goal.kind == GoalKind::kMatching) {
    std::vector<Edge> m = MaxMatching(ColorGraph(state, c));
    if (static_cast<int>(m.size()) >= goal.size) return m;
    return std::nullopt;
  }
  const std::vector<Vertex> comp = LargestMonoComponent(state, c);
  if (comp.empty() || static_cast<int>(comp.size()) < goal.size) {
    return std::nullopt;
  }
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(state.n()));
  for (Vertex v : comp) adj[static_cast<std::size_t>(v)] = state.Neighbors(c, v);
  return BfsSpanningTree(adj, comp.front());
}

bool RealizesGoal(const std::vector<Edge>& edges, const Goal& goal) {
  if (goal.kind == GoalKind::kMatching) {
    return IsMatching(edges) && static_cast<int>(edges.size()) >= goal.size;
  }
  return IsTree(edges) && static_cast<int>(edges.size()) + 1 >= goal.size;
}

SixCoverFailure CheckSixCoverHypotheses(const SixCover& cover, int n) {
  // A pair {u, v} is covered iff the set-membership masks of u and v meet,
  // so it suffices to compare the 64 possible masks.
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < cover.sets.size(); ++i) {
    for (Vertex v : cover.sets[i]) {
      if (v < 0 || v >= n) {
        throw PreconditionError("six-cover vertex " + std::to_string(v) +
                                " outside [0, n)");
      }
      mask[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1u << i);
    }
  }
  std::array<std::int64_t, 64> count{};
  for (std::uint8_t m : mask) ++count[m];
  for (unsigned a = 0; a < 64; ++a) {
    if (count[a] == 0) continue;
    for (unsigned b = a; b < 64; ++b) {
      if (count[b] == 0 || (a & b) != 0) continue;
      if (a != b || count[a] >= 2) return SixCoverFailure::kCoverage;
    }
  }
  for (std::uint8_t m : mask) {
    if ((m & 0b11) == 0b11) return SixCoverFailure::kDisjointness;
  }
  return SixCoverFailure::kNone;
}

int SixCoverWitness(const SixCover& cover, int n) {
  const int k = KOf(n);
  switch (CheckSixCoverHypotheses(cover, n)) {
    case SixCoverFailure::kCoverage:
      throw PreconditionError("six-cover hypothesis failed: some pair of "
                              "vertices lies in no set");
    case SixCoverFailure::kDisjointness:
      throw PreconditionError("six-cover hypothesis failed: U1 and U2 "
                              "intersect");
    case SixCoverFailure::kNone:
      break;
  }
  for (int i = 0; i < 6; ++i) {
    std::vector<Vertex> s = cover.sets[static_cast<std::size_t>(i)];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (static_cast<int>(s.size()) >= k) return i + 1;
  }
  RAMSEY_INVARIANT(false, "six cover of K_" + std::to_string(n) +
                              " with every set smaller than k(n)");
  return 0;
}

}  // namespace ramsey
