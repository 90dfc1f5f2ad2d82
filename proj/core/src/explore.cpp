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

#include "ramsey/explore.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "ramsey/builders.h"
#include "ramsey/errors.h"
#include "ramsey/procedure.h"

namespace ramsey {

std::int64_t ForEachReplySequence(
    int t, const std::function<void(ScriptedPainter&)>& play,
    std::int64_t max_paths) {
  std::vector<Color> script;
  std::int64_t paths = 0;
  for (;;) {
    if (paths == max_paths) {
      throw IntractableError("reply tree has more than " +
                             std::to_string(max_paths) + " paths");
    }
    ScriptedPainter painter(script);
    play(painter);
    ++paths;
    std::vector<Color> given = painter.given();
    while (!given.empty() && given.back() >= t) given.pop_back();
    if (given.empty()) return paths;
    ++given.back();
    script = std::move(given);
  }
}

ReplyTreeSummary ExploreBuilder(
    std::string_view builder, int n, int t, const TargetSpec& targets,
    GameVariant variant,
    const std::function<void(const GameOutcome&, const GameState&)>& on_leaf,
    std::int64_t max_paths) {
  CheckBuilderFits(builder, n, t, targets, variant);
  ReplyTreeSummary summary;
  summary.paths = ForEachReplySequence(
      t,
      [&](ScriptedPainter& painter) {
        GameState state = NewGame(n, t, targets, variant);
        auto b = MakeBuilder(builder);
        GameOutcome outcome = RunGame(*b, painter, state);
        summary.min_queries = std::min(summary.min_queries, state.queries());
        summary.max_queries = std::max(summary.max_queries, state.queries());
        if (on_leaf) on_leaf(outcome, state);
      },
      max_paths);
  return summary;
}

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency AdjacencyOf(int vertices, const std::vector<Edge>& edges) {
  Adjacency adj(static_cast<std::size_t>(vertices));
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

std::string RootedCode(const Adjacency& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[static_cast<std::size_t>(v)]) {
    if (w != parent) kids.push_back(RootedCode(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// Smallest rooted code over all roots.
std::string FreeCode(int vertices, const std::vector<Edge>& edges) {
  const Adjacency adj = AdjacencyOf(vertices, edges);
  std::string best;
  for (Vertex r = 0; r < vertices; ++r) {
    std::string code = RootedCode(adj, r, -1);
    if (r == 0 || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<std::vector<Edge>> FreeTrees(int vertices) {
  if (vertices < 1) throw PreconditionError("trees need a vertex");
  std::vector<std::vector<Edge>> level{{}};
  for (int size = 2; size <= vertices; ++size) {
    std::set<std::string> seen;
    std::vector<std::vector<Edge>> next;
    for (const auto& tree : level) {
      for (Vertex v = 0; v < size - 1; ++v) {
        std::vector<Edge> grown = tree;
        grown.push_back(Edge{v, size - 1});
        if (seen.insert(FreeCode(size, grown)).second) {
          next.push_back(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<std::vector<Color>> ProperColorings(const std::vector<Edge>& tree,
                                                int colors) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> current(tree.size(), kNoColor);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == tree.size()) {
      out.push_back(current);
      return;
    }
    for (Color c = 1; c <= colors; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = !(current[j] == c && tree[j].SharesVertexWith(tree[i]));
      }
      if (!ok) continue;
      current[i] = c;
      fill(i + 1);
    }
    current[i] = kNoColor;
  };
  fill(0);
  return out;
}

std::vector<std::vector<Color>> SampleProperColorings(
    const std::vector<Edge>& tree, int colors, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::vector<Color>> seen;
  std::vector<std::vector<Color>> out;
  const std::int64_t max_attempts = 50LL * count + 100;
  for (std::int64_t attempt = 0;
       attempt < max_attempts && static_cast<int>(out.size()) < count;
       ++attempt) {
    std::vector<Color> coloring(tree.size(), kNoColor);
    bool ok = true;
    for (std::size_t i = 0; i < tree.size() && ok; ++i) {
      std::vector<Color> free;
      for (Color c = 1; c <= colors; ++c) {
        bool clash = false;
        for (std::size_t j = 0; j < i && !clash; ++j) {
          clash = coloring[j] == c && tree[j].SharesVertexWith(tree[i]);
        }
        if (!clash) free.push_back(c);
      }
      if (free.empty()) {
        ok = false;
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
        coloring[i] = free[pick(rng)];
      }
    }
    if (ok && seen.insert(coloring).second) out.push_back(std::move(coloring));
  }
  return out;
}

std::int64_t ExploreTreeExtend(
    const ColoredTree& tree, int t,
    const std::function<void(const TreeExtendCase&)>& visit) {
  const int m = tree.VertexCount();
  const int n = m + 2;
  const Edge xy{m, m + 1};
  const TargetSpec targets = TargetSpec::Uniform(Goal::Tree(n), t);
  std::int64_t runs = 0;
  for (Color c = 1; c <= t; ++c) {
    if (tree.HasColor(c)) continue;
    runs += ForEachReplySequence(t, [&](ScriptedPainter& painter) {
      GameState state(n, t, targets, GameVariant::kLocating);
      for (const ColoredEdge& ce : tree.edges()) state.Record(ce.edge, ce.color);
      state.Record(xy, c);
      TreeExtendCase out{tree, {xy, c}, {}};
      out.result = Drive(TreeExtend(state, tree, xy), state, painter);
      visit(out);
    });
  }
  return runs;
}

}  // namespace ramsey
