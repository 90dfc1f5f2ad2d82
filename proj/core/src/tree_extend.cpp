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

#include "ramsey/tree_extend.h"

#include <algorithm>
#include <map>

#include "ramsey/errors.h"
#include "ramsey/formulas.h"

namespace ramsey {

std::string_view ToString(TreeExtendExit exit) {
  switch (exit) {
    case TreeExtendExit::kJoin:
      return "join";
    case TreeExtendExit::kAppend:
      return "append";
    case TreeExtendExit::kSwapLeaf:
      return "swap-leaf";
    case TreeExtendExit::kSwapCached:
      return "swap-cached";
  }
  return "?";
}

int TreeExtendQueryBound(int diameter) {
  return 1 + (diameter >= 2 ? FloorLg(diameter - 1) : 0);
}

std::optional<std::string> TreeExtendProblem(const ColoredTree& before,
                                             const ColoredEdge& xy,
                                             const ColoredTree& after) {
  std::vector<Vertex> allowed = before.Vertices();
  allowed.push_back(xy.edge.u);
  allowed.push_back(xy.edge.v);
  for (Vertex v : after.Vertices()) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      return "vertex " + std::to_string(v) + " outside V(T) + {x, y}";
    }
  }
  const int m = before.EdgeCount();
  if (after.EdgeCount() != m + 1 && after.EdgeCount() != m + 2) {
    return "T* has " + std::to_string(after.EdgeCount()) + " edges, T had " +
           std::to_string(m);
  }
  for (Color c : before.ColorSet()) {
    if (!after.HasColor(c)) return "T* lost color " + std::to_string(c);
  }
  if (!after.HasColor(xy.color)) return "T* lacks the color of xy";
  if (!after.IsProperlyColored()) return "T* is not properly edge-colored";
  return std::nullopt;
}

namespace {

void CheckHypotheses(const GameState& state, const ColoredTree& tree,
                     const Edge& xy) {
  if (tree.empty()) throw PreconditionError("TreeExtend needs e(T) >= 1");
  for (const ColoredEdge& ce : tree.edges()) {
    if (state.ColorOf(ce.edge) != ce.color) {
      throw PreconditionError("tree edge " + ToString(ce.edge) +
                              " is not exposed in its stated color");
    }
  }
  if (!tree.IsProperlyColored()) {
    throw PreconditionError("TreeExtend needs a properly colored tree");
  }
  const Color c = state.ColorOf(xy);
  if (c == kNoColor) throw PreconditionError("xy must be exposed");
  if (tree.Contains(xy.u) || tree.Contains(xy.v)) {
    throw PreconditionError("xy must be disjoint from T");
  }
  if (tree.HasColor(c)) {
    throw PreconditionError("the color of xy already appears in T");
  }
}

// T - removed + added, validated once as a whole.
ColoredTree Swapped(const ColoredTree& tree, const Edge& removed,
                    std::initializer_list<ColoredEdge> added) {
  std::vector<ColoredEdge> edges;
  for (const ColoredEdge& ce : tree.edges()) {
    if (ce.edge != removed) edges.push_back(ce);
  }
  edges.insert(edges.end(), added.begin(), added.end());
  return ColoredTree(std::move(edges));
}

}  // namespace

Procedure<TreeExtendResult> TreeExtend(const GameState& state, ColoredTree tree,
                                       Edge xy, std::string tag) {
  CheckHypotheses(state, tree, xy);
  const Color xy_color = state.ColorOf(xy);
  const ColoredEdge xy_edge{xy, xy_color};
  const std::int64_t start_queries = state.queries();

  const Vertex root = tree.Center();
  const std::map<Vertex, int> side = tree.Sides(root);
  auto eta = [&](Vertex v) { return side.at(v) == 0 ? xy.u : xy.v; };

  ColoredTree sub = tree;
  Vertex v = root;
  TreeExtendResult result;
  // Each pass shrinks T' by at least one vertex.
  const int max_iterations = tree.VertexCount();
  for (;;) {
    ++result.iterations;
    RAMSEY_INVARIANT(result.iterations <= max_iterations,
                     "TreeExtend did not terminate on " + ToString(tree));
    const Edge probe = Edge::Of(v, eta(v));
    const Color got = co_await Ask(state, probe, tag);
    const ColoredEdge probe_edge{probe, got};
    if (got == xy_color) {
      result.tree = tree.Plus(probe_edge);
      result.exit = TreeExtendExit::kJoin;
      break;
    }
    std::optional<Vertex> clash;
    for (const auto& [w, c] : tree.Incident(v)) {
      if (c == got) clash = w;
    }
    if (!clash) {
      result.tree = tree.Plus(probe_edge).Plus(xy_edge);
      result.exit = TreeExtendExit::kAppend;
      break;
    }
    const Vertex w = *clash;
    RAMSEY_INVARIANT(sub.HasEdge(Edge::Of(v, w)),
                     "clashing edge " + ToString(Edge::Of(v, w)) +
                         " is not in the current subtree");
    if (tree.IsLeaf(w)) {
      result.tree = Swapped(tree, Edge::Of(v, w), {probe_edge, xy_edge});
      result.exit = TreeExtendExit::kSwapLeaf;
      break;
    }
    if (sub.IsLeaf(w)) {
      const Edge cached = Edge::Of(w, eta(w));
      const Color cached_color = state.ColorOf(cached);
      RAMSEY_INVARIANT(cached_color == got,
                       "edge " + ToString(cached) +
                           " should have been exposed in the clash color");
      result.tree = Swapped(tree, Edge::Of(v, w),
                            {probe_edge, xy_edge, {cached, cached_color}});
      result.exit = TreeExtendExit::kSwapCached;
      break;
    }
    sub = sub.Pruned(v, w);
    v = sub.Center();
  }
  result.queries = state.queries() - start_queries;
  if (auto problem = TreeExtendProblem(tree, xy_edge, result.tree)) {
    RAMSEY_INVARIANT(false, "TreeExtend postcondition: " + *problem);
  }
  co_return result;
}

}  // namespace ramsey
