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

#include "ramsey/builders.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "ramsey/errors.h"
#include "ramsey/formulas.h"
#include "ramsey/graph.h"

namespace ramsey {

bool AllowedForestShape(int m, int k) {
  if (m == k && m >= 1 && m <= 3) return true;
  return k >= 4 && k <= m && m <= 2 * k - 3;
}

void CheckBuilderFits(std::string_view name, int n, int t,
                      const TargetSpec& targets, GameVariant variant) {
  if (targets.t() != t) {
    throw PreconditionError("targets list " + std::to_string(targets.t()) +
                            " goals for t = " + std::to_string(t));
  }
  if (name == "matching") {
    if (!targets.AllMatchings()) {
      throw PreconditionError("matching builder needs matching targets");
    }
    if (variant != GameVariant::kClassic) {
      throw PreconditionError("matching builder plays the classic game");
    }
    std::vector<int> rs;
    for (const Goal& g : targets.goals) rs.push_back(g.size);
    const int r = RamseyMatchingNumber(rs);
    if (n < r) {
      throw PreconditionError("matching builder needs n >= " +
                              std::to_string(r));
    }
    return;
  }
  if (name == "tree2") {
    if (t != 2) throw PreconditionError("tree2 builder requires t = 2");
    if (n < 2) throw PreconditionError("tree2 builder requires n >= 2");
    if (targets != TargetSpec::Uniform(Goal::Tree(n), 2)) {
      throw PreconditionError("tree2 builder needs a spanning-tree goal");
    }
    return;
  }
  if (name == "tree3") {
    if (t != 3) throw PreconditionError("tree3 builder requires t = 3");
    if (n < 3) throw PreconditionError("tree3 builder requires n >= 3");
    if (targets != TargetSpec::Uniform(Goal::Tree(KOf(n)), 3)) {
      throw PreconditionError("tree3 builder needs the goal Tree(k(n))");
    }
    return;
  }
  throw PreconditionError("unknown builder '" + std::string(name) + "'");
}

std::int64_t BuilderQueryBound(std::string_view name, int n, int t) {
  if (name == "matching") return MatchingQueryBudget(t, n);
  if (name == "tree2") return std::max<std::int64_t>(1, 2LL * n - 3);
  if (name == "tree3") return 5LL * (n - 1);
  throw PreconditionError("unknown builder '" + std::string(name) + "'");
}

namespace {

void RequireFits(std::string_view name, const GameState& state) {
  CheckBuilderFits(name, state.n(), state.t(), state.targets(),
                   state.variant());
}

// BFS spanning tree of the color-c component holding `member`, rooted at the
// component's lowest vertex.
std::vector<Edge> ComponentTree(const GameState& state, Color c,
                                Vertex member) {
  const std::vector<int> label = ColorComponents(state, c);
  Vertex root = member;
  for (Vertex v = 0; v < state.n(); ++v) {
    if (label[static_cast<std::size_t>(v)] ==
        label[static_cast<std::size_t>(member)]) {
      root = v;
      break;
    }
  }
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(state.n()));
  for (Vertex v = 0; v < state.n(); ++v) {
    adjacency[static_cast<std::size_t>(v)] = state.Neighbors(c, v);
    std::sort(adjacency[static_cast<std::size_t>(v)].begin(),
              adjacency[static_cast<std::size_t>(v)].end());
  }
  return BfsSpanningTree(adjacency, root);
}

std::vector<Vertex> Union(std::initializer_list<const std::vector<Vertex>*> sets) {
  std::vector<Vertex> out;
  for (const auto* s : sets) out.insert(out.end(), s->begin(), s->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  return both.empty();
}

}  // namespace

Procedure<WinCertificate> MatchingStrategy(
    const GameState& state, std::shared_ptr<MatchingReport> report) {
  RequireFits("matching", state);
  const int t = state.t();
  const std::int64_t start = state.queries();
  std::set<Vertex> uncovered;
  for (Vertex v = 0; v < state.n(); ++v) uncovered.insert(v);
  GoodForest forest;
  std::vector<TreeExtendExit> exits;

  while (uncovered.size() >= 2) {
    const Vertex x = *uncovered.begin();
    const Vertex y = *std::next(uncovered.begin());
    uncovered.erase(x);
    uncovered.erase(y);
    const Edge xy{x, y};
    const std::int64_t before = state.queries();
    const Color c = co_await Ask(state, xy, "pair");
    const std::int64_t pair_cost = state.queries() - before;

    const std::vector<Color> common = forest.CommonColors(t);
    if (std::find(common.begin(), common.end(), c) != common.end()) {
      forest.Add(ColoredTree({{xy, c}}), pair_cost);
    } else {
      std::size_t index = 0;
      while (forest.components()[index].tree.HasColor(c)) ++index;
      const ForestComponent old = forest.components()[index];
      TreeExtendResult ext = co_await TreeExtend(
          state, old.tree, xy, "extend:" + std::to_string(old.id));
      std::vector<Vertex> touched = old.tree.Vertices();
      touched.push_back(x);
      touched.push_back(y);
      for (Vertex v : touched) {
        if (!ext.tree.Contains(v)) uncovered.insert(v);
      }
      forest.Replace(index, ext.tree, old.queries + pair_cost + ext.queries);
      exits.push_back(ext.exit);
    }
    if (auto problem = forest.Problem(t)) {
      RAMSEY_INVARIANT(false, "matching builder forest: " + *problem);
    }
    for (const ForestComponent& comp : forest.components()) {
      const int m = comp.tree.EdgeCount();
      const int k = static_cast<int>(comp.tree.ColorSet().size());
      RAMSEY_INVARIANT(AllowedForestShape(m, k),
                       "component shape (" + std::to_string(m) + ", " +
                           std::to_string(k) + ") is not allowed");
    }
  }

  std::int64_t accounted = 0;
  for (const ForestComponent& comp : forest.components()) {
    accounted += comp.queries;
  }
  RAMSEY_INVARIANT(accounted == state.queries() - start,
                   "per-component query counts do not sum to the total");
  RAMSEY_INVARIANT(forest.VertexCount() >= state.n() - 1,
                   "final forest leaves two vertices uncovered");
  ForestMatching fm = GoodForestMatching(forest, state.targets());
  if (report) {
    report->forest = forest;
    report->exits = exits;
    report->extensions = static_cast<int>(exits.size());
  }
  co_return WinCertificate::Found(fm.color, std::move(fm.edges));
}

Procedure<WinCertificate> Tree2Strategy(const GameState& state,
                                        std::shared_ptr<Tree2Report> report) {
  RequireFits("tree2", state);
  const int n = state.n();
  for (Vertex u = 1; u < n; ++u) co_await Ask(state, Edge{0, u}, "star");

  std::vector<std::array<bool, 2>> in(static_cast<std::size_t>(n),
                                      std::array<bool, 2>{false, false});
  in[0] = {true, true};
  int sizes[2] = {1, 1};
  std::set<Vertex> only[2];
  for (Vertex u = 1; u < n; ++u) {
    const int side = state.ColorOf(Edge{0, u}) - 1;
    in[static_cast<std::size_t>(u)][static_cast<std::size_t>(side)] = true;
    ++sizes[side];
    only[side].insert(u);
  }
  int rounds = 0;
  while (!only[0].empty() && !only[1].empty()) {
    const Vertex x = *only[0].begin();
    const Vertex y = *only[1].begin();
    const int before = sizes[0] + sizes[1];
    const int side = co_await Ask(state, Edge::Of(x, y), "grow") - 1;
    // The endpoint not yet in C_side joins it and leaves the exclusive set.
    const Vertex joiner = side == 0 ? y : x;
    in[static_cast<std::size_t>(joiner)][static_cast<std::size_t>(side)] = true;
    ++sizes[side];
    only[1 - side].erase(joiner);
    ++rounds;
    RAMSEY_INVARIANT(sizes[0] + sizes[1] == before + 1,
                     "tree2 potential did not grow by exactly one");
  }
  const Color color = sizes[0] == n ? 1 : 2;
  RAMSEY_INVARIANT(sizes[color - 1] == n,
                   "tree2 ended without a spanning color class");
  if (report) {
    report->rounds = rounds;
    report->color = color;
  }
  co_return WinCertificate::Found(color, ComponentTree(state, color, 0));
}

Procedure<WinCertificate> Tree3Strategy(const GameState& state,
                                        std::shared_ptr<Tree3Report> report) {
  RequireFits("tree3", state);
  const int n = state.n();
  const int k = KOf(n);
  const std::int64_t start = state.queries();
  for (Vertex u = 1; u < n; ++u) co_await Ask(state, Edge{0, u}, "star");
  const std::int64_t after_star = state.queries();

  // star[c - 1] = N_c(0).
  std::array<std::vector<Vertex>, 3> star;
  for (Vertex u = 1; u < n; ++u) {
    star[static_cast<std::size_t>(state.ColorOf(Edge{0, u}) - 1)].push_back(u);
  }
  const auto& [r, g, b] = star;
  std::int64_t comp_queries[3];
  CompExtendResult rg = co_await CompExtend(state, r, g, {1, 2, 3}, "comp:rg");
  comp_queries[0] = rg.queries;
  CompExtendResult gb = co_await CompExtend(state, g, b, {2, 3, 1}, "comp:gb");
  comp_queries[1] = gb.queries;
  CompExtendResult br = co_await CompExtend(state, b, r, {3, 1, 2}, "comp:br");
  comp_queries[2] = br.queries;

  // Per color: (X1, X2, X3) = (own first slot, own second slot, third slot).
  const std::vector<Vertex> hub{0};
  const std::array<std::array<const std::vector<Vertex>*, 3>, 3> parts{{
      {&rg.triple.x1, &br.triple.x2, &gb.triple.x3},
      {&gb.triple.x1, &rg.triple.x2, &br.triple.x3},
      {&br.triple.x1, &gb.triple.x2, &rg.triple.x3},
  }};
  SixCover cover;
  for (int c = 0; c < 3; ++c) {
    const auto& p = parts[static_cast<std::size_t>(c)];
    std::vector<Vertex> all = Union({p[0], p[1], p[2], &hub});
    auto& first = cover.sets[static_cast<std::size_t>(2 * c)];
    auto& second = cover.sets[static_cast<std::size_t>(2 * c + 1)];
    if (InOneComponent(state, c + 1, all)) {
      first = std::move(all);
      second.clear();
    } else {
      first = Union({p[0], p[1], &hub});
      second = *p[2];
    }
    RAMSEY_INVARIANT(InOneComponent(state, c + 1, first) &&
                         InOneComponent(state, c + 1, second),
                     "starred set of color " + std::to_string(c + 1) +
                         " is not connected");
    RAMSEY_INVARIANT(Disjoint(first, second),
                     "starred sets of color " + std::to_string(c + 1) +
                         " intersect");
  }
  RAMSEY_INVARIANT(CheckSixCoverHypotheses(cover, n) == SixCoverFailure::kNone,
                   "starred sets violate the six-cover hypotheses");
  const int witness = SixCoverWitness(cover, n);
  const auto& set = cover.sets[static_cast<std::size_t>(witness - 1)];
  const Color color = (witness + 1) / 2;
  RAMSEY_INVARIANT(static_cast<int>(set.size()) >= k,
                   "six-cover witness is smaller than k(n)");
  RAMSEY_INVARIANT(state.queries() - start <= 5LL * (n - 1),
                   "tree3 exceeded 5(n - 1) queries");
  if (report) {
    for (int c = 0; c < 3; ++c) {
      report->star[c] = star[static_cast<std::size_t>(c)];
    }
    report->triples[0] = rg.triple;
    report->triples[1] = gb.triple;
    report->triples[2] = br.triple;
    report->cover = cover;
    report->witness = witness;
    report->star_queries = after_star - start;
    for (int i = 0; i < 3; ++i) report->comp_queries[i] = comp_queries[i];
  }
  co_return WinCertificate::Found(color,
                                  ComponentTree(state, color, set.front()));
}

std::unique_ptr<BuilderStrategy> MakeMatchingBuilder(
    std::shared_ptr<MatchingReport> report) {
  return std::make_unique<ProcedureBuilder>(
      "matching", [report](const GameState& s) {
        return MatchingStrategy(s, report);
      });
}

std::unique_ptr<BuilderStrategy> MakeTree2Builder(
    std::shared_ptr<Tree2Report> report) {
  return std::make_unique<ProcedureBuilder>(
      "tree2",
      [report](const GameState& s) { return Tree2Strategy(s, report); });
}

std::unique_ptr<BuilderStrategy> MakeTree3Builder(
    std::shared_ptr<Tree3Report> report) {
  return std::make_unique<ProcedureBuilder>(
      "tree3",
      [report](const GameState& s) { return Tree3Strategy(s, report); });
}

std::unique_ptr<BuilderStrategy> MakeBuilder(std::string_view name) {
  if (name == "matching") return MakeMatchingBuilder();
  if (name == "tree2") return MakeTree2Builder();
  if (name == "tree3") return MakeTree3Builder();
  throw PreconditionError("unknown builder '" + std::string(name) + "'");
}

}  // namespace ramsey
