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

#include "ramsey/forest.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ramsey/errors.h"
#include "ramsey/graph.h"

namespace ramsey {
namespace {

// Eccentricity of every vertex, in sorted vertex order.
std::vector<int> Eccentricities(const std::vector<ColoredEdge>& edges,
                                const std::vector<Vertex>& verts) {
  const auto index = [&verts](Vertex v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin());
  };
  std::vector<std::vector<int>> adj(verts.size());
  for (const ColoredEdge& ce : edges) {
    const int a = index(ce.edge.u);
    const int b = index(ce.edge.v);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> ecc(verts.size(), 0);
  std::vector<int> dist(verts.size());
  std::vector<int> queue(verts.size());
  for (std::size_t s = 0; s < verts.size(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = static_cast<int>(s);
    while (head < tail) {
      const int v = queue[head++];
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] >= 0) continue;
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        ecc[s] = dist[static_cast<std::size_t>(w)];
        queue[tail++] = w;
      }
    }
  }
  return ecc;
}

}  // namespace

ColoredTree::ColoredTree(std::vector<ColoredEdge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (edges_.empty()) return;
  std::vector<Edge> plain;
  plain.reserve(edges_.size());
  for (const ColoredEdge& ce : edges_) {
    if (ce.color < 1) throw PreconditionError("tree edge without a color");
    plain.push_back(ce.edge);
  }
  if (!IsTree(plain)) {
    throw PreconditionError("edges do not form a tree");
  }
}

ColoredTree ColoredTree::FromState(const GameState& state,
                                   const std::vector<Edge>& edges) {
  std::vector<ColoredEdge> colored;
  for (const Edge& e : edges) {
    const Color c = state.ColorOf(e);
    if (c == kNoColor) {
      throw PreconditionError("tree edge " + ToString(e) + " is not exposed");
    }
    colored.push_back({e, c});
  }
  return ColoredTree(std::move(colored));
}

std::vector<Vertex> ColoredTree::Vertices() const {
  std::vector<Vertex> out;
  out.reserve(2 * edges_.size());
  for (const ColoredEdge& ce : edges_) {
    out.push_back(ce.edge.u);
    out.push_back(ce.edge.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ColoredTree::Contains(Vertex v) const { return Degree(v) > 0; }

int ColoredTree::Degree(Vertex v) const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(),
      [v](const ColoredEdge& ce) { return ce.edge.Touches(v); }));
}

std::vector<std::pair<Vertex, Color>> ColoredTree::Incident(Vertex v) const {
  std::vector<std::pair<Vertex, Color>> out;
  for (const ColoredEdge& ce : edges_) {
    if (ce.edge.Touches(v)) out.emplace_back(ce.edge.Other(v), ce.color);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Color> ColoredTree::ColorOf(const Edge& e) const {
  for (const ColoredEdge& ce : edges_) {
    if (ce.edge == e) return ce.color;
  }
  return std::nullopt;
}

std::vector<Color> ColoredTree::ColorSet() const {
  std::vector<Color> out;
  for (const ColoredEdge& ce : edges_) out.push_back(ce.color);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ColoredTree::HasColor(Color c) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [c](const ColoredEdge& ce) { return ce.color == c; });
}

bool ColoredTree::IsProperlyColored() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_[i].color == edges_[j].color &&
          edges_[i].edge.SharesVertexWith(edges_[j].edge)) {
        return false;
      }
    }
  }
  return true;
}

std::map<Vertex, std::vector<std::pair<Vertex, Color>>> ColoredTree::Adjacency()
    const {
  std::map<Vertex, std::vector<std::pair<Vertex, Color>>> adj;
  for (const ColoredEdge& ce : edges_) {
    adj[ce.edge.u].emplace_back(ce.edge.v, ce.color);
    adj[ce.edge.v].emplace_back(ce.edge.u, ce.color);
  }
  for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

std::map<Vertex, int> ColoredTree::Distances(Vertex from) const {
  const auto adj = Adjacency();
  std::map<Vertex, int> dist{{from, 0}};
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& [w, c] : it->second) {
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

int ColoredTree::Diameter() const {
  if (empty()) return 0;
  const std::vector<int> ecc = Eccentricities(edges_, Vertices());
  return *std::max_element(ecc.begin(), ecc.end());
}

Vertex ColoredTree::Center() const {
  RAMSEY_INVARIANT(!empty(), "center of an empty tree");
  const std::vector<Vertex> verts = Vertices();
  const std::vector<int> ecc = Eccentricities(edges_, verts);
  return verts[static_cast<std::size_t>(
      std::min_element(ecc.begin(), ecc.end()) - ecc.begin())];
}

ColoredTree ColoredTree::Pruned(Vertex x, Vertex y) const {
  if (!HasEdge(Edge::Of(x, y))) {
    throw PreconditionError("T(x, y) needs xy to be a tree edge");
  }
  // Everything reachable from y without passing through x, plus x itself.
  const auto adj = Adjacency();
  std::set<Vertex> keep{y};
  std::deque<Vertex> queue{y};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const auto& [w, c] : adj.at(v)) {
      if (w == x || keep.count(w)) continue;
      keep.insert(w);
      queue.push_back(w);
    }
  }
  keep.insert(x);
  std::vector<ColoredEdge> out;
  for (const ColoredEdge& ce : edges_) {
    if (!keep.count(ce.edge.u) || !keep.count(ce.edge.v)) continue;
    // The only kept edge at x is xy.
    if (ce.edge.Touches(x) && ce.edge.Other(x) != y) continue;
    out.push_back(ce);
  }
  return ColoredTree(std::move(out));
}

std::map<Vertex, int> ColoredTree::Sides(Vertex root) const {
  std::map<Vertex, int> side;
  for (const auto& [v, d] : Distances(root)) side[v] = d % 2;
  return side;
}

ColoredTree ColoredTree::Plus(const ColoredEdge& e) const {
  std::vector<ColoredEdge> edges = edges_;
  edges.push_back(e);
  return ColoredTree(std::move(edges));
}

ColoredTree ColoredTree::Minus(const Edge& e) const {
  std::vector<ColoredEdge> edges;
  for (const ColoredEdge& ce : edges_) {
    if (ce.edge != e) edges.push_back(ce);
  }
  RAMSEY_INVARIANT(edges.size() + 1 == edges_.size(),
                   "removing " + ToString(e) + " which is not a tree edge");
  return ColoredTree(std::move(edges));
}

bool ColoredTree::IsPath() const {
  if (empty()) return false;
  for (Vertex v : Vertices()) {
    if (Degree(v) > 2) return false;
  }
  return true;
}

bool ColoredTree::IsStar() const {
  if (empty()) return false;
  for (Vertex v : Vertices()) {
    if (Degree(v) == EdgeCount()) return true;
  }
  return false;
}

std::string ToString(const ColoredTree& tree) {
  std::string out = "{";
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(tree.edges()[i].edge) + ":" +
           std::to_string(tree.edges()[i].color);
  }
  return out + "}";
}

int GoodForest::VertexCount() const {
  int total = 0;
  for (const ForestComponent& c : components_) total += c.tree.VertexCount();
  return total;
}

int GoodForest::EdgeCount() const {
  int total = 0;
  for (const ForestComponent& c : components_) total += c.tree.EdgeCount();
  return total;
}

bool GoodForest::Covers(Vertex v) const {
  return std::any_of(components_.begin(), components_.end(),
                     [v](const ForestComponent& c) { return c.tree.Contains(v); });
}

std::vector<Color> GoodForest::CommonColors(int t) const {
  std::vector<Color> common(static_cast<std::size_t>(t));
  std::iota(common.begin(), common.end(), 1);
  for (const ForestComponent& comp : components_) {
    std::erase_if(common, [&](Color c) { return !comp.tree.HasColor(c); });
  }
  return common;
}

int GoodForest::Add(ColoredTree tree, std::int64_t queries) {
  components_.push_back({next_id_, std::move(tree), queries});
  return next_id_++;
}

void GoodForest::Replace(std::size_t index, ColoredTree tree,
                         std::int64_t queries) {
  components_.at(index).tree = std::move(tree);
  components_.at(index).queries = queries;
}

std::optional<std::string> GoodForest::Problem(int t) const {
  Vertex top = 0;
  for (const ForestComponent& comp : components_) {
    for (const ColoredEdge& ce : comp.tree.edges()) top = std::max(top, ce.edge.v);
  }
  // Owning component (index + 1) of each vertex.
  std::vector<std::size_t> owner(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const ForestComponent& comp = components_[i];
    if (comp.tree.empty()) {
      return "component " + std::to_string(comp.id) + " has no edges";
    }
    if (!comp.tree.IsProperlyColored()) {
      return "component " + std::to_string(comp.id) +
             " is not properly edge-colored: " + ToString(comp.tree);
    }
    for (const ColoredEdge& ce : comp.tree.edges()) {
      for (Vertex v : {ce.edge.u, ce.edge.v}) {
        std::size_t& o = owner[static_cast<std::size_t>(v)];
        if (o != 0 && o != i + 1) {
          return "vertex " + std::to_string(v) + " lies in two components";
        }
        o = i + 1;
      }
    }
  }
  if (!components_.empty() && CommonColors(t).empty()) {
    return "no color appears in every component";
  }
  return std::nullopt;
}

ForestMatching GoodForestMatching(const GoodForest& forest,
                                  const TargetSpec& targets) {
  const int t = targets.t();
  if (!targets.AllMatchings()) {
    throw PreconditionError("good-forest extraction needs matching targets");
  }
  if (auto problem = forest.Problem(t)) {
    throw PreconditionError("not a good forest: " + *problem);
  }
  int max_r = 0;
  int slack = 0;
  for (const Goal& g : targets.goals) {
    max_r = std::max(max_r, g.size);
    slack += g.size - 1;
  }
  if (forest.VertexCount() < max_r + slack) {
    throw PreconditionError("good forest covers " +
                            std::to_string(forest.VertexCount()) +
                            " vertices, needs " + std::to_string(max_r + slack));
  }
  std::vector<std::vector<Edge>> by_color(static_cast<std::size_t>(t) + 1);
  for (const ForestComponent& comp : forest.components()) {
    for (const ColoredEdge& ce : comp.tree.edges()) {
      RAMSEY_INVARIANT(ce.color >= 1 && ce.color <= t, "color out of range");
      by_color[static_cast<std::size_t>(ce.color)].push_back(ce.edge);
    }
  }
  const Color common = forest.CommonColors(t).front();
  std::int64_t total = static_cast<std::int64_t>(
      by_color[static_cast<std::size_t>(common)].size());
  for (Color c = 1; c <= t; ++c) total += static_cast<std::int64_t>(by_color[static_cast<std::size_t>(c)].size());
  RAMSEY_INVARIANT(total >= forest.VertexCount(),
                   "pigeonhole count m_c + sum m_i below |V(F)|");
  for (Color c = 1; c <= t; ++c) {
    auto& edges = by_color[static_cast<std::size_t>(c)];
    if (static_cast<int>(edges.size()) >= targets.ForColor(c).size) {
      std::sort(edges.begin(), edges.end());
      RAMSEY_INVARIANT(IsMatching(edges), "same-color forest edges meet");
      return {c, std::move(edges)};
    }
  }
  RAMSEY_INVARIANT(false, "no color reaches its matching size");
  return {};
}

}  // namespace ramsey
