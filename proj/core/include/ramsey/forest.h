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

// Edge-colored trees and good forests.
//
// A good forest is a properly edge-colored forest without isolated vertices
// in which some color appears in every component.

#ifndef RAMSEY_FOREST_H_
#define RAMSEY_FOREST_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/game.h"
#include "ramsey/types.h"

namespace ramsey {

struct ColoredEdge {
  Edge edge;
  Color color = kNoColor;

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// A tree with at least one edge (or the empty tree), edges kept sorted.
class ColoredTree {
 public:
  ColoredTree() = default;
  // Throws PreconditionError unless the edges form a single tree.
  explicit ColoredTree(std::vector<ColoredEdge> edges);
  // The tree on `edges`, colored as exposed on the board.
  static ColoredTree FromState(const GameState& state,
                               const std::vector<Edge>& edges);

  const std::vector<ColoredEdge>& edges() const { return edges_; }
  int EdgeCount() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  // Sorted.
  std::vector<Vertex> Vertices() const;
  int VertexCount() const { return empty() ? 0 : EdgeCount() + 1; }
  bool Contains(Vertex v) const;
  int Degree(Vertex v) const;
  bool IsLeaf(Vertex v) const { return Degree(v) == 1; }
  // (neighbour, color) pairs at v, by neighbour.
  std::vector<std::pair<Vertex, Color>> Incident(Vertex v) const;
  std::optional<Color> ColorOf(const Edge& e) const;
  bool HasEdge(const Edge& e) const { return ColorOf(e).has_value(); }

  // Sorted distinct colors.
  std::vector<Color> ColorSet() const;
  bool HasColor(Color c) const;
  bool IsProperlyColored() const;

  int Diameter() const;
  // Vertex of least eccentricity, lowest index among ties.
  Vertex Center() const;
  // T(x, y) for an edge xy: root the tree at y and drop every descendant of
  // x. The result keeps x, now as a leaf.
  ColoredTree Pruned(Vertex x, Vertex y) const;
  // 0 for vertices at even distance from root, 1 otherwise.
  std::map<Vertex, int> Sides(Vertex root) const;

  ColoredTree Plus(const ColoredEdge& e) const;
  ColoredTree Minus(const Edge& e) const;

  bool IsPath() const;
  bool IsStar() const;

  friend bool operator==(const ColoredTree&, const ColoredTree&) = default;

 private:
  std::map<Vertex, std::vector<std::pair<Vertex, Color>>> Adjacency() const;
  std::map<Vertex, int> Distances(Vertex from) const;

  std::vector<ColoredEdge> edges_;
};

std::string ToString(const ColoredTree& tree);

struct ForestComponent {
  int id = 0;
  ColoredTree tree;
  // Queries spent building this component.
  std::int64_t queries = 0;
};

class GoodForest {
 public:
  const std::vector<ForestComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  int VertexCount() const;
  int EdgeCount() const;
  bool Covers(Vertex v) const;

  // Colors present in every component; all of [1, t] for an empty forest.
  std::vector<Color> CommonColors(int t) const;

  // Returns the new component's id.
  int Add(ColoredTree tree, std::int64_t queries);
  void Replace(std::size_t index, ColoredTree tree, std::int64_t queries);

  // First violated property (proper coloring, vertex-disjointness, a common
  // color), or nullopt for a good forest.
  std::optional<std::string> Problem(int t) const;

 private:
  std::vector<ForestComponent> components_;
  int next_id_ = 0;
};

struct ForestMatching {
  Color color = kNoColor;
  std::vector<Edge> edges;
};

// The color-i edges of F for the lowest color i with at least r_i of them.
// Throws PreconditionError when F is not good or has fewer than
// max r_i + sum (r_i - 1) vertices.
ForestMatching GoodForestMatching(const GoodForest& forest,
                                  const TargetSpec& targets);

}  // namespace ramsey

#endif  // RAMSEY_FOREST_H_
