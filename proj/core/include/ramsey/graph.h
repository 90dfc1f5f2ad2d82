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

#ifndef RAMSEY_GRAPH_H_
#define RAMSEY_GRAPH_H_

#include <span>
#include <vector>

#include "ramsey/types.h"

namespace ramsey {

// Loop-free, duplicate-free undirected graph on vertices [0, n).
struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;

  // Throws PreconditionError on out-of-range endpoints or duplicates.
  static SimpleGraph FromEdges(int n, std::vector<Edge> edges);

  std::vector<std::vector<Vertex>> Adjacency() const;
};

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);

  int Find(int x);
  // Returns false when x and y were already joined.
  bool Unite(int x, int y);
  int SizeOf(int x) { return size_[static_cast<std::size_t>(Find(x))]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// True iff `edges` is a forest that is connected on its touched vertices and
// non-empty, i.e. a single tree with at least one edge.
bool IsTree(std::span<const Edge> edges);

// True iff the edges are pairwise vertex-disjoint.
bool IsMatching(std::span<const Edge> edges);

// Sorted vertex set touched by the edges.
std::vector<Vertex> TouchedVertices(std::span<const Edge> edges);

// Spanning tree of the connected component containing `root`, built by
// breadth-first search over `adjacency` visiting neighbours in increasing
// index order.
std::vector<Edge> BfsSpanningTree(
    const std::vector<std::vector<Vertex>>& adjacency, Vertex root);

}  // namespace ramsey

#endif  // RAMSEY_GRAPH_H_
