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

#include "ramsey/graph.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "ramsey/errors.h"

namespace ramsey {

SimpleGraph SimpleGraph::FromEdges(int n, std::vector<Edge> edges) {
  std::unordered_set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= e.v || e.v >= n) {
      throw PreconditionError("edge " + ToString(e) +
                              " is not an edge of K_" + std::to_string(n));
    }
    if (!seen.insert(e).second) {
      throw PreconditionError("duplicate edge " + ToString(e));
    }
  }
  return SimpleGraph{n, std::move(edges)};
}

std::vector<std::vector<Vertex>> SimpleGraph::Adjacency() const {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

DisjointSets::DisjointSets(int n)
    : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::Find(int x) {
  auto i = static_cast<std::size_t>(x);
  while (parent_[i] != static_cast<int>(i)) {
    parent_[i] = parent_[static_cast<std::size_t>(parent_[i])];
    i = static_cast<std::size_t>(parent_[i]);
  }
  return static_cast<int>(i);
}

bool DisjointSets::Unite(int x, int y) {
  int a = Find(x);
  int b = Find(y);
  if (a == b) return false;
  if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) {
    std::swap(a, b);
  }
  parent_[static_cast<std::size_t>(b)] = a;
  size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
  return true;
}

std::vector<Vertex> TouchedVertices(std::span<const Edge> edges) {
  std::vector<Vertex> out;
  out.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IsTree(std::span<const Edge> edges) {
  if (edges.empty()) return false;
  std::vector<Vertex> verts = TouchedVertices(edges);
  if (verts.size() != edges.size() + 1) return false;
  std::unordered_map<Vertex, int> local;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    local[verts[i]] = static_cast<int>(i);
  }
  DisjointSets sets(static_cast<int>(verts.size()));
  for (const Edge& e : edges) {
    if (e.u == e.v) return false;
    if (!sets.Unite(local[e.u], local[e.v])) return false;
  }
  return true;
}

bool IsMatching(std::span<const Edge> edges) {
  std::unordered_set<Vertex> used;
  for (const Edge& e : edges) {
    if (e.u == e.v) return false;
    if (!used.insert(e.u).second || !used.insert(e.v).second) return false;
  }
  return true;
}

std::vector<Edge> BfsSpanningTree(
    const std::vector<std::vector<Vertex>>& adjacency, Vertex root) {
  std::vector<Edge> tree;
  std::vector<char> seen(adjacency.size(), 0);
  std::deque<Vertex> frontier{root};
  seen[static_cast<std::size_t>(root)] = 1;
  std::vector<Vertex> scratch;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop_front();
    scratch = adjacency[static_cast<std::size_t>(u)];
    std::sort(scratch.begin(), scratch.end());
    for (Vertex w : scratch) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      tree.push_back(Edge::Of(u, w));
      frontier.push_back(w);
    }
  }
  return tree;
}

}  // namespace ramsey
