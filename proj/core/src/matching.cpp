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

// Edmonds' blossom algorithm, O(V^3). Augmenting paths are searched by BFS
// over alternating trees; odd cycles are shrunk by relabeling their base.

#include <deque>
#include <vector>

#include "ramsey/detection.h"

namespace ramsey {
namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const SimpleGraph& g)
      : n_(static_cast<std::size_t>(g.n)),
        adj_(g.Adjacency()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, 0),
        blossom_(n_, 0) {}

  std::vector<Edge> Run() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != -1 || adj_[v].empty()) continue;
      int u = FindAugmentingPath(static_cast<int>(v));
      while (u != -1) {
        const int pv = parent_[Idx(u)];
        const int ppv = match_[Idx(pv)];
        match_[Idx(u)] = pv;
        match_[Idx(pv)] = u;
        u = ppv;
      }
    }
    std::vector<Edge> out;
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] > static_cast<int>(v)) {
        out.push_back(Edge{static_cast<int>(v), match_[v]});
      }
    }
    return out;
  }

 private:
  static std::size_t Idx(int v) { return static_cast<std::size_t>(v); }

  int LowestCommonAncestor(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[Idx(a)];
      seen[Idx(a)] = 1;
      if (match_[Idx(a)] == -1) break;
      a = parent_[Idx(match_[Idx(a)])];
    }
    for (;;) {
      b = base_[Idx(b)];
      if (seen[Idx(b)]) return b;
      b = parent_[Idx(match_[Idx(b)])];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[Idx(v)] != b) {
      blossom_[Idx(base_[Idx(v)])] = 1;
      blossom_[Idx(base_[Idx(match_[Idx(v)])])] = 1;
      parent_[Idx(v)] = child;
      child = match_[Idx(v)];
      v = parent_[Idx(match_[Idx(v)])];
    }
  }

  int FindAugmentingPath(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<int>(i);
    used_[Idx(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[Idx(v)]) {
        if (base_[Idx(v)] == base_[Idx(to)] || match_[Idx(v)] == to) continue;
        if (to == root ||
            (match_[Idx(to)] != -1 && parent_[Idx(match_[Idx(to)])] != -1)) {
          const int cur = LowestCommonAncestor(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!blossom_[Idx(base_[i])]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(static_cast<int>(i));
            }
          }
        } else if (parent_[Idx(to)] == -1) {
          parent_[Idx(to)] = v;
          if (match_[Idx(to)] == -1) return to;
          const int next = match_[Idx(to)];
          used_[Idx(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace

std::vector<Edge> MaxMatching(const SimpleGraph& g) {
  return BlossomMatcher(g).Run();
}

}  // namespace ramsey
