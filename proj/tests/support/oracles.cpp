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

#include "oracles.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace ramsey::oracle {
namespace {

std::map<Vertex, std::vector<Vertex>> Adj(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::map<Vertex, int> Bfs(const std::map<Vertex, std::vector<Vertex>>& adj,
                          Vertex from) {
  std::map<Vertex, int> dist{{from, 0}};
  std::queue<Vertex> q;
  q.push(from);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : adj.at(v)) {
      if (dist.emplace(w, dist[v] + 1).second) q.push(w);
    }
  }
  return dist;
}

std::vector<Edge> Plain(const std::vector<CEdge>& edges) {
  std::vector<Edge> out;
  for (const CEdge& e : edges) out.push_back(Edge{std::min(e.u, e.v),
                                                  std::max(e.u, e.v)});
  return out;
}

std::set<Vertex> VertexSet(const std::vector<CEdge>& edges) {
  std::set<Vertex> out;
  for (const CEdge& e : edges) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

std::set<Color> ColorSet(const std::vector<CEdge>& edges) {
  std::set<Color> out;
  for (const CEdge& e : edges) out.insert(e.c);
  return out;
}

int MaxDegree(const std::vector<CEdge>& edges) {
  std::map<Vertex, int> deg;
  int best = 0;
  for (const CEdge& e : edges) {
    best = std::max({best, ++deg[e.u], ++deg[e.v]});
  }
  return best;
}

bool IsPathShape(const std::vector<CEdge>& edges) {
  return IsSingleTree(Plain(edges)) && MaxDegree(edges) <= 2;
}

bool IsStarShape(const std::vector<CEdge>& edges) {
  return IsSingleTree(Plain(edges)) &&
         MaxDegree(edges) == static_cast<int>(edges.size());
}

std::string Describe(const std::vector<CEdge>& edges) {
  std::string out = "{";
  for (const CEdge& e : edges) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(e.u) + "-" + std::to_string(e.v) + ":" +
           std::to_string(e.c);
  }
  return out + "}";
}

}  // namespace

int MaxMatchingSize(const std::vector<Edge>& edges) {
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    std::set<Vertex> used;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ok = used.insert(edges[i].u).second && used.insert(edges[i].v).second;
    }
    if (ok) best = size;
  }
  return best;
}

int LargestComponent(int n, const std::vector<Edge>& edges) {
  // Isolated vertices are components of size 1.
  if (edges.empty()) return n > 0 ? 1 : 0;
  const auto adj = Adj(edges);
  std::set<Vertex> seen;
  int best = 1;
  for (const auto& [v, nbrs] : adj) {
    if (seen.count(v)) continue;
    const auto dist = Bfs(adj, v);
    for (const auto& kv : dist) seen.insert(kv.first);
    best = std::max(best, static_cast<int>(dist.size()));
  }
  return best;
}

bool IsSingleTree(const std::vector<Edge>& edges) {
  if (edges.empty()) return false;
  const auto adj = Adj(edges);
  std::set<Edge> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size()) return false;
  return adj.size() == edges.size() + 1 &&
         Bfs(adj, adj.begin()->first).size() == adj.size();
}

bool ProperlyColored(const std::vector<CEdge>& edges) {
  std::set<std::pair<Vertex, Color>> seen;
  for (const CEdge& e : edges) {
    if (!seen.insert({e.u, e.c}).second) return false;
    if (!seen.insert({e.v, e.c}).second) return false;
  }
  return true;
}

std::vector<std::vector<Edge>> LabelledTrees(int vertices) {
  std::vector<std::vector<Edge>> out;
  if (vertices < 2) return out;
  if (vertices == 2) return {{Edge{0, 1}}};
  const int len = vertices - 2;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  for (;;) {
    std::vector<int> degree(static_cast<std::size_t>(vertices), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    std::vector<Edge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      edges.push_back(Edge{std::min(leaf, x), std::max(leaf, x)});
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(x)];
    }
    std::vector<int> last;
    for (int v = 0; v < vertices; ++v) {
      if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
    }
    edges.push_back(Edge{last[0], last[1]});
    out.push_back(std::move(edges));
    int i = len - 1;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == vertices - 1) {
      seq[static_cast<std::size_t>(i--)] = 0;
    }
    if (i < 0) return out;
    ++seq[static_cast<std::size_t>(i)];
  }
}

std::string TreeCode(int vertices, const std::vector<Edge>& edges) {
  if (vertices == 1) return "()";
  const auto adj = Adj(edges);
  // Strip leaves layer by layer to reach the center(s).
  std::map<Vertex, int> degree;
  for (const auto& [v, nbrs] : adj) degree[v] = static_cast<int>(nbrs.size());
  std::vector<Vertex> layer;
  for (const auto& [v, d] : degree) {
    if (d <= 1) layer.push_back(v);
  }
  int remaining = static_cast<int>(adj.size());
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : adj.at(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::function<std::string(Vertex, Vertex)> code = [&](Vertex v, Vertex p) {
    std::vector<std::string> kids;
    for (Vertex w : adj.at(v)) {
      if (w != p) kids.push_back(code(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (Vertex c : layer) {
    const std::string s = code(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

int UnlabelledTreeCount(int vertices) {
  if (vertices == 1) return 1;
  std::set<std::string> codes;
  for (const auto& t : LabelledTrees(vertices)) {
    codes.insert(TreeCode(vertices, t));
  }
  return static_cast<int>(codes.size());
}

std::int64_t ProperColoringCount(const std::vector<Edge>& tree, int colors) {
  const std::size_t m = tree.size();
  std::vector<int> c(m, 1);
  std::int64_t count = 0;
  for (;;) {
    std::vector<CEdge> ce;
    for (std::size_t i = 0; i < m; ++i) ce.push_back({tree[i].u, tree[i].v, c[i]});
    if (ProperlyColored(ce)) ++count;
    std::size_t i = 0;
    while (i < m && c[i] == colors) c[i++] = 1;
    if (i == m) return count;
    ++c[i];
  }
}

int TreeDiameter(const std::vector<Edge>& tree) {
  const auto adj = Adj(tree);
  int best = 0;
  for (const auto& [v, nbrs] : adj) {
    for (const auto& [w, d] : Bfs(adj, v)) best = std::max(best, d);
  }
  return best;
}

std::optional<std::string> ExtensionProblem(const std::vector<CEdge>& before,
                                            const CEdge& xy,
                                            const std::vector<CEdge>& after) {
  const std::string where =
      " for T = " + Describe(before) + ", T* = " + Describe(after);
  std::set<Vertex> allowed = VertexSet(before);
  allowed.insert(xy.u);
  allowed.insert(xy.v);
  for (Vertex v : VertexSet(after)) {
    if (!allowed.count(v)) return "item 1 (vertex outside V(T)+x+y)" + where;
  }
  const std::size_t m = before.size();
  if (after.size() != m + 1 && after.size() != m + 2) {
    return "item 2 (edge count)" + where;
  }
  std::set<Color> need = ColorSet(before);
  need.insert(xy.c);
  const std::set<Color> have = ColorSet(after);
  if (!std::includes(have.begin(), have.end(), need.begin(), need.end())) {
    return "item 3 (color superset)" + where;
  }
  if (!ProperlyColored(after)) return "item 4 (proper coloring)" + where;
  if (!IsSingleTree(Plain(after))) return "not a tree" + where;
  return std::nullopt;
}

std::optional<std::string> AllowedValuesClause1(
    const std::vector<CEdge>& after) {
  const std::size_t k = ColorSet(after).size();
  if (k == 2 && after.size() == 2 && IsPathShape(after)) return std::nullopt;
  if (k == 3 && after.size() == 3 && IsPathShape(after)) return std::nullopt;
  return "e(T)=1 gives " + Describe(after);
}

std::optional<std::string> AllowedValuesClause2(
    const std::vector<CEdge>& after) {
  const std::size_t k = ColorSet(after).size();
  if (k >= 4) return std::nullopt;
  if (k == 3 && after.size() == 3 && IsStarShape(after)) return std::nullopt;
  return "e(T)=2 gives " + Describe(after);
}

std::vector<Edge> LexEdges(int n) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.push_back(Edge{u, v});
  }
  return out;
}

bool ColorHasGoal(int n, const Coloring& full, Color c, const Goal& g) {
  const auto all = LexEdges(n);
  std::vector<Edge> mine;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (full[i] == c) mine.push_back(all[i]);
  }
  if (g.kind == GoalKind::kMatching) return MaxMatchingSize(mine) >= g.size;
  return LargestComponent(n, mine) >= g.size;
}

bool AnyGoal(int n, const Coloring& full, const TargetSpec& targets) {
  for (Color c = 1; c <= targets.t(); ++c) {
    if (ColorHasGoal(n, full, c, targets.ForColor(c))) return true;
  }
  return false;
}

namespace {

// Calls visit on every completion; stops early when visit returns false.
bool ForEachCompletion(int t, Coloring partial,
                       const std::function<bool(const Coloring&)>& visit) {
  std::vector<std::size_t> holes;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (partial[i] == kNoColor) {
      holes.push_back(i);
      partial[i] = 1;
    }
  }
  for (;;) {
    if (!visit(partial)) return false;
    std::size_t i = 0;
    while (i < holes.size() && partial[holes[i]] == t) partial[holes[i++]] = 1;
    if (i == holes.size()) return true;
    ++partial[holes[i]];
  }
}

}  // namespace

bool ExclusionByEnumeration(int n, int t, const Coloring& partial,
                            const TargetSpec& targets) {
  return ForEachCompletion(t, partial, [&](const Coloring& full) {
    return !AnyGoal(n, full, targets);
  });
}

bool CorneredByEnumeration(int n, int t, const Coloring& partial,
                           const TargetSpec& targets, Color c) {
  return ForEachCompletion(t, partial, [&](const Coloring& full) {
    if (!AnyGoal(n, full, targets)) return true;
    return ColorHasGoal(n, full, c, targets.ForColor(c));
  });
}

namespace {

bool Won(int n, int t, const Coloring& s, const TargetSpec& targets,
         GameVariant variant) {
  const auto all = LexEdges(n);
  for (Color c = 1; c <= t; ++c) {
    // An exposed copy: fill unexposed edges with a color no goal uses.
    Coloring exposed = s;
    for (Color& x : exposed) {
      if (x == kNoColor) x = t + 1;
    }
    if (ColorHasGoal(n, exposed, c, targets.ForColor(c))) return true;
  }
  if (variant == GameVariant::kClassic) return false;
  if (variant == GameVariant::kLocating) {
    return ExclusionByEnumeration(n, t, s, targets);
  }
  for (Color c = 1; c <= t; ++c) {
    if (CorneredByEnumeration(n, t, s, targets, c)) return true;
  }
  return false;
}

}  // namespace

int GameValue(int n, int t, const TargetSpec& targets, GameVariant variant) {
  std::unordered_map<std::uint64_t, int> memo;
  const int m = n * (n - 1) / 2;
  std::function<int(Coloring&)> value = [&](Coloring& s) -> int {
    std::uint64_t key = 0;
    for (Color c : s) key = key * static_cast<std::uint64_t>(t + 1) +
                            static_cast<std::uint64_t>(c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best;
    if (Won(n, t, s, targets, variant)) {
      best = 0;
    } else {
      best = m + 1;
      for (int i = 0; i < m; ++i) {
        if (s[static_cast<std::size_t>(i)] != kNoColor) continue;
        int worst = 0;
        for (Color c = 1; c <= t && worst + 1 < best; ++c) {
          s[static_cast<std::size_t>(i)] = c;
          worst = std::max(worst, value(s));
        }
        s[static_cast<std::size_t>(i)] = kNoColor;
        best = std::min(best, 1 + worst);
      }
    }
    memo.emplace(key, best);
    return best;
  };
  Coloring empty(static_cast<std::size_t>(m), kNoColor);
  return value(empty);
}

}  // namespace ramsey::oracle
