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

// Vocabulary types shared by every module: board edges, colors, per-color
// goals, game variants and win certificates.
//
// Vertices are 0-based; colors are 1-based and live in [1, t].

#ifndef RAMSEY_TYPES_H_
#define RAMSEY_TYPES_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

using Vertex = int;

// 1-based color index. 0 is reserved for "unexposed" in dense tables.
using Color = int;
inline constexpr Color kNoColor = 0;

// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 1;

  // Canonicalizes the endpoint order. Throws PreconditionError on a loop.
  static Edge Of(Vertex a, Vertex b);

  bool Touches(Vertex w) const { return u == w || v == w; }
  Vertex Other(Vertex w) const { return w == u ? v : u; }
  bool SharesVertexWith(const Edge& e) const {
    return Touches(e.u) || Touches(e.v);
  }
  std::uint64_t Key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string ToString(const Edge& e);

// Number of edges of K_n.
constexpr std::int64_t PairCount(std::int64_t n) { return n * (n - 1) / 2; }

enum class GoalKind { kMatching, kTree };

// Per-color goal: r pairwise disjoint edges, or any tree on k vertices.
struct Goal {
  GoalKind kind = GoalKind::kMatching;
  int size = 1;

  static Goal Matching(int r) { return {GoalKind::kMatching, r}; }
  static Goal Tree(int k) { return {GoalKind::kTree, k}; }

  friend bool operator==(const Goal&, const Goal&) = default;
};

std::string ToString(const Goal& g);

// One goal per color; goals[i] belongs to color i + 1.
struct TargetSpec {
  std::vector<Goal> goals;

  static TargetSpec Matchings(const std::vector<int>& rs);
  static TargetSpec Uniform(Goal g, int t);

  int t() const { return static_cast<int>(goals.size()); }
  const Goal& ForColor(Color c) const { return goals.at(c - 1); }
  bool AllMatchings() const;
  bool AllTrees() const;

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

std::string ToString(const TargetSpec& targets);

enum class GameVariant { kClassic, kLocating, kCornering };

std::string_view ToString(GameVariant v);
// Accepts "classic", "locating", "cornering". Throws PreconditionError.
GameVariant ParseVariant(std::string_view text);

enum class CertificateKind { kFoundCopy, kExclusion, kCorneredColor };

std::string_view ToString(CertificateKind k);

// What a Builder claims when it stops. Only kFoundCopy carries edges;
// kCorneredColor carries a color; kExclusion carries neither.
struct WinCertificate {
  CertificateKind kind = CertificateKind::kFoundCopy;
  Color color = kNoColor;
  std::vector<Edge> edges;

  static WinCertificate Found(Color c, std::vector<Edge> edges) {
    return {CertificateKind::kFoundCopy, c, std::move(edges)};
  }
  static WinCertificate Exclusion() {
    return {CertificateKind::kExclusion, kNoColor, {}};
  }
  static WinCertificate Cornered(Color c) {
    return {CertificateKind::kCorneredColor, c, {}};
  }

  friend bool operator==(const WinCertificate&,
                         const WinCertificate&) = default;
};

}  // namespace ramsey

template <>
struct std::hash<ramsey::Edge> {
  std::size_t operator()(const ramsey::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.Key());
  }
};

#endif  // RAMSEY_TYPES_H_
