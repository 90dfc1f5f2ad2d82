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

// Membership in (X1, X2, X3) is a 3-bit code per vertex (bit 0: X1,
// bit 1: X2, bit 2: X3). The loop branches only ever need the lowest vertex
// of codes 001, 010, 101 and 110, kept in ordered sets. X3 is cleared in
// O(1) by bumping an epoch.

#include "ramsey/comp_extend.h"

#include <algorithm>
#include <set>

#include "ramsey/detection.h"
#include "ramsey/errors.h"

namespace ramsey {

bool InOneComponent(const GameState& state, Color c,
                    const std::vector<Vertex>& set) {
  if (set.size() <= 1) return true;
  const std::vector<int> label = ColorComponents(state, c);
  const int first = label[static_cast<std::size_t>(set.front())];
  return std::all_of(set.begin(), set.end(), [&](Vertex v) {
    return label[static_cast<std::size_t>(v)] == first;
  });
}

std::optional<std::string> CompTripleProblem(const GameState& state,
                                             const std::vector<Vertex>& v1,
                                             const std::vector<Vertex>& v2,
                                             ColorRoles roles,
                                             const CompTriple& triple) {
  std::vector<Vertex> both;
  std::set_union(v1.begin(), v1.end(), v2.begin(), v2.end(),
                 std::back_inserter(both));
  auto subset = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  const std::array<const std::vector<Vertex>*, 3> xs{&triple.x1, &triple.x2,
                                                     &triple.x3};
  for (int i = 0; i < 3; ++i) {
    if (!subset(*xs[static_cast<std::size_t>(i)], both)) {
      return "X" + std::to_string(i + 1) + " leaves V1 + V2";
    }
  }
  if (!subset(v1, triple.x1)) return "X1 does not contain V1";
  if (!subset(v2, triple.x2)) return "X2 does not contain V2";
  for (int i = 0; i < 3; ++i) {
    if (!InOneComponent(state, roles[static_cast<std::size_t>(i)],
                        *xs[static_cast<std::size_t>(i)])) {
      return "X" + std::to_string(i + 1) + " spans two components of color " +
             std::to_string(roles[static_cast<std::size_t>(i)]);
    }
  }
  if (triple.x1 == both || triple.x2 == both) return std::nullopt;
  std::vector<Vertex> left1;
  std::vector<Vertex> left2;
  std::set_difference(v1.begin(), v1.end(), triple.x2.begin(), triple.x2.end(),
                      std::back_inserter(left1));
  std::set_difference(v2.begin(), v2.end(), triple.x1.begin(), triple.x1.end(),
                      std::back_inserter(left2));
  if (!subset(left1, triple.x3) || !subset(left2, triple.x3)) {
    return "none of the three closing conditions holds";
  }
  return std::nullopt;
}

namespace {

class Membership {
 public:
  Membership(int n, const std::vector<Vertex>& v1,
             const std::vector<Vertex>& v2)
      : bits_(static_cast<std::size_t>(n), 0),
        stamp_(static_cast<std::size_t>(n), 0) {
    for (Vertex v : v1) Join(v, 0);
    for (Vertex v : v2) Join(v, 1);
  }

  int Code(Vertex v) const {
    return bits_[Idx(v)] | (stamp_[Idx(v)] == epoch_ ? 4 : 0);
  }
  bool Has(Vertex v, int bit) const { return (Code(v) >> bit) & 1; }

  void Join(Vertex v, int bit) {
    const int before = Code(v);
    if ((before >> bit) & 1) return;
    if (bit == 2) {
      stamp_[Idx(v)] = epoch_;
    } else {
      bits_[Idx(v)] = static_cast<std::uint8_t>(bits_[Idx(v)] | (1 << bit));
    }
    Move(v, before, Code(v));
    if (bit == 0) ++size1_;
    if (bit == 1) ++size2_;
  }

  // X3 <- {u, v}. Only legal while X3 lies inside X1 and X2.
  void RestartX3(Vertex u, Vertex v) {
    RAMSEY_INVARIANT(Lowest(5) < 0 && Lowest(6) < 0,
                     "X3 restarted while not inside X1 and X2");
    ++epoch_;
    Join(u, 2);
    Join(v, 2);
  }

  // Lowest vertex with exactly this code, or -1. Codes 1, 2, 5, 6 only.
  Vertex Lowest(int code) const {
    const auto& s = sets_[static_cast<std::size_t>(code)];
    return s.empty() ? -1 : *s.begin();
  }

  // 2|X1| + 2|X2| + |X3 \ (X1 & X2)|.
  std::int64_t Potential() const {
    return 2 * size1_ + 2 * size2_ +
           static_cast<std::int64_t>(sets_[4].size() + sets_[5].size() +
                                     sets_[6].size());
  }

  std::vector<Vertex> Members(int bit, int n) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
      if (Has(v, bit)) out.push_back(v);
    }
    return out;
  }

 private:
  static std::size_t Idx(Vertex v) { return static_cast<std::size_t>(v); }

  void Move(Vertex v, int from, int to) {
    sets_[static_cast<std::size_t>(from)].erase(v);
    if (to != 0 && to != 3 && to != 7) {
      sets_[static_cast<std::size_t>(to)].insert(v);
    }
  }

  std::vector<std::uint8_t> bits_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
  std::array<std::set<Vertex>, 8> sets_;
  std::int64_t size1_ = 0;
  std::int64_t size2_ = 0;
};

std::vector<Vertex> Normalized(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

Procedure<CompExtendResult> CompExtend(const GameState& state,
                                       std::vector<Vertex> v1,
                                       std::vector<Vertex> v2, ColorRoles roles,
                                       std::string tag) {
  if (state.t() != 3) throw PreconditionError("CompExtend needs t = 3");
  {
    ColorRoles sorted = roles;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ColorRoles{1, 2, 3}) {
      throw PreconditionError("color roles must be a permutation of 1, 2, 3");
    }
  }
  v1 = Normalized(std::move(v1));
  v2 = Normalized(std::move(v2));
  for (const auto* vs : {&v1, &v2}) {
    for (Vertex v : *vs) {
      if (v < 0 || v >= state.n()) {
        throw PreconditionError("CompExtend vertex outside the board");
      }
    }
  }
  if (!InOneComponent(state, roles[0], v1)) {
    throw PreconditionError("V1 is not inside one component of color " +
                            std::to_string(roles[0]));
  }
  if (!InOneComponent(state, roles[1], v2)) {
    throw PreconditionError("V2 is not inside one component of color " +
                            std::to_string(roles[1]));
  }

  const std::int64_t start_queries = state.queries();
  const int max_loops = 2 * static_cast<int>(v1.size() + v2.size()) + 1;
  Membership x(state.n(), v1, v2);
  auto role_of = [&](Color c) {
    for (int i = 0; i < 3; ++i) {
      if (roles[static_cast<std::size_t>(i)] == c) return i;
    }
    return -1;
  };

  CompExtendResult result;
  for (;;) {
    ++result.loops;
    RAMSEY_INVARIANT(result.loops <= max_loops,
                     "CompExtend exceeded " + std::to_string(max_loops) +
                         " loops");
    const std::int64_t before = x.Potential();
    Vertex u = -1;
    Vertex v = -1;
    bool third_branch = false;
    if (x.Lowest(1) >= 0 && x.Lowest(6) >= 0) {
      u = x.Lowest(1);
      v = x.Lowest(6);
    } else if (x.Lowest(2) >= 0 && x.Lowest(5) >= 0) {
      u = x.Lowest(2);
      v = x.Lowest(5);
    } else if (x.Lowest(5) < 0 && x.Lowest(6) < 0 && x.Lowest(4) < 0 &&
               x.Lowest(1) >= 0 && x.Lowest(2) >= 0) {
      // X3 inside X1 & X2, so X1 \ X2 and X2 \ X1 are codes 001 and 010.
      u = x.Lowest(1);
      v = x.Lowest(2);
      third_branch = true;
    } else {
      break;
    }
    const int role = role_of(co_await Ask(state, Edge::Of(u, v), tag));
    if (third_branch && role == 2) {
      x.RestartX3(u, v);
    } else {
      x.Join(u, role);
      x.Join(v, role);
    }
    RAMSEY_INVARIANT(x.Potential() >= before + 1,
                     "CompExtend potential did not increase");
  }
  result.triple = {x.Members(0, state.n()), x.Members(1, state.n()),
                   x.Members(2, state.n())};
  result.queries = state.queries() - start_queries;
  RAMSEY_INVARIANT(result.queries <= 2 * static_cast<std::int64_t>(v1.size() + v2.size()),
                   "CompExtend used more than 2|V1| + 2|V2| queries");
  if (auto problem = CompTripleProblem(state, v1, v2, roles, result.triple)) {
    RAMSEY_INVARIANT(false, "CompExtend postcondition: " + *problem);
  }
  co_return result;
}

}  // namespace ramsey
