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

#include "ramsey/solver.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>
#include <unordered_map>

#include "ramsey/detection.h"
#include "ramsey/errors.h"
#include "ramsey/formulas.h"
#include "ramsey/graph.h"
#include "solver_internal.h"

namespace ramsey {

SolverState SolverState::Empty(int n, int t) {
  if (n < 2 || n > 64) throw PreconditionError("solver boards need 2 <= n <= 64");
  if (t < 2 || t > 255) throw PreconditionError("solver needs 2 <= t <= 255");
  SolverState s;
  s.n = n;
  s.t = t;
  s.colors.assign(static_cast<std::size_t>(PairCount(n)), kNoColor);
  return s;
}

SolverState SolverState::FromGame(const GameState& state) {
  SolverState s = Empty(state.n(), state.t());
  for (const TranscriptMove& m : state.transcript().moves) s.Set(m.edge, m.color);
  return s;
}

std::int64_t SolverState::queries() const {
  return std::count_if(colors.begin(), colors.end(),
                       [](std::uint8_t c) { return c != kNoColor; });
}

Color SolverState::At(const Edge& e) const {
  return colors[static_cast<std::size_t>(EdgeIndex(n, e))];
}

void SolverState::Set(const Edge& e, Color c) {
  if (c < 0 || c > t) throw PreconditionError("color outside [0, t]");
  colors[static_cast<std::size_t>(EdgeIndex(n, e))] =
      static_cast<std::uint8_t>(c);
}

int EdgeIndex(int n, const Edge& e) {
  if (!(0 <= e.u && e.u < e.v && e.v < n)) {
    throw PreconditionError("edge " + ToString(e) + " is not on K_" +
                            std::to_string(n));
  }
  return e.u * (2 * n - e.u - 1) / 2 + (e.v - e.u - 1);
}

std::vector<Edge> AllEdges(int n) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(PairCount(n)));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.push_back(Edge{u, v});
  }
  return out;
}

namespace internal {

MaskBoard::MaskBoard(const SolverState& s)
    : n(s.n), t(s.t), masks(static_cast<std::size_t>((s.t + 1) * s.n), 0) {
  std::size_t idx = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++idx) Add(u, v, s.colors[idx]);
  }
}

namespace {

int SmallMatching(const std::uint64_t* adj, std::uint64_t avail, int need) {
  if (need <= 0) return 0;
  if (std::popcount(avail) < 2 * need) return -1;
  const int v = std::countr_zero(avail);
  avail &= avail - 1;
  // v matched to some neighbour, or left out.
  for (std::uint64_t nb = adj[v] & avail; nb != 0; nb &= nb - 1) {
    const int w = std::countr_zero(nb);
    if (SmallMatching(adj, avail & ~(std::uint64_t{1} << w), need - 1) >= 0) {
      return 0;
    }
  }
  return SmallMatching(adj, avail, need);
}

}  // namespace

bool MaskBoard::GoalHolds(Color c, const Goal& goal, bool with_unexposed) const {
  std::uint64_t adj[64];
  const std::uint64_t* base = Row(c);
  const std::uint64_t* open = Row(kNoColor);
  std::uint64_t touched = 0;
  for (int v = 0; v < n; ++v) {
    adj[v] = base[v] | (with_unexposed ? open[v] : 0);
    if (adj[v] != 0) touched |= std::uint64_t{1} << v;
  }
  if (goal.kind == GoalKind::kTree) {
    std::uint64_t left = touched;
    while (left != 0) {
      std::uint64_t comp = left & (~left + 1);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = adj[v] & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      if (std::popcount(comp) >= goal.size) return true;
      left &= ~comp;
    }
    return false;
  }
  if (std::popcount(touched) < 2 * goal.size) return false;
  if (n <= 16) return SmallMatching(adj, touched, goal.size) >= 0;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t nb = adj[u] >> u >> 1; nb != 0; nb &= nb - 1) {
      edges.push_back(Edge{u, u + 1 + std::countr_zero(nb)});
    }
  }
  return static_cast<int>(MaxMatching(SimpleGraph{n, std::move(edges)}).size()) >=
         goal.size;
}

}  // namespace internal

namespace {

using internal::MaskBoard;

void CheckThreshold(const SolverState& s, int threshold) {
  if (s.unexposed() > threshold) {
    throw IntractableError(
        "completion enumeration over " + std::to_string(s.unexposed()) +
        " unexposed edges exceeds the threshold of " +
        std::to_string(threshold));
  }
}

std::vector<Edge> OpenEdges(const SolverState& s) {
  std::vector<Edge> out;
  std::size_t idx = 0;
  for (Vertex u = 0; u < s.n; ++u) {
    for (Vertex v = u + 1; v < s.n; ++v, ++idx) {
      if (s.colors[idx] == kNoColor) out.push_back(Edge{u, v});
    }
  }
  return out;
}

// Depth-first walk over completions of `open`, colors tried in order 1..t.
class CompletionSearch {
 public:
  CompletionSearch(const SolverState& s, const TargetSpec& targets)
      : board_(s), targets_(targets), open_(OpenEdges(s)) {}

  // Some completion holds some goal.
  bool AnyGoal(std::size_t i) {
    for (Color c = 1; c <= board_.t; ++c) {
      if (board_.GoalHolds(c, targets_.ForColor(c), false)) return true;
    }
    if (i == open_.size() || !AnyReachable(kNoColor)) return false;
    return Branch(i, [this](std::size_t j) { return AnyGoal(j); });
  }

  // Some completion holds the color-c goal.
  bool GoalIn(std::size_t i, Color c) {
    const Goal& g = targets_.ForColor(c);
    if (board_.GoalHolds(c, g, false)) return true;
    if (i == open_.size() || !board_.GoalHolds(c, g, true)) return false;
    return Branch(i, [this, c](std::size_t j) { return GoalIn(j, c); });
  }

  // Some valid completion lacks the color-c goal.
  bool ValidWithout(std::size_t i, Color c) {
    if (board_.GoalHolds(c, targets_.ForColor(c), false)) return false;
    for (Color j = 1; j <= board_.t; ++j) {
      if (j != c && board_.GoalHolds(j, targets_.ForColor(j), false)) {
        return true;
      }
    }
    if (i == open_.size() || !AnyReachable(c)) return false;
    return Branch(i, [this, c](std::size_t j) { return ValidWithout(j, c); });
  }

 private:
  // Some color other than `skip` can still reach its goal.
  bool AnyReachable(Color skip) const {
    for (Color c = 1; c <= board_.t; ++c) {
      if (c != skip && board_.GoalHolds(c, targets_.ForColor(c), true)) {
        return true;
      }
    }
    return false;
  }

  template <typename Next>
  bool Branch(std::size_t i, Next next) {
    const Edge e = open_[i];
    board_.Remove(e.u, e.v, kNoColor);
    bool found = false;
    for (Color c = 1; c <= board_.t && !found; ++c) {
      board_.Add(e.u, e.v, c);
      found = next(i + 1);
      board_.Remove(e.u, e.v, c);
    }
    board_.Add(e.u, e.v, kNoColor);
    return found;
  }

  MaskBoard board_;
  const TargetSpec& targets_;
  std::vector<Edge> open_;
};

void CheckShape(const SolverState& s, const TargetSpec& targets) {
  if (targets.t() != s.t) {
    throw PreconditionError("targets length differs from t");
  }
}

// Edges realizing the color-c goal among exposed edges, if any.
std::optional<std::vector<Edge>> ExposedCopy(const SolverState& s,
                                             const TargetSpec& targets,
                                             Color c) {
  std::vector<Edge> edges;
  std::size_t idx = 0;
  for (Vertex u = 0; u < s.n; ++u) {
    for (Vertex v = u + 1; v < s.n; ++v, ++idx) {
      if (s.colors[idx] == c) edges.push_back(Edge{u, v});
    }
  }
  const Goal& g = targets.ForColor(c);
  if (g.kind == GoalKind::kMatching) {
    std::vector<Edge> m = MaxMatching(SimpleGraph{s.n, edges});
    if (static_cast<int>(m.size()) >= g.size) return m;
    return std::nullopt;
  }
  SimpleGraph graph{s.n, edges};
  const auto adj = graph.Adjacency();
  DisjointSets sets(s.n);
  for (const Edge& e : edges) sets.Unite(e.u, e.v);
  int best_root = -1;
  int best_size = 0;
  for (Vertex v = 0; v < s.n; ++v) {
    if (adj[static_cast<std::size_t>(v)].empty()) continue;
    const int size = sets.SizeOf(v);
    if (size > best_size) {
      best_size = size;
      best_root = v;
    }
  }
  if (best_root < 0 || best_size < g.size) return std::nullopt;
  return BfsSpanningTree(adj, best_root);
}

}  // namespace

bool HasCompletionWithTarget(const SolverState& s, const TargetSpec& targets,
                             std::optional<Color> c, bool want,
                             int threshold) {
  CheckShape(s, targets);
  CheckThreshold(s, threshold);
  CompletionSearch search(s, targets);
  if (!c) {
    const bool any = search.AnyGoal(0);
    return want ? any : !any;
  }
  if (*c < 1 || *c > s.t) throw PreconditionError("color outside [1, t]");
  return want ? search.GoalIn(0, *c) : search.ValidWithout(0, *c);
}

bool ExclusionHolds(const SolverState& s, const TargetSpec& targets,
                    WinCheckRoute route, int threshold) {
  CheckShape(s, targets);
  if (route == WinCheckRoute::kEnumeration) {
    return HasCompletionWithTarget(s, targets, std::nullopt, false, threshold);
  }
  const MaskBoard board(s);
  for (Color c = 1; c <= s.t; ++c) {
    if (board.GoalHolds(c, targets.ForColor(c), true)) return false;
  }
  return true;
}

bool CorneredHolds(const SolverState& s, const TargetSpec& targets, Color c,
                   WinCheckRoute route, int threshold) {
  CheckShape(s, targets);
  if (c < 1 || c > s.t) throw PreconditionError("color outside [1, t]");
  if (route == WinCheckRoute::kEnumeration) {
    return !HasCompletionWithTarget(s, targets, c, false, threshold);
  }
  // A valid completion avoiding color c's goal exists iff c lacks it now and
  // some other color can still reach its own goal.
  const MaskBoard board(s);
  if (board.GoalHolds(c, targets.ForColor(c), false)) return true;
  for (Color j = 1; j <= s.t; ++j) {
    if (j != c && board.GoalHolds(j, targets.ForColor(j), true)) return false;
  }
  return true;
}

std::optional<WinCertificate> WinCheck(const SolverState& s,
                                       const TargetSpec& targets,
                                       GameVariant variant,
                                       WinCheckRoute route, int threshold) {
  CheckShape(s, targets);
  if (variant == GameVariant::kCornering) {
    for (Color c = 1; c <= s.t; ++c) {
      if (CorneredHolds(s, targets, c, route, threshold)) {
        return WinCertificate::Cornered(c);
      }
    }
    return std::nullopt;
  }
  for (Color c = 1; c <= s.t; ++c) {
    if (auto edges = ExposedCopy(s, targets, c)) {
      return WinCertificate::Found(c, std::move(*edges));
    }
  }
  if (variant == GameVariant::kLocating &&
      ExclusionHolds(s, targets, route, threshold)) {
    return WinCertificate::Exclusion();
  }
  return std::nullopt;
}

namespace {

// {lo, hi}: the value is known to lie in [lo, hi].
struct Bounds {
  std::uint8_t lo = 0;
  std::uint8_t hi = 255;
};

class MinimaxSolver {
 public:
  MinimaxSolver(const TargetSpec& targets, GameVariant variant,
                const SolverOptions& options)
      : targets_(targets), variant_(variant), options_(options) {}

  SolverResult Solve(SolverState root) {
    SolverResult result;
    for (int d = 0;; ++d) {
      std::optional<Edge> move;
      if (WinWithin(root, d, &move)) {
        result.value = d;
        result.optimal_first_move = move;
        break;
      }
      RAMSEY_INVARIANT(d <= root.unexposed(),
                       "no win after exposing every edge");
    }
    result.nodes_explored = nodes_;
    result.cache_hits = hits_;
    return result;
  }

 private:
  bool IsWon(const SolverState& s) const {
    const MaskBoard board(s);
    if (variant_ == GameVariant::kCornering) {
      for (Color c = 1; c <= s.t; ++c) {
        if (options_.route == WinCheckRoute::kEnumeration) {
          if (CorneredHolds(s, targets_, c, options_.route)) return true;
          continue;
        }
        if (board.GoalHolds(c, targets_.ForColor(c), false)) return true;
        bool other = false;
        for (Color j = 1; j <= s.t && !other; ++j) {
          other = j != c && board.GoalHolds(j, targets_.ForColor(j), true);
        }
        if (!other) return true;
      }
      return false;
    }
    for (Color c = 1; c <= s.t; ++c) {
      if (board.GoalHolds(c, targets_.ForColor(c), false)) return true;
    }
    if (variant_ == GameVariant::kLocating) {
      return ExclusionHolds(s, targets_, options_.route);
    }
    return false;
  }

  // Builder moves ordered by the size of the largest monochromatic component
  // at either endpoint, then lexicographically.
  std::vector<Edge> OrderedMoves(const SolverState& s) const {
    std::vector<int> comp(static_cast<std::size_t>(s.n), 1);
    for (Color c = 1; c <= s.t; ++c) {
      DisjointSets sets(s.n);
      std::size_t idx = 0;
      for (Vertex u = 0; u < s.n; ++u) {
        for (Vertex v = u + 1; v < s.n; ++v, ++idx) {
          if (s.colors[idx] == c) sets.Unite(u, v);
        }
      }
      for (Vertex v = 0; v < s.n; ++v) {
        comp[static_cast<std::size_t>(v)] =
            std::max(comp[static_cast<std::size_t>(v)], sets.SizeOf(v));
      }
    }
    std::vector<std::pair<int, Edge>> scored;
    std::size_t idx = 0;
    for (Vertex u = 0; u < s.n; ++u) {
      for (Vertex v = u + 1; v < s.n; ++v, ++idx) {
        if (s.colors[idx] != kNoColor) continue;
        scored.emplace_back(-(comp[static_cast<std::size_t>(u)] +
                              comp[static_cast<std::size_t>(v)]),
                            Edge{u, v});
      }
    }
    std::sort(scored.begin(), scored.end());
    std::vector<Edge> out;
    out.reserve(scored.size());
    for (const auto& [score, e] : scored) out.push_back(e);
    return out;
  }

  bool WinWithin(SolverState& s, int d, std::optional<Edge>* first_move) {
    ++nodes_;
    const std::uint64_t key = CanonicalKey(s, options_.canonicalize);
    auto [it, inserted] = memo_.try_emplace(key);
    if (!inserted) {
      ++hits_;
      if (it->second.hi <= d && first_move == nullptr) return true;
      if (it->second.lo > d) return false;
    }
    if (it->second.lo == 0 && it->second.hi == 255) {
      if (IsWon(s)) {
        memo_[key] = Bounds{0, 0};
        return true;
      }
      it->second.lo = std::max<std::uint8_t>(it->second.lo, 1);
    }
    if (it->second.hi == 0) return true;
    if (d == 0) return false;
    for (const Edge& e : OrderedMoves(s)) {
      bool all = true;
      for (Color c = 1; c <= s.t && all; ++c) {
        s.Set(e, c);
        all = WinWithin(s, d - 1, nullptr);
        s.Set(e, kNoColor);
      }
      if (all) {
        Bounds& b = memo_[key];
        b.hi = std::min<std::uint8_t>(b.hi, static_cast<std::uint8_t>(d));
        if (first_move != nullptr) *first_move = e;
        return true;
      }
    }
    Bounds& b = memo_[key];
    b.lo = std::max<std::uint8_t>(b.lo, static_cast<std::uint8_t>(d + 1));
    return false;
  }

  const TargetSpec& targets_;
  GameVariant variant_;
  SolverOptions options_;
  std::unordered_map<std::uint64_t, Bounds> memo_;
  std::int64_t nodes_ = 0;
  std::int64_t hits_ = 0;
};

}  // namespace

SolverResult SolveValue(int n, int t, const TargetSpec& targets,
                        GameVariant variant, const SolverOptions& options) {
  if (n < 2) throw PreconditionError("solver needs n >= 2");
  if (targets.t() != t) throw PreconditionError("targets length differs from t");
  const double log2_states =
      static_cast<double>(PairCount(n)) * std::log2(static_cast<double>(t));
  const int bits = std::bit_width(static_cast<unsigned>(t));
  if (log2_states > options.max_log2_states + 1e-9 ||
      PairCount(n) * bits > 64) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "instance n=" << n << ", t=" << t << " has about 2^" << log2_states
        << " full colorings (limit 2^" << options.max_log2_states
        << "); refusing to search";
    throw IntractableError(msg.str());
  }
  if (variant == GameVariant::kClassic) {
    const std::optional<int> r = KnownRamseyNumber(targets);
    if (!r) {
      throw PreconditionError("classic value needs a known Ramsey number for " +
                              ToString(targets));
    }
    if (n < *r) {
      throw PreconditionError("classic value is undefined for n = " +
                              std::to_string(n) + " < R = " +
                              std::to_string(*r));
    }
  }
  MinimaxSolver solver(targets, variant, options);
  return solver.Solve(SolverState::Empty(n, t));
}

}  // namespace ramsey
