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

// Acceptance suite. Prints one PASS/FAIL line per criterion, followed by the
// individual checks behind it.
//
//   ramsey_acceptance [--only=1,4] [--known-failures=1]
//
// Exit status is 0 when every criterion outside --known-failures passes and
// every criterion inside it fails. A known failure that starts passing is
// reported as unexpected so the list gets pruned.

#include <algorithm>
#include <bit>
#include <cmath>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "oracles.h"
#include "ramsey/builders.h"
#include "ramsey/detection.h"
#include "ramsey/explore.h"
#include "ramsey/formulas.h"
#include "ramsey/game.h"
#include "ramsey/painters.h"
#include "ramsey/solver.h"
#include "ramsey/tree_extend.h"

namespace ramsey::acceptance {
namespace {

// Pinned limits.
constexpr double kC1RuntimeSeconds = 60.0;
constexpr double kC2RuntimeSeconds = 300.0;
constexpr int kC1MaxVertices = 8;
constexpr int kC1FullColoringsUpTo = 7;
constexpr int kC1SamplesPerTree = 400;
constexpr int kC1Colors = 4;
constexpr int kC1ReplyColors = 6;
constexpr std::int64_t kC1MinColorings = 10000;
constexpr int kRandomPainters2 = 1000;
constexpr int kRandomPainters3 = 100;
constexpr int kRandomPainters4 = 1000;
constexpr int kTree2ExhaustiveMax = 12;
constexpr int kTree3IndependentCoverUpTo = 200;
constexpr int kMatchingBruteForceEdges = 10;

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

class Outcome {
 public:
  // Records a named check; the first failure detail is kept.
  void Expect(const std::string& name, bool ok, const std::string& detail) {
    Check& c = Find(name);
    if (!ok && c.ok) c.detail = detail;
    c.ok = c.ok && ok;
    if (!ok) ++failures_[name];
  }
  // Context for a check; a recorded failure detail is kept in front.
  void Note(const std::string& name, const std::string& detail) {
    Check& c = Find(name);
    c.detail = c.ok ? detail : c.detail + "; " + detail;
  }
  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const Check& c) { return c.ok; });
  }
  void Print(std::ostream& out) const {
    for (const Check& c : checks_) {
      out << "    [" << (c.ok ? "ok" : "FAIL") << "] " << c.name;
      auto it = failures_.find(c.name);
      if (it != failures_.end()) out << " (" << it->second << " failures)";
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
  }

 private:
  Check& Find(const std::string& name) {
    for (Check& c : checks_) {
      if (c.name == name) return c;
    }
    checks_.push_back({name, true, ""});
    return checks_.back();
  }

  std::vector<Check> checks_;
  std::map<std::string, std::int64_t> failures_;
};

template <typename T>
std::string Str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

// ---------------------------------------------------------------------------
// Independent helpers.

double Lg0(double x) { return x == 0 ? 0.0 : std::log2(x); }

int TreeExtendLimit(int diameter) {
  return 1 + static_cast<int>(std::floor(Lg0(diameter - 1) + 1e-12));
}

double ComponentLimit(int m, int k) {
  if (m == 1 && k == 1) return 1.0;
  return 2.0 * k - 1.0 + (k - 3) * Lg0(m - 2);
}

int MatchingRamsey(const std::vector<int>& rs) {
  int top = 0;
  int tail = 0;
  for (int r : rs) {
    top = std::max(top, r);
    tail += r - 1;
  }
  return top + 1 + tail;
}

int GuaranteedTreeOrder(int n) { return n % 4 == 2 ? n / 2 + 1 : (n + 1) / 2; }

std::int64_t Pairs(std::int64_t n) { return n * (n - 1) / 2; }

class Dsu {
 public:
  explicit Dsu(int n) : parent_(static_cast<std::size_t>(n)), size_(parent_.size(), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      v = parent_[static_cast<std::size_t>(v)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
    }
    return v;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
  }
  int Largest() {
    int best = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (parent_[v] == static_cast<int>(v)) best = std::max(best, size_[v]);
    }
    return best;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Colors exposed in a transcript, keyed by edge.
std::unordered_map<std::uint64_t, Color> ExposedColors(const Transcript& tr) {
  std::unordered_map<std::uint64_t, Color> out;
  for (const TranscriptMove& m : tr.moves) out[m.edge.Key()] = m.color;
  return out;
}

// Checks a found-copy certificate against the transcript alone.
std::optional<std::string> CertificateProblem(const GameOutcome& outcome,
                                              const TargetSpec& targets) {
  const WinCertificate& cert = outcome.certificate;
  if (cert.kind != CertificateKind::kFoundCopy) return "not a found copy";
  if (cert.color < 1 || cert.color > targets.t()) return "color out of range";
  const auto colors = ExposedColors(outcome.transcript);
  for (const Edge& e : cert.edges) {
    auto it = colors.find(e.Key());
    if (it == colors.end()) return "edge " + ToString(e) + " never exposed";
    if (it->second != cert.color) return "edge " + ToString(e) + " off color";
  }
  const Goal goal = targets.ForColor(cert.color);
  if (goal.kind == GoalKind::kMatching) {
    std::set<Vertex> used;
    for (const Edge& e : cert.edges) {
      if (!used.insert(e.u).second || !used.insert(e.v).second) {
        return "certificate edges share a vertex";
      }
    }
    if (static_cast<int>(cert.edges.size()) < goal.size) return "matching too small";
    return std::nullopt;
  }
  if (!oracle::IsSingleTree(cert.edges)) return "certificate is not a tree";
  if (static_cast<int>(cert.edges.size()) + 1 < goal.size) return "tree too small";
  return std::nullopt;
}

std::string RsString(const std::vector<int>& rs) {
  std::string s;
  for (int r : rs) s += (s.empty() ? "" : ",") + Str(r);
  return "(" + s + ")";
}

// ---------------------------------------------------------------------------
// Criterion 1: TreeExtend over small trees.

std::vector<oracle::CEdge> Plain(const ColoredTree& t) {
  std::vector<oracle::CEdge> out;
  for (const ColoredEdge& ce : t.edges()) out.push_back({ce.edge.u, ce.edge.v, ce.color});
  return out;
}

Outcome Criterion1() {
  Outcome o;
  const auto start = Clock::now();
  std::int64_t trees = 0;
  std::int64_t colorings = 0;
  std::int64_t runs = 0;
  std::int64_t calls = 0;
  std::int64_t max_paths = 0;
  std::int64_t two_edge_runs = 0;
  for (int size = 2; size <= kC1MaxVertices; ++size) {
    const auto shapes = FreeTrees(size);
    o.Expect("every isomorphism type", static_cast<int>(shapes.size()) ==
                                           oracle::UnlabelledTreeCount(size),
             Str(shapes.size()) + " trees on " + Str(size) + " vertices");
    for (const auto& edges : shapes) {
      ++trees;
      const auto all =
          size <= kC1FullColoringsUpTo
              ? ProperColorings(edges, kC1Colors)
              : SampleProperColorings(edges, kC1Colors, kC1SamplesPerTree,
                                      static_cast<std::uint64_t>(trees));
      if (size <= kC1FullColoringsUpTo) {
        o.Expect("all colorings on small trees",
                 static_cast<std::int64_t>(all.size()) ==
                     oracle::ProperColoringCount(edges, kC1Colors),
                 "count mismatch on " + Str(size) + " vertices");
      }
      const int limit = TreeExtendLimit(oracle::TreeDiameter(edges));
      for (const auto& coloring : all) {
        ++colorings;
        std::vector<ColoredEdge> ces;
        for (std::size_t i = 0; i < edges.size(); ++i) ces.push_back({edges[i], coloring[i]});
        const ColoredTree tree(ces);
        const std::vector<oracle::CEdge> before = Plain(tree);
        const std::int64_t paths = ExploreTreeExtend(
            tree, kC1ReplyColors, [&](const TreeExtendCase& c) {
              ++runs;
              const std::vector<oracle::CEdge> after = Plain(c.result.tree);
              const oracle::CEdge xy{c.xy.edge.u, c.xy.edge.v, c.xy.color};
              const auto post = oracle::ExtensionProblem(before, xy, after);
              o.Expect("extension postconditions", !post,
                       post ? *post + " from " + ToString(tree) : "");
              o.Expect("query bound 1+floor(lg(diam-1))",
                       c.result.queries <= limit,
                       ToString(tree) + " used " + Str(c.result.queries) +
                           " > " + Str(limit));
              if (before.size() == 1) {
                const auto p = oracle::AllowedValuesClause1(after);
                o.Expect("allowed values, one-edge trees", !p,
                         p ? *p + " from " + ToString(tree) : "");
              }
              if (before.size() == 2) {
                ++two_edge_runs;
                const auto p = oracle::AllowedValuesClause2(after);
                o.Expect("allowed values, two-edge trees", !p,
                         p ? *p + " from " + ToString(tree) + " with xy color " +
                                 Str(c.xy.color)
                           : "");
              }
            });
        calls += kC1ReplyColors - static_cast<int>(tree.ColorSet().size());
        max_paths = std::max(max_paths, paths);
      }
    }
  }
  o.Expect("colorings sampled", colorings >= kC1MinColorings,
           Str(colorings) + " colorings");
  o.Note("colorings sampled", Str(trees) + " trees, " + Str(colorings) +
                                  " colorings, " + Str(runs) + " reply paths");
  o.Note("allowed values, two-edge trees",
         Str(two_edge_runs) + " two-edge runs checked");
  const double seconds = Since(start);
  o.Expect("runtime under 60 s", seconds < kC1RuntimeSeconds, Str(seconds) + " s");
  o.Note("runtime under 60 s", Str(seconds) + " s");
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 2: matchings.

void CheckForestAccounting(Outcome& o, const MatchingReport& report,
                           std::int64_t queries, const std::string& where) {
  std::int64_t total = 0;
  for (const ForestComponent& c : report.forest.components()) {
    const int m = c.tree.EdgeCount();
    const int k = static_cast<int>(c.tree.ColorSet().size());
    o.Expect("per-component accounting q(T) <= q(e(T), |chi(T)|)",
             static_cast<double>(c.queries) <= ComponentLimit(m, k) + 1e-9,
             where + ": component with " + Str(m) + " edges, " + Str(k) +
                 " colors used " + Str(c.queries));
    total += c.queries;
  }
  o.Expect("per-component accounting q(T) <= q(e(T), |chi(T)|)",
           total == queries, where + ": component totals disagree with queries");
}

Outcome Criterion2() {
  Outcome o;
  const auto start = Clock::now();
  // Two colors, exhaustive over painter replies.
  for (int r = 2; r <= 6; ++r) {
    const int n = 3 * r - 1;
    const TargetSpec targets = TargetSpec::Matchings({r, r});
    const int limit = n % 3 == 0 ? n : n - 1;
    const ReplyTreeSummary s = ExploreBuilder(
        "matching", n, 2, targets, GameVariant::kClassic,
        [&](const GameOutcome& out, const GameState& state) {
          const auto p = CertificateProblem(out, targets);
          o.Expect("t=2 valid certificates", !p, p ? *p : "");
          o.Expect("t=2 queries <= n, n-1 when 3 does not divide n",
                   state.queries() <= limit,
                   "n=" + Str(n) + " used " + Str(state.queries()));
        });
    o.Expect("t=2 reply tree has at most 2^n paths",
             s.paths <= (std::int64_t{1} << n), "n=" + Str(n) + ": " + Str(s.paths));
    o.Note("t=2 reply tree has at most 2^n paths",
           "r=" + Str(r) + " n=" + Str(n) + " paths " + Str(s.paths) +
               " max queries " + Str(s.max_queries));
  }

  // Three and four colors.
  std::int64_t games = 0;
  for (int t = 3; t <= 4; ++t) {
    std::vector<int> rs(static_cast<std::size_t>(t), 1);
    for (;;) {
      const TargetSpec targets = TargetSpec::Matchings(rs);
      const int big_r = MatchingRamsey(rs);
      for (int n = big_r; n <= big_r + 20; ++n) {
        const std::int64_t limit = t == 3 ? (5 * n) / 4 : (8 * n) / 5;
        const std::string where = "t=" + Str(t) + " r=" + RsString(rs) + " n=" + Str(n);
        for (int p = 0; p <= kRandomPainters2; ++p) {
          GameState state = NewGame(n, t, targets, GameVariant::kClassic);
          auto report = std::make_shared<MatchingReport>();
          auto builder = MakeMatchingBuilder(report);
          std::unique_ptr<PainterStrategy> painter;
          if (p < kRandomPainters2) {
            painter = std::make_unique<RandomPainter>(t, p);
          } else {
            painter = std::make_unique<MatchingAdversary>(n, rs, GameVariant::kClassic);
          }
          const GameOutcome out = RunGame(*builder, *painter, state);
          ++games;
          const auto problem = CertificateProblem(out, targets);
          o.Expect("t=3,4 valid certificates", !problem,
                   problem ? where + ": " + *problem : "");
          o.Expect("t=3 within floor(5n/4), t=4 within floor(8n/5)",
                   state.queries() <= limit,
                   where + " " + painter->Name() + " used " +
                       Str(state.queries()) + " > " + Str(limit));
          CheckForestAccounting(o, *report, state.queries(), where);
        }
      }
      std::size_t i = 0;
      while (i < rs.size() && rs[i] == 3) rs[i++] = 1;
      if (i == rs.size()) break;
      ++rs[i];
    }
  }
  o.Note("t=3,4 valid certificates", Str(games) + " games");
  const double seconds = Since(start);
  o.Expect("runtime under 5 min", seconds < kC2RuntimeSeconds, Str(seconds) + " s");
  o.Note("runtime under 5 min", Str(seconds) + " s");
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 3: two-color spanning trees.

TargetSpec Trees(int k, int t) { return TargetSpec::Uniform(Goal::Tree(k), t); }

void CheckSpanning(Outcome& o, const std::string& check, const GameOutcome& out,
                   const GameState& state, int n, const std::string& where) {
  const auto p = CertificateProblem(out, Trees(n, 2));
  o.Expect(check, !p && static_cast<int>(out.certificate.edges.size()) == n - 1,
           where + ": " + (p ? *p : "not spanning"));
  o.Expect(check, state.queries() <= std::max<std::int64_t>(1, 2 * n - 3),
           where + ": " + Str(state.queries()) + " queries");
}

Outcome Criterion3() {
  Outcome o;
  for (int n = 2; n <= kTree2ExhaustiveMax; ++n) {
    const ReplyTreeSummary s = ExploreBuilder(
        "tree2", n, 2, Trees(n, 2), GameVariant::kClassic,
        [&](const GameOutcome& out, const GameState& state) {
          CheckSpanning(o, "exhaustive n <= 12: spanning tree within 2n-3",
                        out, state, n, "n=" + Str(n));
        });
    o.Note("exhaustive n <= 12: spanning tree within 2n-3",
           "n=" + Str(n) + " paths " + Str(s.paths));
  }
  std::vector<int> sizes;
  for (int n = 2; n <= 64; ++n) sizes.push_back(n);
  for (int n : {100, 128, 250, 500, 1000, 2000, 5000, 10000}) sizes.push_back(n);
  std::int64_t games = 0;
  for (int n : sizes) {
    for (int seed = 0; seed < kRandomPainters3; ++seed) {
      GameState state = NewGame(n, 2, Trees(n, 2), GameVariant::kClassic);
      auto builder = MakeTree2Builder();
      RandomPainter painter(2, seed);
      const GameOutcome out = RunGame(*builder, painter, state);
      ++games;
      CheckSpanning(o, "random painters up to n = 10^4", out, state, n,
                    "n=" + Str(n) + " seed " + Str(seed));
    }
    GameState state = NewGame(n, 2, Trees(n, 2), GameVariant::kClassic);
    auto builder = MakeTree2Builder();
    Tree2Adversary adversary(n);
    const GameOutcome out = RunGame(*builder, adversary, state);
    CheckSpanning(o, "adversary forces exactly 2n-3", out, state, n, "n=" + Str(n));
    o.Expect("adversary forces exactly 2n-3",
             state.queries() == std::max(1, 2 * n - 3),
             "n=" + Str(n) + " used " + Str(state.queries()));
  }
  o.Note("random painters up to n = 10^4", Str(games) + " games");
  for (int n = 2; n <= 4; ++n) {
    const int v = SolveValue(n, 2, Trees(n, 2), GameVariant::kClassic).value;
    o.Expect("solver value 2n-3 for n = 2, 3, 4", v == 2 * n - 3,
             "n=" + Str(n) + " value " + Str(v));
  }
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 4: three-color trees.

// Disjointness and coverage of the six sets, checked directly.
std::optional<std::string> CoverProblem(const SixCover& cover, int n) {
  std::vector<std::vector<char>> in(6, std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < 6; ++i) {
    for (Vertex v : cover.sets[static_cast<std::size_t>(i)]) {
      if (v < 0 || v >= n) return "vertex off the board";
      in[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int pair = 0; pair < 3; ++pair) {
    const auto& a = in[static_cast<std::size_t>(2 * pair)];
    const auto& b = in[static_cast<std::size_t>(2 * pair + 1)];
    for (int v = 0; v < n; ++v) {
      if (a[static_cast<std::size_t>(v)] && b[static_cast<std::size_t>(v)]) {
        return "sets " + Str(2 * pair + 1) + " and " + Str(2 * pair + 2) +
               " share vertex " + Str(v);
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool covered = false;
      for (int i = 0; i < 6 && !covered; ++i) {
        covered = in[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] &&
                  in[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
      }
      if (!covered) return "pair " + Str(u) + "-" + Str(v) + " uncovered";
    }
  }
  return std::nullopt;
}

void CheckTree3(Outcome& o, const std::string& check, const GameOutcome& out,
                const GameState& state, int n, const std::string& where) {
  const int k = GuaranteedTreeOrder(n);
  const auto p = CertificateProblem(out, Trees(k, 3));
  o.Expect(check, !p, where + ": " + (p ? *p : ""));
  o.Expect(check, state.queries() <= 5 * (n - 1),
           where + ": " + Str(state.queries()) + " queries > 5(n-1)");
}

Outcome Criterion4() {
  Outcome o;
  for (int n = 3; n <= 4; ++n) {
    const int k = GuaranteedTreeOrder(n);
    const ReplyTreeSummary s = ExploreBuilder(
        "tree3", n, 3, Trees(k, 3), GameVariant::kClassic,
        [&](const GameOutcome& out, const GameState& state) {
          CheckTree3(o, "exhaustive n = 3, 4", out, state, n, "n=" + Str(n));
        });
    o.Note("exhaustive n = 3, 4", "n=" + Str(n) + " paths " + Str(s.paths));
  }
  std::vector<int> sizes;
  for (int n = 3; n <= 40; ++n) sizes.push_back(n);
  for (int n : {50, 64, 100, 128, 250, 500, 1000, 2000}) sizes.push_back(n);
  std::int64_t games = 0;
  for (int n : sizes) {
    const int k = GuaranteedTreeOrder(n);
    for (int p = 0; p <= kRandomPainters4; ++p) {
      GameState state = NewGame(n, 3, Trees(k, 3), GameVariant::kClassic);
      auto report = std::make_shared<Tree3Report>();
      auto builder = MakeTree3Builder(report);
      std::unique_ptr<PainterStrategy> painter;
      if (p < kRandomPainters4) {
        painter = std::make_unique<RandomPainter>(3, p);
      } else {
        painter = std::make_unique<Tree3Adversary>(n);
      }
      const std::string where = "n=" + Str(n) + " " + painter->Name();
      GameOutcome out;
      try {
        out = RunGame(*builder, *painter, state);
      } catch (const std::exception& e) {
        o.Expect("six-cover hypotheses on every run", false, where + ": " + e.what());
        continue;
      }
      ++games;
      CheckTree3(o, "random painters and adversary up to n = 2000", out, state,
                 n, where);
      o.Expect("six-cover hypotheses on every run",
               CheckSixCoverHypotheses(report->cover, n) == SixCoverFailure::kNone,
               where);
      if (n <= kTree3IndependentCoverUpTo) {
        const auto p2 = CoverProblem(report->cover, n);
        o.Expect("six-cover hypotheses on every run", !p2,
                 p2 ? where + ": " + *p2 : "");
      }
    }
  }
  o.Note("random painters and adversary up to n = 2000", Str(games) + " games");
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 5: exact small values.

Outcome Criterion5() {
  Outcome o;
  const TargetSpec m = TargetSpec::Matchings({2, 2});
  const int loc = SolveValue(4, 2, m, GameVariant::kLocating).value;
  o.Expect("Matching(2,2), n=4, locating = C(4,2) = 6", loc == Pairs(4),
           "value " + Str(loc));
  o.Note("Matching(2,2), n=4, locating = C(4,2) = 6", "value " + Str(loc));
  const int cor = SolveValue(4, 2, m, GameVariant::kCornering).value;
  const int n = 4;
  const int lower = (2 * n + 1) * (n - 1) / 9;
  o.Expect("Matching(2,2), n=4, cornering >= (2n+1)(n-1)/9 = 3", cor >= lower,
           "value " + Str(cor));
  o.Note("Matching(2,2), n=4, cornering >= (2n+1)(n-1)/9 = 3",
         "value " + Str(cor) + ", lower bound " + Str(lower));
  const int trees = SolveValue(4, 3, Trees(3, 3), GameVariant::kCornering).value;
  const int tree_lower = 6 * (n / 4) * (n / 4);
  o.Expect("Tree(3), t=3, n=4, cornering = 6 floor(n/4)^2 = 6",
           trees == tree_lower && trees == Pairs(4), "value " + Str(trees));
  o.Note("Tree(3), t=3, n=4, cornering = 6 floor(n/4)^2 = 6", "value " + Str(trees));
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 6: extremal colorings.

std::vector<Edge> Class(const FullColoring& f, Color c) {
  std::vector<Edge> out;
  for (const Edge& e : AllEdges(f.n())) {
    if (f.At(e) == c) out.push_back(e);
  }
  return out;
}

// A matching returned by the library, re-checked edge by edge.
bool HasVerifiedMatching(const FullColoring& f, Color c, int r) {
  const std::vector<Edge> edges = Class(f, c);
  const std::vector<Edge> m = MaxMatching(SimpleGraph::FromEdges(f.n(), edges));
  std::set<Vertex> used;
  for (const Edge& e : m) {
    if (f.At(e) != c) return false;
    if (!used.insert(e.u).second || !used.insert(e.v).second) return false;
  }
  return static_cast<int>(m.size()) >= r;
}

int LargestClassComponent(const FullColoring& f, Color c) {
  Dsu dsu(f.n());
  for (const Edge& e : AllEdges(f.n())) {
    if (f.At(e) == c) dsu.Union(e.u, e.v);
  }
  return dsu.Largest();
}

Outcome Criterion6() {
  Outcome o;
  std::int64_t flips = 0;
  for (int t = 2; t <= 5; ++t) {
    for (int r = 2; r <= 6; ++r) {
      const FullColoring f = MatchingPartitionColoring(t, r);
      const int n = f.n();
      const std::vector<int> cls = PartitionClasses(n, std::vector<int>(static_cast<std::size_t>(t), r));
      const std::string where = "t=" + Str(t) + " r=" + Str(r);
      o.Expect("partition coloring has n = (t+1)r - t", n == (t + 1) * r - t, where);
      // Upper bound on every color class by a small support or cover.
      for (Color c = 1; c <= t; ++c) {
        std::set<Vertex> support;
        bool covered = true;
        for (const Edge& e : Class(f, c)) {
          support.insert(e.u);
          support.insert(e.v);
          if (c >= 2) {
            covered = covered && (cls[static_cast<std::size_t>(e.u)] == c ||
                                  cls[static_cast<std::size_t>(e.v)] == c);
          }
        }
        const int cover = static_cast<int>(std::count(cls.begin(), cls.end(), c));
        const bool bounded = c == 1 ? static_cast<int>(support.size()) <= 2 * r - 1
                                    : covered && cover <= r - 1;
        o.Expect("per-color max matching <= r-1", bounded,
                 where + " color " + Str(c));
        o.Expect("per-color max matching <= r-1",
                 static_cast<int>(MaxMatching(SimpleGraph::FromEdges(n, Class(f, c))).size()) <= r - 1,
                 where + " color " + Str(c));
      }
      // Named flips.
      for (const Edge& e : AllEdges(n)) {
        const bool inside_v1 = cls[static_cast<std::size_t>(e.u)] == 1 &&
                               cls[static_cast<std::size_t>(e.v)] == 1;
        if (!inside_v1) {
          ++flips;
          o.Expect("named single-edge flips contain rK2",
                   HasVerifiedMatching(f.Flipped(e, 1), 1, r),
                   where + " flip " + ToString(e) + " to 1");
        }
        for (Color c = 2; c <= t; ++c) {
          if (cls[static_cast<std::size_t>(e.u)] == c ||
              cls[static_cast<std::size_t>(e.v)] == c) {
            continue;
          }
          ++flips;
          o.Expect("named single-edge flips contain rK2",
                   HasVerifiedMatching(f.Flipped(e, c), c, r),
                   where + " flip " + ToString(e) + " to " + Str(c));
        }
      }
    }
  }
  o.Note("named single-edge flips contain rK2", Str(flips) + " flips");

  for (int n = 3; n <= 200; ++n) {
    const FullColoring f = BlownK4Coloring(n);
    int best = 0;
    for (Color c = 1; c <= 3; ++c) best = std::max(best, LargestClassComponent(f, c));
    o.Expect("blown-up K4 has no component above k(n), 3 <= n <= 200",
             best <= GuaranteedTreeOrder(n),
             "n=" + Str(n) + " component " + Str(best));
  }
  std::int64_t recolors = 0;
  for (int n = 3; n <= 50; ++n) {
    const FullColoring f = BlownK4Coloring(n);
    const std::vector<int> cluster = BlownK4Clusters(n);
    for (const Edge& e : AllEdges(n)) {
      if (cluster[static_cast<std::size_t>(e.u)] == cluster[static_cast<std::size_t>(e.v)]) continue;
      for (Color c = 1; c <= 3; ++c) {
        if (c == f.At(e)) continue;
        ++recolors;
        o.Expect("cross-edge recolors give a spanning tree, 3 <= n <= 50",
                 LargestClassComponent(f.Flipped(e, c), c) == n,
                 "n=" + Str(n) + " edge " + ToString(e) + " to " + Str(c));
      }
    }
  }
  o.Note("cross-edge recolors give a spanning tree, 3 <= n <= 50",
         Str(recolors) + " recolors");
  return o;
}

// ---------------------------------------------------------------------------
// Criteria 7 and 8 share the solved instances.

struct Instance {
  int n;
  int t;
  TargetSpec targets;
  std::optional<int> ramsey;
};

std::string Describe(const Instance& i) {
  return "n=" + Str(i.n) + " t=" + Str(i.t) + " " + ToString(i.targets);
}

std::vector<Instance> SolvedInstances() {
  std::vector<Instance> out;
  const std::vector<std::vector<int>> rss = {{1, 1}, {1, 2}, {2, 1}, {2, 2},
                                             {1, 3}, {3, 1}, {1, 1, 1}, {1, 1, 2}};
  for (const auto& rs : rss) {
    const int t = static_cast<int>(rs.size());
    for (int n = 2; n <= (t == 2 ? 5 : 4); ++n) {
      out.push_back({n, t, TargetSpec::Matchings(rs), MatchingRamsey(rs)});
    }
  }
  for (int k = 2; k <= 5; ++k) {
    for (int n = 2; n <= 5; ++n) out.push_back({n, 2, Trees(k, 2), k});
  }
  for (int k = 2; k <= 3; ++k) {
    for (int n = 2; n <= 4; ++n) {
      // K4 splits into three perfect matchings, so a 3-vertex path needs K5.
      out.push_back({n, 3, Trees(k, 3), k == 2 ? 2 : 5});
    }
  }
  return out;
}

struct Values {
  std::optional<int> classic;
  int locating = 0;
  int cornering = 0;
};

Values SolveAll(const Instance& i, bool canonical) {
  SolverOptions options;
  options.canonicalize = canonical;
  Values v;
  v.locating = SolveValue(i.n, i.t, i.targets, GameVariant::kLocating, options).value;
  v.cornering = SolveValue(i.n, i.t, i.targets, GameVariant::kCornering, options).value;
  if (i.ramsey && i.n >= *i.ramsey) {
    v.classic = SolveValue(i.n, i.t, i.targets, GameVariant::kClassic, options).value;
  }
  return v;
}

Outcome Criterion7() {
  Outcome o;
  std::int64_t solved = 0;
  std::int64_t oracle_checked = 0;
  for (const Instance& i : SolvedInstances()) {
    const Values v = SolveAll(i, false);
    ++solved;
    const std::string where = Describe(i);
    o.Expect("cornering <= locating on every instance",
             v.cornering <= v.locating,
             where + ": cornering " + Str(v.cornering) + ", locating " + Str(v.locating));
    if (i.ramsey && i.n >= *i.ramsey) {
      const int big_n = *i.ramsey;
      o.Expect("locating = cornering when n >= R", v.locating == v.cornering,
               where + ": " + Str(v.locating) + " vs " + Str(v.cornering));
      o.Expect("classic = locating when n >= R", v.classic == v.locating,
               where);
      o.Expect("R/2 <= value <= C(R,2) when n >= R",
               2 * v.locating >= big_n && v.locating <= Pairs(big_n),
               where + ": value " + Str(v.locating) + ", R " + Str(big_n));
    }
    if (Pairs(i.n) <= 6) {
      ++oracle_checked;
      for (const GameVariant var : {GameVariant::kLocating, GameVariant::kCornering}) {
        const int expect = oracle::GameValue(i.n, i.t, i.targets, var);
        const int got = var == GameVariant::kLocating ? v.locating : v.cornering;
        o.Expect("solver agrees with brute-force minimax on n <= 4",
                 got == expect,
                 where + " " + std::string(ToString(var)) + ": " + Str(got) +
                     " vs " + Str(expect));
      }
    }
  }
  o.Note("cornering <= locating on every instance", Str(solved) + " instances");
  o.Note("solver agrees with brute-force minimax on n <= 4",
         Str(oracle_checked) + " instances");
  return o;
}

Outcome Criterion8() {
  Outcome o;
  // Every edge set of size <= 10 on up to 6 vertices.
  std::int64_t graphs = 0;
  for (int n = 2; n <= 6; ++n) {
    const std::vector<Edge> all = AllEdges(n);
    const std::uint32_t full = 1u << all.size();
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (std::popcount(mask) > kMatchingBruteForceEdges) continue;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1u) edges.push_back(all[i]);
      }
      ++graphs;
      const int got = static_cast<int>(MaxMatching(SimpleGraph::FromEdges(n, edges)).size());
      o.Expect("max matching = subset enumeration, <= 10 edges",
               got == oracle::MaxMatchingSize(edges),
               "n=" + Str(n) + " mask " + Str(mask));
    }
  }
  // Sparse graphs on more vertices: every graph with <= 10 edges is one of
  // these up to isolated vertices and relabeling.
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100000; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 14);
    std::vector<Edge> all = AllEdges(n);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(rng() % (kMatchingBruteForceEdges + 1)));
    ++graphs;
    const int got = static_cast<int>(MaxMatching(SimpleGraph::FromEdges(n, all)).size());
    o.Expect("max matching = subset enumeration, <= 10 edges",
             got == oracle::MaxMatchingSize(all), "random n=" + Str(n));
  }
  o.Note("max matching = subset enumeration, <= 10 edges", Str(graphs) + " graphs");

  std::int64_t instances = 0;
  for (const Instance& i : SolvedInstances()) {
    ++instances;
    const Values plain = SolveAll(i, false);
    const Values canon = SolveAll(i, true);
    o.Expect("canonicalization leaves every value unchanged",
             plain.classic == canon.classic && plain.locating == canon.locating &&
                 plain.cornering == canon.cornering,
             Describe(i));
  }
  for (int n = 2; n <= 4; ++n) {
    const TargetSpec t = Trees(n, 2);
    SolverOptions on;
    on.canonicalize = true;
    o.Expect("canonicalization leaves every value unchanged",
             SolveValue(n, 2, t, GameVariant::kClassic).value ==
                 SolveValue(n, 2, t, GameVariant::kClassic, on).value,
             "tree n=" + Str(n));
  }
  o.Note("canonicalization leaves every value unchanged",
         Str(instances) + " instances, all variants");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

std::set<int> ParseList(const std::string& text) {
  std::set<int> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    if (!part.empty()) out.insert(std::stoi(part));
  }
  return out;
}

int Main(int argc, char** argv) {
  std::set<int> known;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--known-failures=", 0) == 0) {
      known = ParseList(arg.substr(17));
    } else if (arg.rfind("--only=", 0) == 0) {
      only = ParseList(arg.substr(7));
    } else {
      std::cerr << "usage: ramsey_acceptance [--only=LIST] [--known-failures=LIST]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria = {
      {1, "TreeExtend over every small tree, coloring and reply", Criterion1},
      {2, "matching builder bounds", Criterion2},
      {3, "two-color spanning tree value 2n-3", Criterion3},
      {4, "three-color tree within 5(n-1)", Criterion4},
      {5, "exact small values", Criterion5},
      {6, "extremal coloring validators", Criterion6},
      {7, "variant coherence", Criterion7},
      {8, "oracle equivalence", Criterion8},
  };
  bool ok = true;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.Expect("completed without exceptions", false, e.what());
    }
    const bool passed = outcome.passed();
    const bool expected_fail = known.count(c.id) > 0;
    std::cout << "criterion " << c.id << ": " << (passed ? "PASS" : "FAIL");
    if (expected_fail) std::cout << (passed ? " (listed as known failure)" : " (known failure)");
    std::cout << "  " << c.title << " [" << Str(Since(start)) << " s]\n";
    outcome.Print(std::cout);
    std::cout.flush();
    ok = ok && (passed != expected_fail);
  }
  return ok ? 0 : 1;
}

}  // namespace
}  // namespace ramsey::acceptance

int main(int argc, char** argv) { return ramsey::acceptance::Main(argc, argv); }
