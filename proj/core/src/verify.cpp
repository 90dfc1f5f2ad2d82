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

#include "ramsey/verify.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "ramsey/builders.h"
#include "ramsey/comp_extend.h"
#include "ramsey/detection.h"
#include "ramsey/errors.h"
#include "ramsey/formulas.h"
#include "ramsey/procedure.h"
#include "ramsey/solver.h"

namespace ramsey {

std::vector<std::string> VerifySuiteNames() {
  return {"treeextend", "compextend", "forest", "colorings", "solver-cross"};
}

std::optional<std::string> AllowedValuesProblem(const ColoredTree& before,
                                                const ColoredTree& after) {
  const int k = static_cast<int>(after.ColorSet().size());
  const int m = after.EdgeCount();
  if (before.EdgeCount() == 1) {
    if (k == 2 && m == 2 && after.IsPath()) return std::nullopt;
    if (k == 3 && m == 3 && after.IsPath()) return std::nullopt;
    return "e(T) = 1 but T* = " + ToString(after);
  }
  if (before.EdgeCount() == 2) {
    if (k >= 4) return std::nullopt;
    if (k == 3 && m == 3 && after.IsStar()) return std::nullopt;
    return "e(T) = 2 but T* = " + ToString(after);
  }
  return std::nullopt;
}

TreeExtendTally RunTreeExtendSweep(int max_vertices, int full_up_to,
                                   int colors, int sample_per_tree, int t,
                                   std::uint64_t seed) {
  TreeExtendTally tally;
  for (int size = 2; size <= max_vertices; ++size) {
    for (const auto& edges : FreeTrees(size)) {
      ++tally.trees;
      const auto colorings =
          size <= full_up_to
              ? ProperColorings(edges, colors)
              : SampleProperColorings(edges, colors, sample_per_tree,
                                      seed * 1000003ULL + tally.trees);
      for (const auto& coloring : colorings) {
        ++tally.colorings;
        std::vector<ColoredEdge> ces;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          ces.push_back({edges[i], coloring[i]});
        }
        const ColoredTree tree(std::move(ces));
        const int bound = TreeExtendQueryBound(tree.Diameter());
        try {
          tally.runs += ExploreTreeExtend(tree, t, [&](const TreeExtendCase& c) {
            ++tally.exits[static_cast<int>(c.result.exit)];
            if (auto p = TreeExtendProblem(c.before, c.xy, c.result.tree)) {
              if (tally.postcondition_failures++ == 0) {
                tally.first_postcondition_failure = *p;
              }
            }
            if (c.result.queries > bound) {
              if (tally.bound_failures++ == 0) {
                tally.first_bound_failure =
                    ToString(c.before) + " used " +
                    std::to_string(c.result.queries) + " > " +
                    std::to_string(bound);
              }
            }
            if (auto p = AllowedValuesProblem(c.before, c.result.tree)) {
              if (tally.allowed_value_failures++ == 0) {
                tally.first_allowed_value_failure =
                    *p + " from T = " + ToString(c.before) + ", xy color " +
                    std::to_string(c.xy.color);
              }
            }
          });
        } catch (const InvariantViolation& e) {
          if (tally.postcondition_failures++ == 0) {
            tally.first_postcondition_failure = e.what();
          }
        }
      }
    }
  }
  return tally;
}

namespace {

std::string Str(std::int64_t v) { return std::to_string(v); }

class Checker {
 public:
  explicit Checker(SuiteReport& report) : report_(report) {}

  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    report_.passed = false;
    if (++failures_ <= 10) report_.lines.push_back("FAIL " + what);
  }
  void Note(const std::string& line) { report_.lines.push_back(line); }

 private:
  SuiteReport& report_;
  int failures_ = 0;
};

void TreeExtendSuite(const VerifyOptions& options, SuiteReport& report) {
  Checker check(report);
  const TreeExtendTally tally =
      options.quick ? RunTreeExtendSweep(6, 5, 4, 50, 5)
                    : RunTreeExtendSweep(8, 6, 4, 400, 6);
  check.Note("trees " + Str(tally.trees) + ", colorings " +
             Str(tally.colorings) + ", runs " + Str(tally.runs));
  check.Note("exits join " + Str(tally.exits[0]) + ", append " +
             Str(tally.exits[1]) + ", swap-leaf " + Str(tally.exits[2]) +
             ", swap-cached " + Str(tally.exits[3]));
  check.Expect(tally.postcondition_failures == 0,
               Str(tally.postcondition_failures) +
                   " postcondition failures, first: " +
                   tally.first_postcondition_failure);
  check.Expect(tally.bound_failures == 0,
               Str(tally.bound_failures) + " query-bound failures, first: " +
                   tally.first_bound_failure);
  check.Expect(tally.allowed_value_failures == 0,
               Str(tally.allowed_value_failures) +
                   " allowed-values failures, first: " +
                   tally.first_allowed_value_failure);
}

void CompExtendSuite(const VerifyOptions& options, SuiteReport& report) {
  Checker check(report);
  const int max_n = options.quick ? 5 : 6;
  const int max_side = options.quick ? 3 : 4;
  std::int64_t cases = 0;
  std::int64_t runs = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (int a = 0; a <= n - 1; ++a) {
      for (int b = 0; a + b <= std::min(n - 1, max_side); ++b) {
        ColorRoles roles{1, 2, 3};
        do {
          ++cases;
          std::vector<Vertex> v1;
          std::vector<Vertex> v2;
          for (Vertex u = 1; u <= a; ++u) v1.push_back(u);
          for (Vertex u = a + 1; u <= a + b; ++u) v2.push_back(u);
          const std::int64_t cap = 2LL * (a + b);
          try {
            runs += ForEachReplySequence(3, [&](ScriptedPainter& painter) {
              GameState state(n, 3, TargetSpec::Uniform(Goal::Tree(2), 3),
                              GameVariant::kLocating);
              for (Vertex u = 1; u < n; ++u) {
                const int slot = u <= a ? 0 : (u <= a + b ? 1 : 2);
                state.Record(Edge{0, u}, roles[static_cast<std::size_t>(slot)]);
              }
              const CompExtendResult r =
                  Drive(CompExtend(state, v1, v2, roles), state, painter);
              check.Expect(r.queries <= cap,
                           "CompExtend used " + Str(r.queries) + " > " +
                               Str(cap));
              check.Expect(r.loops <= cap + 1, "CompExtend loop bound");
              auto p = CompTripleProblem(state, v1, v2, roles, r.triple);
              check.Expect(!p, "CompExtend postcondition: " + p.value_or(""));
            });
          } catch (const InvariantViolation& e) {
            check.Expect(false, e.what());
          }
        } while (std::next_permutation(roles.begin(), roles.end()));
      }
    }
  }
  check.Note("setups " + Str(cases) + ", runs " + Str(runs));
}

struct MatchingRunCheck {
  Checker& check;
  std::int64_t runs = 0;
  std::int64_t worst_margin = std::numeric_limits<std::int64_t>::max();

  void operator()(const GameState& state, const MatchingReport& report) {
    ++runs;
    const int n = state.n();
    const int t = state.t();
    const std::int64_t budget = MatchingQueryBudget(t, n);
    worst_margin = std::min(worst_margin, budget - state.queries());
    check.Expect(state.queries() <= budget,
                 "n=" + Str(n) + " t=" + Str(t) + " used " +
                     Str(state.queries()) + " > " + Str(budget));
    if (t == 2 && n % 3 != 0) {
      check.Expect(state.queries() <= n - 1,
                   "t=2 n=" + Str(n) + " used more than n - 1");
    }
    const GoodForest& f = report.forest;
    check.Expect(!f.Problem(t), "final forest is not good");
    check.Expect(f.VertexCount() >= n - 1, "final forest misses 2 vertices");
    for (const ForestComponent& comp : f.components()) {
      const int m = comp.tree.EdgeCount();
      const int k = static_cast<int>(comp.tree.ColorSet().size());
      check.Expect(AllowedForestShape(m, k),
                   "shape (" + Str(m) + "," + Str(k) + ")");
      check.Expect(comp.queries <= QBound(m, k) + 1e-9,
                   "q(T) = " + Str(comp.queries) + " exceeds q(" + Str(m) +
                       "," + Str(k) + ")");
    }
  }
};

void RunMatchingGame(int n, const std::vector<int>& rs,
                     PainterStrategy& painter, MatchingRunCheck& sink) {
  const int t = static_cast<int>(rs.size());
  GameState state =
      NewGame(n, t, TargetSpec::Matchings(rs), GameVariant::kClassic);
  auto report = std::make_shared<MatchingReport>();
  auto builder = MakeMatchingBuilder(report);
  RunGame(*builder, painter, state);
  sink(state, *report);
}

void ForestSuite(const VerifyOptions& options, SuiteReport& report) {
  Checker check(report);
  MatchingRunCheck sink{check};
  try {
    for (int r = 2; r <= (options.quick ? 3 : 5); ++r) {
      const std::vector<int> rs{r, r};
      ForEachReplySequence(2, [&](ScriptedPainter& p) {
        RunMatchingGame(3 * r - 1, rs, p, sink);
      });
    }
    ForEachReplySequence(3, [&](ScriptedPainter& p) {
      RunMatchingGame(6, {2, 2, 2}, p, sink);
    });
    const std::vector<std::vector<int>> shapes{
        {2, 2, 2}, {3, 2, 2}, {3, 3, 3}, {2, 2, 2, 2}, {3, 2, 3, 2}};
    const int seeds = options.quick ? 10 : 60;
    for (const auto& rs : shapes) {
      const int base = RamseyMatchingNumber(rs);
      for (int n = base; n <= base + 10; ++n) {
        for (int seed = 0; seed < seeds; ++seed) {
          RandomPainter p(static_cast<int>(rs.size()), seed);
          RunMatchingGame(n, rs, p, sink);
        }
        MatchingAdversary adv(n, rs, GameVariant::kLocating);
        RunMatchingGame(n, rs, adv, sink);
      }
    }
  } catch (const std::exception& e) {
    check.Expect(false, e.what());
  }
  check.Note("games " + Str(sink.runs) + ", smallest budget margin " +
             Str(sink.worst_margin));
}

// Largest per-color matching of a full coloring.
int MaxMonoMatching(const FullColoring& coloring, Color c) {
  std::vector<Edge> edges;
  for (const Edge& e : AllEdges(coloring.n())) {
    if (coloring.At(e) == c) edges.push_back(e);
  }
  return static_cast<int>(
      MaxMatching(SimpleGraph::FromEdges(coloring.n(), std::move(edges)))
          .size());
}

int LargestMonoComponentSize(const FullColoring& coloring, Color c) {
  DisjointSets sets(coloring.n());
  bool any = false;
  for (const Edge& e : AllEdges(coloring.n())) {
    if (coloring.At(e) == c) {
      sets.Unite(e.u, e.v);
      any = true;
    }
  }
  if (!any) return 0;
  int best = 0;
  for (Vertex v = 0; v < coloring.n(); ++v) best = std::max(best, sets.SizeOf(v));
  return best;
}

void ColoringsSuite(const VerifyOptions& options, SuiteReport& report) {
  Checker check(report);
  std::int64_t partitions = 0;
  std::int64_t flips = 0;
  for (int t = 2; t <= 5; ++t) {
    for (int r = 2; r <= 6; ++r) {
      const FullColoring chi = MatchingPartitionColoring(t, r);
      ++partitions;
      for (Color c = 1; c <= t; ++c) {
        check.Expect(MaxMonoMatching(chi, c) <= r - 1,
                     "partition t=" + Str(t) + " r=" + Str(r) +
                         " has an rK2 in color " + Str(c));
      }
      const bool small = (t + 1) * r - t <= (options.quick ? 8 : 14);
      if (!small) continue;
      const std::vector<int> cls =
          PartitionClasses(chi.n(), std::vector<int>(static_cast<std::size_t>(t), r));
      for (const Edge& e : AllEdges(chi.n())) {
        const int cu = cls[static_cast<std::size_t>(e.u)];
        const int cv = cls[static_cast<std::size_t>(e.v)];
        const bool inside_v1 = cu == 1 && cv == 1;
        if (!inside_v1) {
          ++flips;
          check.Expect(MaxMonoMatching(chi.Flipped(e, 1), 1) >= r,
                       "flip of " + ToString(e) + " to 1 has no rK2");
        }
        for (Color c = 2; c <= t; ++c) {
          if (cu == c || cv == c) continue;
          ++flips;
          check.Expect(MaxMonoMatching(chi.Flipped(e, c), c) >= r,
                       "flip of " + ToString(e) + " to " + Str(c) +
                           " has no rK2");
        }
      }
    }
  }
  check.Note("partition colorings " + Str(partitions) + ", flips " + Str(flips));

  const int max_n = options.quick ? 60 : 200;
  const int max_flip_n = options.quick ? 20 : 50;
  std::int64_t k4_flips = 0;
  for (int n = 3; n <= max_n; ++n) {
    const FullColoring chi = BlownK4Coloring(n);
    for (Color c = 1; c <= 3; ++c) {
      check.Expect(LargestMonoComponentSize(chi, c) <= KOf(n),
                   "blown-up K4 n=" + Str(n) + " color " + Str(c) +
                       " has a component above k(n)");
    }
    if (n > max_flip_n) continue;
    const std::vector<int> cluster = BlownK4Clusters(n);
    for (const Edge& e : AllEdges(n)) {
      if (cluster[static_cast<std::size_t>(e.u)] ==
          cluster[static_cast<std::size_t>(e.v)]) {
        continue;
      }
      for (Color c = 1; c <= 3; ++c) {
        if (c == chi.At(e)) continue;
        ++k4_flips;
        check.Expect(LargestMonoComponentSize(chi.Flipped(e, c), c) == n,
                     "blown-up K4 n=" + Str(n) + " flip " + ToString(e) +
                         " to " + Str(c) + " has no spanning tree");
      }
    }
  }
  check.Note("blown-up K4 n=3.." + Str(max_n) + ", cross flips " +
             Str(k4_flips));
}

struct Instance {
  int n;
  int t;
  TargetSpec targets;
  std::string label;
};

void SolverCrossSuite(const VerifyOptions& options, SuiteReport& report) {
  Checker check(report);
  std::vector<Instance> instances{
      {2, 2, TargetSpec::Matchings({1, 1}), "n=2 matching 1,1"},
      {3, 2, TargetSpec::Matchings({1, 1}), "n=3 matching 1,1"},
      {3, 2, TargetSpec::Uniform(Goal::Tree(3), 2), "n=3 tree 3"},
      {4, 2, TargetSpec::Uniform(Goal::Tree(4), 2), "n=4 tree 4"},
      {4, 2, TargetSpec::Matchings({2, 2}), "n=4 matching 2,2"},
      {5, 2, TargetSpec::Matchings({2, 2}), "n=5 matching 2,2"},
      {4, 3, TargetSpec::Uniform(Goal::Tree(3), 3), "n=4 t=3 tree 3"},
  };
  if (!options.quick) {
    instances.push_back({5, 2, TargetSpec::Uniform(Goal::Tree(5), 2),
                         "n=5 tree 5"});
  }
  for (const Instance& inst : instances) {
    const std::optional<int> big_r = KnownRamseyNumber(inst.targets);
    const bool classic_ok = big_r && inst.n >= *big_r;
    int values[3] = {-1, -1, -1};
    for (GameVariant v : {GameVariant::kClassic, GameVariant::kLocating,
                          GameVariant::kCornering}) {
      if (v == GameVariant::kClassic && !classic_ok) continue;
      SolverOptions plain;
      SolverOptions canon;
      canon.canonicalize = true;
      const int a = SolveValue(inst.n, inst.t, inst.targets, v, plain).value;
      const int b = SolveValue(inst.n, inst.t, inst.targets, v, canon).value;
      check.Expect(a == b, inst.label + " " + std::string(ToString(v)) +
                               ": canonicalization changed " + Str(a) +
                               " to " + Str(b));
      values[static_cast<int>(v)] = a;
    }
    std::ostringstream line;
    line << inst.label << ": classic " << values[0] << ", locating "
         << values[1] << ", cornering " << values[2];
    check.Note(line.str());
    check.Expect(values[2] <= values[1],
                 inst.label + ": cornering above locating");
    if (classic_ok) {
      check.Expect(values[1] == values[2],
                   inst.label + ": locating != cornering with n >= R");
      const int lo = (*big_r + 1) / 2;
      const std::int64_t hi = PairCount(*big_r);
      check.Expect(lo <= values[0] && values[0] <= hi,
                   inst.label + ": classic value outside [R/2, C(R,2)]");
    }
  }
}

}  // namespace

std::vector<SuiteReport> RunVerify(std::string_view name,
                                   const VerifyOptions& options) {
  static const std::vector<
      std::pair<std::string, void (*)(const VerifyOptions&, SuiteReport&)>>
      kSuites{{"treeextend", TreeExtendSuite},
              {"compextend", CompExtendSuite},
              {"forest", ForestSuite},
              {"colorings", ColoringsSuite},
              {"solver-cross", SolverCrossSuite}};
  std::vector<SuiteReport> out;
  for (const auto& [suite, run] : kSuites) {
    if (name != "all" && name != suite) continue;
    SuiteReport report;
    report.suite = suite;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(options, report);
    } catch (const std::exception& e) {
      report.passed = false;
      report.lines.push_back(std::string("FAIL exception: ") + e.what());
    }
    report.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    out.push_back(std::move(report));
  }
  if (out.empty()) {
    throw PreconditionError("unknown suite '" + std::string(name) +
                            "' (expected treeextend, compextend, forest, "
                            "colorings, solver-cross or all)");
  }
  return out;
}

}  // namespace ramsey
