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

#include "cli.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/builders.h"
#include "ramsey/errors.h"
#include "ramsey/formulas.h"
#include "ramsey/game.h"
#include "ramsey/graph.h"
#include "ramsey/painters.h"
#include "ramsey/solver.h"
#include "ramsey/transcript_io.h"
#include "ramsey/verify.h"

namespace ramsey::cli {
namespace {

int ParseInt(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError(std::string("bad ") + what + " '" +
                            std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

TargetSpec ParseTargets(std::string_view text, int n, int t,
                        GameVariant variant) {
  if (t < 2) throw PreconditionError("t must be at least 2");
  if (text.starts_with("matching:")) {
    std::vector<int> rs;
    for (std::string_view part : Split(text.substr(9), ',')) {
      const int r = ParseInt(part, "matching size");
      if (r < 1) throw PreconditionError("matching sizes must be positive");
      rs.push_back(r);
    }
    if (static_cast<int>(rs.size()) != t) {
      throw PreconditionError("matching target lists " +
                              std::to_string(rs.size()) + " sizes for t = " +
                              std::to_string(t));
    }
    return TargetSpec::Matchings(rs);
  }
  if (text.starts_with("tree:")) {
    const int k = ParseInt(text.substr(5), "tree size");
    if (k < 2) throw PreconditionError("tree size must be at least 2");
    return TargetSpec::Uniform(Goal::Tree(k), t);
  }
  if (text == "tree") {
    if (t == 2) return TargetSpec::Uniform(Goal::Tree(n), 2);
    if (t == 3) {
      const int k = KOf(n) + (variant == GameVariant::kClassic ? 0 : 1);
      return TargetSpec::Uniform(Goal::Tree(k), 3);
    }
    throw PreconditionError("bare 'tree' targets exist for t = 2 or 3 only");
  }
  throw PreconditionError("unknown target '" + std::string(text) +
                          "' (expected matching:r1,...,rt, tree or tree:K)");
}

std::vector<int> NRange::Values() const {
  std::vector<int> out;
  for (int n = start; n <= stop; n += step) out.push_back(n);
  return out;
}

NRange ParseNRange(std::string_view text) {
  const auto parts = Split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) {
    throw PreconditionError("n-range must be start:stop[:step]");
  }
  NRange range;
  range.start = ParseInt(parts[0], "range start");
  range.stop = ParseInt(parts[1], "range stop");
  if (parts.size() == 3) range.step = ParseInt(parts[2], "range step");
  if (range.step < 1) throw PreconditionError("range step must be positive");
  if (range.start > range.stop) throw PreconditionError("n-range is empty");
  return range;
}

std::string CsvHeader() {
  return "n,t,variant,builder,painter,seed,queries,bound,within_bound,"
         "structure_color,structure_size";
}

std::string CsvLine(const SweepRow& row) {
  std::ostringstream line;
  line << row.n << ',' << row.t << ',' << ToString(row.variant) << ','
       << row.builder << ',' << row.painter << ',';
  if (row.seed) line << *row.seed;
  line << ',' << row.queries << ',' << row.bound << ','
       << (row.within_bound ? "true" : "false") << ',' << row.structure_color
       << ',' << row.structure_size;
  return line.str();
}

namespace {

struct GameFlags {
  int n = 0;
  int t = 2;
  std::string target;
  std::string variant = "classic";
  std::string builder;
  int threshold = 25;
};

int StructureSize(const WinCertificate& cert, const TargetSpec& targets) {
  if (cert.kind != CertificateKind::kFoundCopy) return 0;
  if (targets.ForColor(cert.color).kind == GoalKind::kMatching) {
    return static_cast<int>(cert.edges.size());
  }
  return static_cast<int>(TouchedVertices(cert.edges).size());
}

std::string DefaultTarget(const std::string& builder) {
  if (builder == "tree2" || builder == "tree3") return "tree";
  throw PreconditionError("--target is required for builder '" + builder +
                          "'");
}

// Painter spec with a bare "random" resolved against `seed`.
std::string ResolvePainter(const std::string& spec, std::int64_t seed) {
  return spec == "random" ? "random:" + std::to_string(seed) : spec;
}

SweepRow PlayOne(const GameFlags& flags, const std::string& painter_spec,
                 GameState* keep) {
  const GameVariant variant = ParseVariant(flags.variant);
  const std::string target =
      flags.target.empty() ? DefaultTarget(flags.builder) : flags.target;
  const TargetSpec targets = ParseTargets(target, flags.n, flags.t, variant);
  CheckBuilderFits(flags.builder, flags.n, flags.t, targets, variant);
  GameState state = NewGame(flags.n, flags.t, targets, variant);
  auto builder = MakeBuilder(flags.builder);
  auto painter = MakePainter(painter_spec, flags.n, flags.t, targets);
  RunOptions options;
  options.completion_threshold = flags.threshold;
  const GameOutcome outcome = RunGame(*builder, *painter, state, options);
  SweepRow row;
  row.n = flags.n;
  row.t = flags.t;
  row.variant = variant;
  row.builder = flags.builder;
  row.painter = painter->Name();
  row.seed = painter->Seed();
  row.queries = state.queries();
  row.bound = BuilderQueryBound(flags.builder, flags.n, flags.t);
  row.within_bound = row.queries <= row.bound;
  row.structure_color = outcome.certificate.color;
  row.structure_size = StructureSize(outcome.certificate, targets);
  if (keep) *keep = std::move(state);
  return row;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw PreconditionError("cannot write '" + path + "'");
  file << text << '\n';
}

int CmdPlay(const GameFlags& flags, const std::string& painter,
            std::int64_t seed, const std::string& out_path,
            std::ostream& out) {
  GameState state(2, 2, TargetSpec::Matchings({1, 1}), GameVariant::kClassic);
  const SweepRow row = PlayOne(flags, ResolvePainter(painter, seed), &state);
  if (!out_path.empty()) WriteFile(out_path, EncodeTranscript(state.transcript()));
  out << "winner color " << row.structure_color << ", structure size "
      << row.structure_size << ", queries " << row.queries << ", bound "
      << row.bound << ", within-bound " << (row.within_bound ? "yes" : "no")
      << '\n';
  return row.within_bound ? kExitOk : kExitVerification;
}

int CmdSolve(const GameFlags& flags, bool canonical, std::ostream& out) {
  const GameVariant variant = ParseVariant(flags.variant);
  if (flags.target.empty()) throw PreconditionError("--target is required");
  const TargetSpec targets = ParseTargets(flags.target, flags.n, flags.t, variant);
  SolverOptions options;
  options.canonicalize = canonical;
  const auto start = std::chrono::steady_clock::now();
  const SolverResult result = SolveValue(flags.n, flags.t, targets, variant, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  nlohmann::ordered_json j;
  j["instance"] = {{"n", flags.n}, {"t", flags.t}, {"targets", ToString(targets)}};
  j["variant"] = std::string(ToString(variant));
  j["value"] = result.value;
  j["optimal_first_move"] =
      result.optimal_first_move
          ? nlohmann::ordered_json::array({result.optimal_first_move->u,
                                   result.optimal_first_move->v})
          : nlohmann::ordered_json(nullptr);
  j["nodes"] = result.nodes_explored;
  j["cache_hits"] = result.cache_hits;
  j["seconds"] = std::round(seconds * 1e6) / 1e6;
  out << j.dump() << '\n';
  return kExitOk;
}

int CmdSweep(GameFlags flags, const std::string& n_range,
             const std::vector<std::string>& painters, std::int64_t seed,
             int reps, const std::string& csv_path, std::ostream& out) {
  const NRange range = ParseNRange(n_range);
  if (painters.empty()) throw PreconditionError("sweep needs --painter");
  if (reps < 1) throw PreconditionError("--reps must be positive");
  std::ostringstream csv;
  csv << CsvHeader() << '\n';
  bool all_within = true;
  for (int n : range.Values()) {
    flags.n = n;
    for (const std::string& spec : painters) {
      const int runs = spec == "random" ? reps : 1;
      for (int rep = 0; rep < runs; ++rep) {
        const SweepRow row =
            PlayOne(flags, ResolvePainter(spec, seed + rep), nullptr);
        all_within = all_within && row.within_bound;
        csv << CsvLine(row) << '\n';
      }
    }
  }
  if (csv_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(csv_path);
    if (!file) throw PreconditionError("cannot write '" + csv_path + "'");
    file << csv.str();
  }
  return all_within ? kExitOk : kExitVerification;
}

int CmdVerify(const std::string& suite, bool quick, std::ostream& out) {
  VerifyOptions options;
  options.quick = quick;
  bool passed = true;
  for (const SuiteReport& report : RunVerify(suite, options)) {
    passed = passed && report.passed;
    out << report.suite << ": " << (report.passed ? "pass" : "FAIL") << " ("
        << std::fixed << std::setprecision(2) << report.seconds << " s)\n";
    for (const std::string& line : report.lines) out << "  " << line << '\n';
  }
  return passed ? kExitOk : kExitVerification;
}

int CmdFormulas(int n, std::ostream& out) {
  auto row = [&](const std::string& name, const std::string& value) {
    out << std::left << std::setw(44) << name << value << '\n';
  };
  auto num = [](double v) {
    std::ostringstream s;
    s << std::setprecision(6) << v;
    return s.str();
  };
  out << "n = " << n << '\n';
  if (n >= 3) {
    row("k(n)", std::to_string(KOf(n)));
    row("R_3(T_n)", std::to_string(TreeRamsey(3, n)));
    row("tree3 upper bound 5(n-1)", std::to_string(5LL * (n - 1)));
    row("tree3 lower bound 6 floor(n/4)^2", std::to_string(Tree3LowerBound(n)));
  }
  row("R_2(T_n)", std::to_string(TreeRamsey(2, n)));
  row("tree2 exact value 2n-3", std::to_string(std::max(1, 2 * n - 3)));
  for (int t = 2; t <= 5; ++t) {
    row("matching coefficient, t=" + std::to_string(t),
        num(MatchingCoefficient(t)));
    row("matching budget floor(coef n), t=" + std::to_string(t),
        std::to_string(MatchingQueryBudget(t, n)));
    if ((n + t) % (t + 1) == 0 && (n + t) / (t + 1) >= 2) {
      row("matching cornering lower bound, t=" + std::to_string(t),
          std::to_string(MatchingCorneringLowerBound(t, n)));
    }
  }
  for (int t = 2; t <= 4; ++t) {
    for (int r = 2; r <= 3; ++r) {
      row("R_t(rK2), t=" + std::to_string(t) + " r=" + std::to_string(r),
          std::to_string(RamseyMatchingNumber(
              std::vector<int>(static_cast<std::size_t>(t), r))));
      row("trivial value (t-1)(r-1)+1, t=" + std::to_string(t) +
              " r=" + std::to_string(r),
          std::to_string(TrivialOnlineValue(t, r)));
    }
  }
  out << "q(m,k):\n";
  for (int m = 1; m <= 8; ++m) {
    out << "  m=" << m << ':';
    for (int k = 1; k <= 6; ++k) {
      if (AllowedForestShape(m, k)) out << "  k=" << k << ' ' << num(QBound(m, k));
    }
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Builder-Painter online Ramsey games: play, solve, sweep, "
               "verify",
               "ramsey"};
  app.require_subcommand(1);

  GameFlags flags;
  std::string painter;
  std::int64_t seed = 0;
  std::string out_path;
  std::string csv_path;
  std::string n_range;
  std::vector<std::string> painters;
  int reps = 1;
  bool canonical = false;
  std::string suite;
  bool quick = false;
  int formula_n = 20;

  auto add_game = [&](CLI::App* cmd, bool need_builder) {
    cmd->add_option("--t", flags.t, "Number of colors")->capture_default_str();
    cmd->add_option("--target", flags.target,
                    "matching:r1,...,rt | tree | tree:K");
    cmd->add_option("--variant", flags.variant, "classic|locating|cornering")
        ->capture_default_str();
    auto* b = cmd->add_option("--builder", flags.builder,
                              "matching | tree2 | tree3");
    if (need_builder) b->required();
    cmd->add_option("--threshold", flags.threshold,
                    "Completion-check threshold (unexposed edges)")
        ->capture_default_str();
  };

  CLI::App* play = app.add_subcommand("play", "Run one game");
  play->add_option("--n", flags.n, "Board size")->required();
  add_game(play, true);
  play->add_option("--painter", painter,
                   "random[:SEED] | fixed:FILE | match-adv:VARIANT | "
                   "tree2-adv | tree3-adv")
      ->required();
  play->add_option("--seed", seed, "Seed for a bare 'random' painter");
  play->add_option("--out", out_path, "Transcript JSON output");

  CLI::App* solve = app.add_subcommand("solve", "Exact game value");
  solve->add_option("--n", flags.n, "Board size")->required();
  solve->add_option("--t", flags.t, "Number of colors")->capture_default_str();
  solve->add_option("--target", flags.target,
                    "matching:r1,...,rt | tree | tree:K")
      ->required();
  solve->add_option("--variant", flags.variant, "classic|locating|cornering")
      ->capture_default_str();
  solve->add_flag("--canonical,!--no-canonical", canonical,
                  "Memoize up to isomorphism");

  CLI::App* sweep = app.add_subcommand("sweep", "Many games, CSV rows");
  sweep->add_option("--n-range", n_range, "start:stop[:step]")->required();
  add_game(sweep, true);
  sweep->add_option("--painter", painters,
                    "Painter specs (repeatable); bare 'random' uses --seed + "
                    "repetition")
      ->required();
  sweep->add_option("--seed", seed, "First seed")->capture_default_str();
  sweep->add_option("--reps", reps, "Repetitions per random painter")
      ->capture_default_str();
  sweep->add_option("--csv", csv_path, "CSV output (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Invariant suites");
  verify->add_option("suite", suite,
                     "treeextend | compextend | forest | colorings | "
                     "solver-cross | all")
      ->required();
  verify->add_flag("--quick", quick, "Smaller ranges");

  CLI::App* formulas = app.add_subcommand("formulas", "Closed-form table");
  formulas->add_option("--n", formula_n, "Board size")->capture_default_str();

  std::vector<std::string> argv_store{"ramsey"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (play->parsed()) {
      return CmdPlay(flags, painter, seed, out_path, out);
    }
    if (solve->parsed()) return CmdSolve(flags, canonical, out);
    if (sweep->parsed()) {
      return CmdSweep(flags, n_range, painters, seed, reps, csv_path, out);
    }
    if (verify->parsed()) return CmdVerify(suite, quick, out);
    if (formulas->parsed()) return CmdFormulas(formula_n, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IntractableError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}

}  // namespace ramsey::cli
