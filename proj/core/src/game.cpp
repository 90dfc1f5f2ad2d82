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

#include "ramsey/game.h"

#include <string>

#include "ramsey/detection.h"
#include "ramsey/errors.h"
#include "ramsey/formulas.h"
#include "ramsey/solver.h"

namespace ramsey {
namespace {

// Dense exposure tables up to this many edges (about n = 2900).
constexpr std::int64_t kDenseEdgeLimit = std::int64_t{1} << 22;

void ValidateTargets(int t, const TargetSpec& targets) {
  if (targets.t() != t) {
    throw PreconditionError("targets list " + std::to_string(targets.t()) +
                            " goals for t = " + std::to_string(t) + " colors");
  }
  for (const Goal& g : targets.goals) {
    if (g.kind == GoalKind::kMatching && g.size < 1) {
      throw PreconditionError("matching goal needs r >= 1");
    }
    if (g.kind == GoalKind::kTree && g.size < 2) {
      throw PreconditionError("tree goal needs k >= 2");
    }
  }
}

}  // namespace

GameState::GameState(int n, int t, TargetSpec targets, GameVariant variant)
    : n_(n),
      t_(t),
      targets_(std::move(targets)),
      variant_(variant),
      dense_(PairCount(n) <= kDenseEdgeLimit) {
  if (n < 2) throw PreconditionError("board needs n >= 2 vertices");
  if (t < 2 || t > 255) throw PreconditionError("color count must be in [2,255]");
  ValidateTargets(t, targets_);
  if (dense_) dense_colors_.assign(static_cast<std::size_t>(PairCount(n)), 0);
  adjacency_.assign(static_cast<std::size_t>(t),
                    std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n)));
  transcript_.n = n;
  transcript_.t = t;
  transcript_.variant = variant;
  transcript_.targets = targets_;
}

std::size_t GameState::DenseIndex(const Edge& e) const {
  // Row-major over u < v.
  const std::int64_t u = e.u;
  return static_cast<std::size_t>(u * (2 * n_ - u - 1) / 2 + (e.v - e.u - 1));
}

Color GameState::ColorOf(const Edge& e) const {
  if (!IsBoardEdge(e)) {
    throw PreconditionError("edge " + ToString(e) + " is not on K_" +
                            std::to_string(n_));
  }
  if (dense_) return dense_colors_[DenseIndex(e)];
  auto it = sparse_colors_.find(e.Key());
  return it == sparse_colors_.end() ? kNoColor : it->second;
}

std::vector<Edge> GameState::EdgesOfColor(Color c) const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex w : Neighbors(c, v)) {
      if (w > v) out.push_back(Edge{v, w});
    }
  }
  return out;
}

void GameState::Record(const Edge& e, Color c, std::optional<std::string> tag) {
  if (c < 1 || c > t_) {
    throw VerificationError("color " + std::to_string(c) + " outside [1," +
                            std::to_string(t_) + "]");
  }
  if (IsExposed(e)) {
    throw PreconditionError("edge " + ToString(e) + " is already exposed");
  }
  if (dense_) {
    dense_colors_[DenseIndex(e)] = static_cast<std::uint8_t>(c);
  } else {
    sparse_colors_.emplace(e.Key(), static_cast<std::uint8_t>(c));
  }
  auto& adj = adjacency_[static_cast<std::size_t>(c - 1)];
  adj[static_cast<std::size_t>(e.u)].push_back(e.v);
  adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  ++queries_;
  ++raw_asks_;
  transcript_.moves.push_back(TranscriptMove{e, c, std::move(tag)});
}

GameState NewGame(int n, int t, const TargetSpec& targets,
                  GameVariant variant) {
  GameState state(n, t, targets, variant);
  if (variant == GameVariant::kClassic) {
    std::optional<int> r = KnownRamseyNumber(targets);
    if (!r) {
      throw PreconditionError("classic game needs a known Ramsey number for " +
                              ToString(targets));
    }
    if (n < *r) {
      throw PreconditionError("classic game needs n >= R = " +
                              std::to_string(*r) + ", got n = " +
                              std::to_string(n));
    }
  }
  return state;
}

Color Query(GameState& state, const Edge& e, PainterStrategy& painter,
            std::string tag) {
  if (!state.IsBoardEdge(e)) {
    throw PreconditionError("edge " + ToString(e) + " is not on K_" +
                            std::to_string(state.n()));
  }
  if (Color cached = state.ColorOf(e); cached != kNoColor) {
    state.NoteCachedAsk();
    return cached;
  }
  const Color c = painter.ColorOf(e, state);
  if (c < 1 || c > state.t()) {
    throw VerificationError("painter '" + painter.Name() + "' answered color " +
                            std::to_string(c) + " on a " +
                            std::to_string(state.t()) + "-color board");
  }
  state.Record(e, c, tag.empty() ? std::nullopt
                                 : std::optional<std::string>(std::move(tag)));
  return c;
}

std::optional<WinCertificate> CheckWinClassic(const GameState& state,
                                              const TargetSpec& targets) {
  for (Color c = 1; c <= targets.t(); ++c) {
    if (auto edges = FindMonoTarget(state, c, targets.ForColor(c))) {
      return WinCertificate::Found(c, std::move(*edges));
    }
  }
  return std::nullopt;
}

void VerifyCertificate(const GameState& state, const WinCertificate& cert,
                       int completion_threshold) {
  switch (cert.kind) {
    case CertificateKind::kFoundCopy: {
      if (cert.color < 1 || cert.color > state.t()) {
        throw VerificationError("certificate color out of range");
      }
      for (const Edge& e : cert.edges) {
        if (!state.IsBoardEdge(e) || state.ColorOf(e) != cert.color) {
          throw VerificationError("certificate edge " + ToString(e) +
                                  " is not exposed in color " +
                                  std::to_string(cert.color));
        }
      }
      if (!RealizesGoal(cert.edges, state.targets().ForColor(cert.color))) {
        throw VerificationError(
            "certificate edges do not realize " +
            ToString(state.targets().ForColor(cert.color)) + " in color " +
            std::to_string(cert.color));
      }
      return;
    }
    case CertificateKind::kExclusion:
    case CertificateKind::kCorneredColor: {
      const bool exclusion = cert.kind == CertificateKind::kExclusion;
      const GameVariant needed =
          exclusion ? GameVariant::kLocating : GameVariant::kCornering;
      if (state.variant() != needed) {
        throw VerificationError(std::string(ToString(cert.kind)) +
                                " claims are only valid in the " +
                                std::string(ToString(needed)) + " game");
      }
      if (state.n() > 64) {
        throw VerificationError("completion checks support n <= 64");
      }
      const SolverState s = SolverState::FromGame(state);
      const WinCheckRoute route = s.unexposed() <= completion_threshold
                                      ? WinCheckRoute::kEnumeration
                                      : WinCheckRoute::kMonotone;
      if (exclusion) {
        if (!ExclusionHolds(s, state.targets(), route, completion_threshold)) {
          throw VerificationError(
              "exclusion claimed but some completion contains a target");
        }
        return;
      }
      if (cert.color < 1 || cert.color > state.t()) {
        throw VerificationError("cornered color out of range");
      }
      if (!CorneredHolds(s, state.targets(), cert.color, route,
                         completion_threshold)) {
        throw VerificationError("cornered color " + std::to_string(cert.color) +
                                " refuted by a valid completion");
      }
      return;
    }
  }
}

GameOutcome RunGame(BuilderStrategy& builder, PainterStrategy& painter,
                    GameState& state, const RunOptions& options) {
  Transcript& meta = state.mutable_transcript();
  meta.builder = builder.Name();
  meta.painter = painter.Name();
  meta.seed = painter.Seed();
  const std::int64_t patience =
      options.patience >= 0 ? options.patience : PairCount(state.n()) + 1;
  for (std::int64_t moves = 0;; ++moves) {
    if (moves >= patience) {
      throw VerificationError("builder '" + builder.Name() +
                              "' exceeded the patience bound of " +
                              std::to_string(patience) + " moves");
    }
    BuilderMove move = builder.NextMove(state);
    if (auto* q = std::get_if<QueryMove>(&move)) {
      Query(state, q->edge, painter, q->tag);
      continue;
    }
    WinCertificate cert = std::get<DeclareMove>(std::move(move)).certificate;
    VerifyCertificate(state, cert, options.completion_threshold);
    TranscriptResult result;
    result.kind = cert.kind;
    if (cert.kind != CertificateKind::kExclusion) result.color = cert.color;
    if (cert.kind == CertificateKind::kFoundCopy) result.edges = cert.edges;
    result.queries = state.queries();
    meta.result = result;
    return GameOutcome{std::move(cert), state.transcript()};
  }
}

GameState Replay(const Transcript& transcript) {
  GameState state(transcript.n, transcript.t, transcript.targets,
                  transcript.variant);
  for (const TranscriptMove& m : transcript.moves) {
    if (!state.IsBoardEdge(m.edge)) {
      throw FormatError("move edge " + ToString(m.edge) + " is off the board");
    }
    if (state.IsExposed(m.edge)) {
      throw FormatError("edge " + ToString(m.edge) + " appears twice");
    }
    if (m.color < 1 || m.color > transcript.t) {
      throw FormatError("move color " + std::to_string(m.color) +
                        " outside [1,t]");
    }
    state.Record(m.edge, m.color, m.tag);
  }
  Transcript& meta = state.mutable_transcript();
  meta.builder = transcript.builder;
  meta.painter = transcript.painter;
  meta.seed = transcript.seed;
  meta.result = transcript.result;
  return state;
}

}  // namespace ramsey
