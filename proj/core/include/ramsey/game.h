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

// The Builder-Painter board on K_n.
//
// A GameState owns the exposure map (edge -> color), the per-color exposed
// graphs and the transcript. Builders only ever see a const GameState; the
// engine functions in this header are the only mutators.
//
// Re-asking an exposed edge is free: the cached color comes back and the
// query count does not move. The query count is always the number of
// distinct exposed edges.

#ifndef RAMSEY_GAME_H_
#define RAMSEY_GAME_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ramsey/types.h"

namespace ramsey {

struct TranscriptMove {
  Edge edge;
  Color color = kNoColor;
  std::optional<std::string> tag;

  friend bool operator==(const TranscriptMove&,
                         const TranscriptMove&) = default;
};

struct TranscriptResult {
  CertificateKind kind = CertificateKind::kFoundCopy;
  std::optional<Color> color;
  std::optional<std::vector<Edge>> edges;
  std::int64_t queries = 0;

  friend bool operator==(const TranscriptResult&,
                         const TranscriptResult&) = default;
};

struct Transcript {
  int n = 0;
  int t = 0;
  GameVariant variant = GameVariant::kClassic;
  TargetSpec targets;
  std::string builder;
  std::string painter;
  std::optional<std::int64_t> seed;
  std::vector<TranscriptMove> moves;
  std::optional<TranscriptResult> result;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

class GameState {
 public:
  // Prefer NewGame(), which also validates the variant's board-size rule.
  GameState(int n, int t, TargetSpec targets, GameVariant variant);

  int n() const { return n_; }
  int t() const { return t_; }
  const TargetSpec& targets() const { return targets_; }
  GameVariant variant() const { return variant_; }

  bool IsBoardEdge(const Edge& e) const {
    return 0 <= e.u && e.u < e.v && e.v < n_;
  }
  // kNoColor when unexposed.
  Color ColorOf(const Edge& e) const;
  bool IsExposed(const Edge& e) const { return ColorOf(e) != kNoColor; }

  // Distinct exposed edges.
  std::int64_t queries() const { return queries_; }
  // Every ask routed through the engine, cached or not.
  std::int64_t raw_asks() const { return raw_asks_; }
  std::int64_t unexposed() const { return PairCount(n_) - queries_; }

  // Neighbours of v in the exposed graph of color c, in exposure order.
  const std::vector<Vertex>& Neighbors(Color c, Vertex v) const {
    return adjacency_[static_cast<std::size_t>(c - 1)]
                     [static_cast<std::size_t>(v)];
  }
  std::vector<Edge> EdgesOfColor(Color c) const;

  const Transcript& transcript() const { return transcript_; }
  Transcript& mutable_transcript() { return transcript_; }

  // Engine-side mutation. Records a fresh exposure; throws if e is already
  // exposed, off the board, or c is out of range.
  void Record(const Edge& e, Color c, std::optional<std::string> tag = {});
  void NoteCachedAsk() { ++raw_asks_; }

 private:
  std::size_t DenseIndex(const Edge& e) const;

  int n_;
  int t_;
  TargetSpec targets_;
  GameVariant variant_;
  bool dense_;
  std::vector<std::uint8_t> dense_colors_;
  std::unordered_map<std::uint64_t, std::uint8_t> sparse_colors_;
  std::int64_t queries_ = 0;
  std::int64_t raw_asks_ = 0;
  std::vector<std::vector<std::vector<Vertex>>> adjacency_;
  Transcript transcript_;
};

// Painter contract. May be adaptive; the engine never asks twice for the
// same edge.
class PainterStrategy {
 public:
  virtual ~PainterStrategy() = default;
  virtual Color ColorOf(const Edge& e, const GameState& state) = 0;
  virtual std::string Name() const = 0;
  virtual std::optional<std::int64_t> Seed() const { return std::nullopt; }
};

struct QueryMove {
  Edge edge;
  std::string tag;
};
struct DeclareMove {
  WinCertificate certificate;
};
using BuilderMove = std::variant<QueryMove, DeclareMove>;

// Builder contract. Called repeatedly with the same state until it
// declares; each call sees the colors of all previous queries.
class BuilderStrategy {
 public:
  virtual ~BuilderStrategy() = default;
  virtual BuilderMove NextMove(const GameState& state) = 0;
  virtual std::string Name() const = 0;
};

// Validates (n, t, targets, variant) and returns an empty board. Classic
// requires n to be at least the Ramsey number of the targets, which must
// therefore be known in closed form.
GameState NewGame(int n, int t, const TargetSpec& targets,
                  GameVariant variant);

// Exposes e (or returns its cached color). Throws VerificationError if the
// painter answers outside [1, t].
Color Query(GameState& state, const Edge& e, PainterStrategy& painter,
            std::string tag = {});

struct RunOptions {
  // Maximum builder moves; -1 means C(n,2) + 1.
  std::int64_t patience = -1;
  // Exclusion / cornered claims are checked by enumerating completions when
  // at most this many edges are unexposed, and by the monotone reduction
  // otherwise.
  int completion_threshold = 25;
};

struct GameOutcome {
  WinCertificate certificate;
  Transcript transcript;
};

// Drives builder moves through Query until the builder declares, verifies
// the declaration and returns it with the full transcript.
GameOutcome RunGame(BuilderStrategy& builder, PainterStrategy& painter,
                    GameState& state, const RunOptions& options = {});

// First color (lowest index) whose exposed graph contains its goal.
std::optional<WinCertificate> CheckWinClassic(const GameState& state,
                                              const TargetSpec& targets);
inline std::optional<WinCertificate> CheckWinClassic(const GameState& state) {
  return CheckWinClassic(state, state.targets());
}

// Throws VerificationError unless `cert` is a valid win on `state`.
void VerifyCertificate(const GameState& state, const WinCertificate& cert,
                       int completion_threshold = 25);

// Rebuilds the board a transcript describes. Throws FormatError if the
// moves are inconsistent with the board.
GameState Replay(const Transcript& transcript);

}  // namespace ramsey

#endif  // RAMSEY_GAME_H_
