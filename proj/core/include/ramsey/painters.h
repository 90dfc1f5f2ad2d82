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

// Painter strategies and the full colorings behind the adversaries.

#ifndef RAMSEY_PAINTERS_H_
#define RAMSEY_PAINTERS_H_

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/game.h"
#include "ramsey/types.h"

namespace ramsey {

// A color for every edge of K_n, indexed lexicographically.
class FullColoring {
 public:
  FullColoring() = default;
  // Every edge starts at `fill`.
  FullColoring(int n, int t, Color fill);

  int n() const { return n_; }
  int t() const { return t_; }
  Color At(const Edge& e) const;
  void Set(const Edge& e, Color c);
  // The same coloring with e recolored to c.
  FullColoring Flipped(const Edge& e, Color c) const;
  // Board holding every edge exposed in its color.
  GameState ToState(const TargetSpec& targets, GameVariant variant) const;

  friend bool operator==(const FullColoring&, const FullColoring&) = default;

 private:
  int n_ = 0;
  int t_ = 0;
  std::vector<Color> colors_;
};

// Vertex classes V_1..V_t: |V_i| = r_i - 1 for i >= 2, V_1 the rest, listed
// in vertex order. Returns the class (1-based) of every vertex.
std::vector<int> PartitionClasses(int n, const std::vector<int>& rs);

// chi(xy) = max class index touched. Throws PreconditionError unless
// n >= 1 + sum_{i >= 2} (r_i - 1).
FullColoring PartitionColoring(int n, const std::vector<int>& rs);

// t classes with |V_1| = 2r - 1, |V_i| = r - 1, on n = (t + 1) r - t.
FullColoring MatchingPartitionColoring(int t, int r);

// Four clusters, the first n mod 4 of size ceil(n/4). Cross edges follow the
// proper 3-edge-coloring of K4, edges inside a cluster get color 1.
std::vector<int> BlownK4Clusters(int n);
FullColoring BlownK4Coloring(int n);

class FixedPainter : public PainterStrategy {
 public:
  // Throws PreconditionError on an incomplete table.
  FixedPainter(FullColoring coloring, std::string name = "fixed");
  Color ColorOf(const Edge& e, const GameState& state) override;
  std::string Name() const override { return name_; }

 private:
  FullColoring coloring_;
  std::string name_;
};

// Answers the partition coloring; under Cornering the last unexposed edge
// gets color 1 when it leaves V_1 and color 2 inside V_1.
class MatchingAdversary : public PainterStrategy {
 public:
  MatchingAdversary(int t, int r, GameVariant variant);
  // Any n admitted by PartitionColoring.
  MatchingAdversary(int n, std::vector<int> rs, GameVariant variant);
  Color ColorOf(const Edge& e, const GameState& state) override;
  std::string Name() const override;

 private:
  GameVariant variant_;
  std::vector<int> classes_;
  FullColoring coloring_;
};

// First n - 2 answers are 1, the next n - 2 are 2, the rest 1. On n = 2 the
// single answer is 2.
class Tree2Adversary : public PainterStrategy {
 public:
  explicit Tree2Adversary(int n);
  Color ColorOf(const Edge& e, const GameState& state) override;
  std::string Name() const override { return "tree2-adv"; }

 private:
  int n_;
  std::int64_t answered_ = 0;
};

// Blown-up K4, except the last unexposed cross edge, which gets the smallest
// color other than its blown-up color.
class Tree3Adversary : public PainterStrategy {
 public:
  explicit Tree3Adversary(int n);
  Color ColorOf(const Edge& e, const GameState& state) override;
  std::string Name() const override { return "tree3-adv"; }

 private:
  std::vector<int> cluster_;
  FullColoring coloring_;
  std::int64_t cross_left_;
};

class RandomPainter : public PainterStrategy {
 public:
  RandomPainter(int t, std::int64_t seed);
  Color ColorOf(const Edge& e, const GameState& state) override;
  std::string Name() const override;
  std::optional<std::int64_t> Seed() const override { return seed_; }

 private:
  int t_;
  std::int64_t seed_;
  std::mt19937_64 rng_;
};

// Answers from a script in ask order, then color 1.
class ScriptedPainter : public PainterStrategy {
 public:
  explicit ScriptedPainter(std::vector<Color> script);
  Color ColorOf(const Edge& e, const GameState& state) override;
  std::string Name() const override { return "scripted"; }
  // Answers given so far.
  const std::vector<Color>& given() const { return given_; }

 private:
  std::vector<Color> script_;
  std::vector<Color> given_;
};

// Parses "random:SEED", "fixed:FILE", "match-adv:locating|cornering",
// "tree2-adv" or "tree3-adv" for a board of size n with these targets.
// Throws PreconditionError on unknown or mismatched names.
std::unique_ptr<PainterStrategy> MakePainter(std::string_view spec, int n,
                                             int t, const TargetSpec& targets);

}  // namespace ramsey

#endif  // RAMSEY_PAINTERS_H_
