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

#include "ramsey/painters.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ramsey/errors.h"
#include "ramsey/solver.h"
#include "ramsey/transcript_io.h"

namespace ramsey {

FullColoring::FullColoring(int n, int t, Color fill)
    : n_(n), t_(t), colors_(static_cast<std::size_t>(PairCount(n)), fill) {
  if (n < 2) throw PreconditionError("a coloring needs n >= 2");
  if (t < 1) throw PreconditionError("a coloring needs t >= 1");
}

Color FullColoring::At(const Edge& e) const {
  return colors_.at(static_cast<std::size_t>(EdgeIndex(n_, e)));
}

void FullColoring::Set(const Edge& e, Color c) {
  if (c < 1 || c > t_) {
    throw PreconditionError("color " + std::to_string(c) + " outside [1, " +
                            std::to_string(t_) + "]");
  }
  colors_.at(static_cast<std::size_t>(EdgeIndex(n_, e))) = c;
}

FullColoring FullColoring::Flipped(const Edge& e, Color c) const {
  FullColoring out = *this;
  out.Set(e, c);
  return out;
}

GameState FullColoring::ToState(const TargetSpec& targets,
                                GameVariant variant) const {
  GameState state(n_, t_, targets, variant);
  for (const Edge& e : AllEdges(n_)) state.Record(e, At(e));
  return state;
}

std::vector<int> PartitionClasses(int n, const std::vector<int>& rs) {
  if (rs.size() < 2) throw PreconditionError("partition needs t >= 2");
  int tail = 0;
  for (std::size_t i = 1; i < rs.size(); ++i) {
    if (rs[i] < 1) throw PreconditionError("partition needs every r_i >= 1");
    tail += rs[i] - 1;
  }
  if (n < tail + 1) {
    throw PreconditionError("partition coloring needs n >= " +
                            std::to_string(tail + 1));
  }
  std::vector<int> cls(static_cast<std::size_t>(n), 1);
  Vertex next = n - tail;
  for (std::size_t i = 1; i < rs.size(); ++i) {
    for (int j = 0; j < rs[i] - 1; ++j) {
      cls[static_cast<std::size_t>(next++)] = static_cast<int>(i) + 1;
    }
  }
  return cls;
}

FullColoring PartitionColoring(int n, const std::vector<int>& rs) {
  const std::vector<int> cls = PartitionClasses(n, rs);
  FullColoring out(n, static_cast<int>(rs.size()), 1);
  for (const Edge& e : AllEdges(n)) {
    out.Set(e, std::max(cls[static_cast<std::size_t>(e.u)],
                        cls[static_cast<std::size_t>(e.v)]));
  }
  return out;
}

FullColoring MatchingPartitionColoring(int t, int r) {
  if (t < 2 || r < 2) {
    throw PreconditionError("matching partition coloring needs t, r >= 2");
  }
  return PartitionColoring((t + 1) * r - t,
                           std::vector<int>(static_cast<std::size_t>(t), r));
}

std::vector<int> BlownK4Clusters(int n) {
  if (n < 3) throw PreconditionError("blown-up K4 needs n >= 3");
  std::vector<int> cluster(static_cast<std::size_t>(n));
  Vertex v = 0;
  for (int i = 0; i < 4; ++i) {
    const int size = n / 4 + (i < n % 4 ? 1 : 0);
    for (int j = 0; j < size; ++j) cluster[static_cast<std::size_t>(v++)] = i;
  }
  return cluster;
}

namespace {

// Color of a cross edge between clusters a != b (0-based).
Color K4Color(int a, int b) {
  if (a > b) std::swap(a, b);
  if ((a == 0 && b == 1) || (a == 2 && b == 3)) return 1;
  if ((a == 0 && b == 2) || (a == 1 && b == 3)) return 3;
  return 2;
}

}  // namespace

FullColoring BlownK4Coloring(int n) {
  const std::vector<int> cluster = BlownK4Clusters(n);
  FullColoring out(n, 3, 1);
  for (const Edge& e : AllEdges(n)) {
    const int a = cluster[static_cast<std::size_t>(e.u)];
    const int b = cluster[static_cast<std::size_t>(e.v)];
    if (a != b) out.Set(e, K4Color(a, b));
  }
  return out;
}

FixedPainter::FixedPainter(FullColoring coloring, std::string name)
    : coloring_(std::move(coloring)), name_(std::move(name)) {
  if (coloring_.n() < 2) throw PreconditionError("fixed painter needs a table");
}

Color FixedPainter::ColorOf(const Edge& e, const GameState& state) {
  if (state.n() != coloring_.n()) {
    throw PreconditionError("fixed coloring is for n = " +
                            std::to_string(coloring_.n()));
  }
  return coloring_.At(e);
}

MatchingAdversary::MatchingAdversary(int t, int r, GameVariant variant)
    : MatchingAdversary((t + 1) * r - t,
                        std::vector<int>(static_cast<std::size_t>(t), r),
                        variant) {
  if (t < 2 || r < 2) {
    throw PreconditionError("matching adversary needs t, r >= 2");
  }
}

MatchingAdversary::MatchingAdversary(int n, std::vector<int> rs,
                                     GameVariant variant)
    : variant_(variant),
      classes_(PartitionClasses(n, rs)),
      coloring_(PartitionColoring(n, rs)) {}

Color MatchingAdversary::ColorOf(const Edge& e, const GameState& state) {
  if (variant_ == GameVariant::kCornering && state.unexposed() == 1) {
    const bool inside = classes_[static_cast<std::size_t>(e.u)] == 1 &&
                        classes_[static_cast<std::size_t>(e.v)] == 1;
    return inside ? 2 : 1;
  }
  return coloring_.At(e);
}

std::string MatchingAdversary::Name() const {
  return "match-adv:" + std::string(ToString(variant_));
}

Tree2Adversary::Tree2Adversary(int n) : n_(n) {
  if (n < 2) throw PreconditionError("tree2 adversary needs n >= 2");
}

Color Tree2Adversary::ColorOf(const Edge&, const GameState&) {
  const std::int64_t i = answered_++;
  const std::int64_t stage = n_ - 2;
  if (i < stage) return 1;
  if (i < 2 * stage || n_ == 2) return 2;
  return 1;
}

Tree3Adversary::Tree3Adversary(int n)
    : cluster_(BlownK4Clusters(n)), coloring_(BlownK4Coloring(n)) {
  std::int64_t inside = 0;
  for (int i = 0; i < 4; ++i) {
    inside += PairCount(std::count(cluster_.begin(), cluster_.end(), i));
  }
  cross_left_ = PairCount(n) - inside;
}

Color Tree3Adversary::ColorOf(const Edge& e, const GameState&) {
  const Color base = coloring_.At(e);
  if (cluster_[static_cast<std::size_t>(e.u)] ==
      cluster_[static_cast<std::size_t>(e.v)]) {
    return base;
  }
  if (--cross_left_ == 0) return base == 1 ? 2 : 1;
  return base;
}

RandomPainter::RandomPainter(int t, std::int64_t seed)
    : t_(t), seed_(seed), rng_(static_cast<std::uint64_t>(seed)) {
  if (t < 2) throw PreconditionError("random painter needs t >= 2");
}

Color RandomPainter::ColorOf(const Edge&, const GameState&) {
  std::uniform_int_distribution<int> pick(1, t_);
  return pick(rng_);
}

std::string RandomPainter::Name() const {
  return "random:" + std::to_string(seed_);
}

ScriptedPainter::ScriptedPainter(std::vector<Color> script)
    : script_(std::move(script)) {}

Color ScriptedPainter::ColorOf(const Edge&, const GameState&) {
  const Color c =
      given_.size() < script_.size() ? script_[given_.size()] : 1;
  given_.push_back(c);
  return c;
}

namespace {

std::int64_t ParseSeed(std::string_view text) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError("bad seed '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::unique_ptr<PainterStrategy> MakePainter(std::string_view spec, int n,
                                             int t, const TargetSpec& targets) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (head == "random") {
    if (arg.empty()) throw PreconditionError("random painter needs a seed");
    return std::make_unique<RandomPainter>(t, ParseSeed(arg));
  }
  if (head == "fixed") {
    std::ifstream in{std::string(arg)};
    if (!in) {
      throw PreconditionError("cannot open coloring file '" +
                              std::string(arg) + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    FullColoring coloring = DecodeColoring(buffer.str());
    if (coloring.n() != n || coloring.t() != t) {
      throw PreconditionError("coloring file does not match n and t");
    }
    return std::make_unique<FixedPainter>(std::move(coloring),
                                          "fixed:" + std::string(arg));
  }
  if (head == "match-adv") {
    const GameVariant variant = ParseVariant(arg);
    if (!targets.AllMatchings()) {
      throw PreconditionError("match-adv needs matching targets");
    }
    std::vector<int> rs;
    for (const Goal& g : targets.goals) rs.push_back(g.size);
    return std::make_unique<MatchingAdversary>(n, rs, variant);
  }
  if (head == "tree2-adv" && arg.empty()) {
    return std::make_unique<Tree2Adversary>(n);
  }
  if (head == "tree3-adv" && arg.empty()) {
    if (t != 3) throw PreconditionError("tree3-adv requires t = 3");
    return std::make_unique<Tree3Adversary>(n);
  }
  throw PreconditionError("unknown painter '" + std::string(spec) + "'");
}

}  // namespace ramsey
