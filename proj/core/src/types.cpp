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

#include "ramsey/types.h"

#include <algorithm>
#include <sstream>

#include "ramsey/errors.h"

namespace ramsey {
namespace internal {

void ThrowInvariant(const char* expr, const char* file, int line,
                    const std::string& detail) {
  std::ostringstream msg;
  msg << "invariant violated: " << expr << " at " << file << ":" << line;
  if (!detail.empty()) msg << " (" << detail << ")";
  throw InvariantViolation(msg.str());
}

}  // namespace internal

Edge Edge::Of(Vertex a, Vertex b) {
  if (a == b) {
    throw PreconditionError("loop edge [" + std::to_string(a) + "," +
                            std::to_string(b) + "] is not an edge of K_n");
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string ToString(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::string ToString(const Goal& g) {
  return (g.kind == GoalKind::kMatching ? "matching(" : "tree(") +
         std::to_string(g.size) + ")";
}

TargetSpec TargetSpec::Matchings(const std::vector<int>& rs) {
  TargetSpec spec;
  for (int r : rs) spec.goals.push_back(Goal::Matching(r));
  return spec;
}

TargetSpec TargetSpec::Uniform(Goal g, int t) {
  return TargetSpec{std::vector<Goal>(static_cast<std::size_t>(t), g)};
}

bool TargetSpec::AllMatchings() const {
  return std::all_of(goals.begin(), goals.end(), [](const Goal& g) {
    return g.kind == GoalKind::kMatching;
  });
}

bool TargetSpec::AllTrees() const {
  return std::all_of(goals.begin(), goals.end(),
                     [](const Goal& g) { return g.kind == GoalKind::kTree; });
}

std::string ToString(const TargetSpec& targets) {
  std::string out = "[";
  for (std::size_t i = 0; i < targets.goals.size(); ++i) {
    if (i > 0) out += ",";
    out += ToString(targets.goals[i]);
  }
  return out + "]";
}

std::string_view ToString(GameVariant v) {
  switch (v) {
    case GameVariant::kClassic:
      return "classic";
    case GameVariant::kLocating:
      return "locating";
    case GameVariant::kCornering:
      return "cornering";
  }
  return "?";
}

GameVariant ParseVariant(std::string_view text) {
  if (text == "classic") return GameVariant::kClassic;
  if (text == "locating") return GameVariant::kLocating;
  if (text == "cornering") return GameVariant::kCornering;
  throw PreconditionError("unknown variant '" + std::string(text) +
                          "' (expected classic|locating|cornering)");
}

std::string_view ToString(CertificateKind k) {
  switch (k) {
    case CertificateKind::kFoundCopy:
      return "found";
    case CertificateKind::kExclusion:
      return "exclusion";
    case CertificateKind::kCorneredColor:
      return "cornered";
  }
  return "?";
}

}  // namespace ramsey
