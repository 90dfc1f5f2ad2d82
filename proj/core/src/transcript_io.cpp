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

#include "ramsey/transcript_io.h"

#include <unordered_set>

#include "json.hpp"
#include "ramsey/errors.h"
#include "ramsey/painters.h"

namespace ramsey {
namespace {

using json = nlohmann::ordered_json;

json EdgeArray(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

CertificateKind ParseKind(const std::string& text) {
  if (text == "found") return CertificateKind::kFoundCopy;
  if (text == "exclusion") return CertificateKind::kExclusion;
  if (text == "cornered") return CertificateKind::kCorneredColor;
  throw FormatError("unknown result kind '" + text + "'");
}

int Int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

Edge CheckedEdge(int u, int v, int n) {
  if (u == v) {
    throw FormatError("loop edge [" + std::to_string(u) + ", " +
                      std::to_string(v) + "]");
  }
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw FormatError("edge [" + std::to_string(u) + ", " + std::to_string(v) +
                      "] is off the board");
  }
  return Edge::Of(u, v);
}

Color CheckedColor(int c, int t) {
  if (c < 1 || c > t) {
    throw FormatError("color " + std::to_string(c) + " outside [1, " +
                      std::to_string(t) + "]");
  }
  return c;
}

void CheckSize(int n, int t) {
  if (n < 2) throw FormatError("n must be at least 2");
  if (t < 1 || t > 255) throw FormatError("t must lie in [1, 255]");
}

json Parse(std::string_view text) {
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw FormatError("document must be a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

Transcript DecodeTranscriptJson(const json& j) {
  Transcript tr;
  tr.n = Int(j, "n");
  tr.t = Int(j, "t");
  CheckSize(tr.n, tr.t);
  try {
    tr.variant = ParseVariant(j.at("variant").get<std::string>());
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
  const json& targets = j.at("targets");
  if (!targets.is_array() || static_cast<int>(targets.size()) != tr.t) {
    throw FormatError("targets must list exactly t goals");
  }
  for (const json& g : targets) {
    const std::string kind = g.at("kind").get<std::string>();
    if (kind == "matching") {
      const int r = Int(g, "r");
      if (r < 1) throw FormatError("matching goal needs r >= 1");
      tr.targets.goals.push_back(Goal::Matching(r));
    } else if (kind == "tree") {
      const int k = Int(g, "k");
      if (k < 2) throw FormatError("tree goal needs k >= 2");
      tr.targets.goals.push_back(Goal::Tree(k));
    } else {
      throw FormatError("unknown goal kind '" + kind + "'");
    }
  }
  tr.builder = j.value("builder", "");
  tr.painter = j.value("painter", "");
  if (j.contains("seed") && !j.at("seed").is_null()) {
    tr.seed = j.at("seed").get<std::int64_t>();
  }
  std::unordered_set<Edge> seen;
  for (const json& m : j.at("moves")) {
    TranscriptMove move;
    move.edge = CheckedEdge(Int(m, "u"), Int(m, "v"), tr.n);
    move.color = CheckedColor(Int(m, "c"), tr.t);
    if (!seen.insert(move.edge).second) {
      throw FormatError("edge " + ToString(move.edge) + " appears twice");
    }
    if (m.contains("tag") && !m.at("tag").is_null()) {
      move.tag = m.at("tag").get<std::string>();
    }
    tr.moves.push_back(std::move(move));
  }
  if (j.contains("result") && !j.at("result").is_null()) {
    const json& r = j.at("result");
    TranscriptResult result;
    result.kind = ParseKind(r.at("kind").get<std::string>());
    if (r.contains("color") && !r.at("color").is_null()) {
      result.color = CheckedColor(r.at("color").get<int>(), tr.t);
    }
    if (r.contains("edges") && !r.at("edges").is_null()) {
      std::vector<Edge> edges;
      for (const json& e : r.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw FormatError("result edges must be [u, v] pairs");
        }
        edges.push_back(CheckedEdge(e[0].get<int>(), e[1].get<int>(), tr.n));
      }
      result.edges = std::move(edges);
    }
    result.queries = r.at("queries").get<std::int64_t>();
    tr.result = std::move(result);
  }
  return tr;
}

}  // namespace

std::string EncodeTranscript(const Transcript& tr) {
  json j;
  j["n"] = tr.n;
  j["t"] = tr.t;
  j["variant"] = std::string(ToString(tr.variant));
  json targets = json::array();
  for (const Goal& g : tr.targets.goals) {
    if (g.kind == GoalKind::kMatching) {
      targets.push_back({{"kind", "matching"}, {"r", g.size}});
    } else {
      targets.push_back({{"kind", "tree"}, {"k", g.size}});
    }
  }
  j["targets"] = std::move(targets);
  j["builder"] = tr.builder;
  j["painter"] = tr.painter;
  j["seed"] = tr.seed ? json(*tr.seed) : json(nullptr);
  json moves = json::array();
  for (const TranscriptMove& m : tr.moves) {
    moves.push_back({{"u", m.edge.u},
                     {"v", m.edge.v},
                     {"c", m.color},
                     {"tag", m.tag ? json(*m.tag) : json(nullptr)}});
  }
  j["moves"] = std::move(moves);
  if (tr.result) {
    const TranscriptResult& r = *tr.result;
    j["result"] = {
        {"kind", std::string(ToString(r.kind))},
        {"color", r.color ? json(*r.color) : json(nullptr)},
        {"edges", r.edges ? EdgeArray(*r.edges) : json(nullptr)},
        {"queries", r.queries}};
  } else {
    j["result"] = nullptr;
  }
  return j.dump(2);
}

Transcript DecodeTranscript(std::string_view text) {
  const json j = Parse(text);
  try {
    return DecodeTranscriptJson(j);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad transcript: ") + e.what());
  }
}

std::string EncodeColoring(const FullColoring& coloring) {
  json edges = json::array();
  for (Vertex u = 0; u < coloring.n(); ++u) {
    for (Vertex v = u + 1; v < coloring.n(); ++v) {
      edges.push_back({{"u", u}, {"v", v}, {"c", coloring.At(Edge{u, v})}});
    }
  }
  json j;
  j["n"] = coloring.n();
  j["t"] = coloring.t();
  j["edges"] = std::move(edges);
  return j.dump(2);
}

FullColoring DecodeColoring(std::string_view text) {
  const json j = Parse(text);
  try {
    const int n = Int(j, "n");
    const int t = Int(j, "t");
    CheckSize(n, t);
    FullColoring out(n, t, 1);
    std::unordered_set<Edge> seen;
    for (const json& e : j.at("edges")) {
      const Edge edge = CheckedEdge(Int(e, "u"), Int(e, "v"), n);
      if (!seen.insert(edge).second) {
        throw FormatError("edge " + ToString(edge) + " appears twice");
      }
      out.Set(edge, CheckedColor(Int(e, "c"), t));
    }
    if (static_cast<std::int64_t>(seen.size()) != PairCount(n)) {
      throw FormatError("coloring covers " + std::to_string(seen.size()) +
                        " of " + std::to_string(PairCount(n)) + " edges");
    }
    return out;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad coloring: ") + e.what());
  }
}

std::string EncodeCertificate(const WinCertificate& cert) {
  json j;
  j["kind"] = std::string(ToString(cert.kind));
  j["color"] = cert.color == kNoColor ? json(nullptr) : json(cert.color);
  j["edges"] = cert.kind == CertificateKind::kFoundCopy ? EdgeArray(cert.edges)
                                                        : json(nullptr);
  return j.dump();
}

}  // namespace ramsey
