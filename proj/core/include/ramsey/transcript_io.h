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

// JSON documents for transcripts and full colorings.
//
// Transcript:
//   {"n", "t", "variant", "targets": [{"kind": "matching", "r"} |
//    {"kind": "tree", "k"}], "builder", "painter", "seed": int|null,
//    "moves": [{"u", "v", "c", "tag": string|null}],
//    "result": {"kind": "found|exclusion|cornered", "color": int|null,
//               "edges": [[u, v]]|null, "queries"}}
// Coloring:
//   {"n", "t", "edges": [{"u", "v", "c"}]} listing every pair once.

#ifndef RAMSEY_TRANSCRIPT_IO_H_
#define RAMSEY_TRANSCRIPT_IO_H_

#include <string>
#include <string_view>

#include "ramsey/game.h"

namespace ramsey {

class FullColoring;

std::string EncodeTranscript(const Transcript& transcript);
// Throws FormatError on malformed documents, loops, duplicate or off-board
// edges and colors outside [1, t].
Transcript DecodeTranscript(std::string_view text);

std::string EncodeColoring(const FullColoring& coloring);
// Throws FormatError unless every pair of K_n appears exactly once.
FullColoring DecodeColoring(std::string_view text);

// {"kind", "color", "edges"} for a certificate, as used in result blocks.
std::string EncodeCertificate(const WinCertificate& certificate);

}  // namespace ramsey

#endif  // RAMSEY_TRANSCRIPT_IO_H_
