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

#ifndef RAMSEY_TOOLS_CLI_H_
#define RAMSEY_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/types.h"

namespace ramsey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;

// "matching:r1,...,rt", "tree" or "tree:K". Bare "tree" means Tree(n) for
// t = 2, Tree(k(n)) for t = 3 classic and Tree(k(n) + 1) for t = 3 under
// locating or cornering. Throws PreconditionError on bad input.
TargetSpec ParseTargets(std::string_view text, int n, int t,
                        GameVariant variant);

struct NRange {
  int start = 0;
  int stop = 0;
  int step = 1;
  std::vector<int> Values() const;
};

// "start:stop[:step]", inclusive. Throws PreconditionError when empty.
NRange ParseNRange(std::string_view text);

struct SweepRow {
  int n = 0;
  int t = 0;
  GameVariant variant = GameVariant::kClassic;
  std::string builder;
  std::string painter;
  std::optional<std::int64_t> seed;
  std::int64_t queries = 0;
  std::int64_t bound = 0;
  bool within_bound = false;
  Color structure_color = kNoColor;
  int structure_size = 0;
};

std::string CsvHeader();
std::string CsvLine(const SweepRow& row);

// Entry point shared by the binary and the tests.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ramsey::cli

#endif  // RAMSEY_TOOLS_CLI_H_
