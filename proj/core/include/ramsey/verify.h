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

// Invariant suites behind `ramsey verify`.
//   treeextend   TreeExtend on every small tree, coloring and reply path
//   compextend   CompExtend on star-seeded boards, every reply path
//   forest       matching builder forests, shapes and per-component budgets
//   colorings    partition and blown-up K4 colorings with their flips
//   solver-cross solver values across variants and canonicalization

#ifndef RAMSEY_VERIFY_H_
#define RAMSEY_VERIFY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/explore.h"
#include "ramsey/forest.h"

namespace ramsey {

struct VerifyOptions {
  // Smaller instance ranges, for smoke runs.
  bool quick = false;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::vector<std::string> lines;
  double seconds = 0.0;
};

std::vector<std::string> VerifySuiteNames();

// Runs one suite, or every suite for "all". Throws PreconditionError on an
// unknown name.
std::vector<SuiteReport> RunVerify(std::string_view name,
                                   const VerifyOptions& options = {});

// Allowed (edges, colours) values after TreeExtend. Returns a description of
// the violated clause, or nullopt.
std::optional<std::string> AllowedValuesProblem(const ColoredTree& before,
                                                const ColoredTree& after);

struct TreeExtendTally {
  std::int64_t trees = 0;
  std::int64_t colorings = 0;
  std::int64_t runs = 0;
  std::int64_t postcondition_failures = 0;
  std::int64_t bound_failures = 0;
  std::int64_t allowed_value_failures = 0;
  std::int64_t exits[4] = {0, 0, 0, 0};
  std::string first_postcondition_failure;
  std::string first_bound_failure;
  std::string first_allowed_value_failure;
};

// TreeExtend over all trees on 2..max_vertices vertices. Colorings in
// [1, colors] are enumerated in full up to full_up_to vertices and sampled
// (sample_per_tree each) above; replies range over [1, t].
TreeExtendTally RunTreeExtendSweep(int max_vertices, int full_up_to,
                                   int colors, int sample_per_tree, int t,
                                   std::uint64_t seed = 1);

}  // namespace ramsey

#endif  // RAMSEY_VERIFY_H_
