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

// Closed-form quantities: Ramsey numbers of matchings and trees, the
// guaranteed 3-color tree order k(n), query budgets and lower bounds.
//
// lg is log base 2 with the convention lg 0 = 0.

#ifndef RAMSEY_FORMULAS_H_
#define RAMSEY_FORMULAS_H_

#include <cstdint>
#include <optional>
#include <span>

#include "ramsey/types.h"

namespace ramsey {

// log2(x), except Lg(0) == 0. Throws PreconditionError for x < 0.
double Lg(double x);

// floor(lg x) for integer x >= 0, with FloorLg(0) == 0.
int FloorLg(std::int64_t x);

// R(r_1 K_2, ..., r_t K_2) = max r_i + 1 + sum (r_i - 1).
int RamseyMatchingNumber(std::span<const int> rs);

// n/2 + 1 when n = 2 (mod 4), ceil(n/2) otherwise. Requires n >= 3.
int KOf(int n);

// R_2(T_n) = n; R_3(T_n) = 2n - 2 (n even) or 2n - 1 (n odd).
int TreeRamsey(int t, int n);

// (t - 1)(r - 1) + 1.
std::int64_t TrivialOnlineValue(int t, int r);

// Per-component query budget 2k - 1 + (k - 3) lg(m - 2); q(1,1) = 1.
// Admissible: (m, k) = (1, 1) or m, k >= 2.
double QBound(int m, int k);

// (2t - 1 + (t - 3) lg(t - 2)) / (t + 1), the per-vertex matching budget.
double MatchingCoefficient(int t);

// floor(MatchingCoefficient(t) * n), with a small tolerance so exact
// rationals such as 5n/4 are not rounded down by floating error.
std::int64_t MatchingQueryBudget(int t, int n);

// Cornering lower bound for n = (t + 1) r - t:
// t = 2: (2n + 1)(n - 1) / 9; t = 3: (7n + 1)(n - 1) / 16; t >= 4: C(n, 2).
std::int64_t MatchingCorneringLowerBound(int t, int n);

// 6 floor(n/4)^2. Requires n >= 3.
std::int64_t Tree3LowerBound(int n);

// The Ramsey number of the target families when a closed form is known:
// all matchings (any t), TreeFamily(k) in every color for t in {2, 3}, and
// TreeFamily(2) (a single edge) for any t.
std::optional<int> KnownRamseyNumber(const TargetSpec& targets);

}  // namespace ramsey

#endif  // RAMSEY_FORMULAS_H_
