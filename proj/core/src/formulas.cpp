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

#include "ramsey/formulas.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ramsey/errors.h"

namespace ramsey {

double Lg(double x) {
  if (x < 0) throw PreconditionError("lg of a negative argument");
  return x == 0 ? 0.0 : std::log2(x);
}

int FloorLg(std::int64_t x) {
  if (x < 0) throw PreconditionError("lg of a negative argument");
  int out = 0;
  while (x > 1) {
    x >>= 1;
    ++out;
  }
  return out;
}

int RamseyMatchingNumber(std::span<const int> rs) {
  if (rs.size() < 2) {
    throw PreconditionError("matching Ramsey number needs at least 2 colors");
  }
  int sum = 0;
  for (int r : rs) {
    if (r < 1) throw PreconditionError("matching sizes must be positive");
    sum += r - 1;
  }
  return *std::max_element(rs.begin(), rs.end()) + 1 + sum;
}

int KOf(int n) {
  if (n < 3) throw PreconditionError("k(n) is defined for n >= 3");
  if (n % 4 == 2) return n / 2 + 1;
  return (n + 1) / 2;
}

int TreeRamsey(int t, int n) {
  if (n < 2) throw PreconditionError("tree Ramsey number needs n >= 2");
  if (t == 2) return n;
  if (t == 3) return n % 2 == 0 ? 2 * n - 2 : 2 * n - 1;
  throw PreconditionError("tree Ramsey number only known for t in {2,3}");
}

std::int64_t TrivialOnlineValue(int t, int r) {
  if (t < 1 || r < 1) throw PreconditionError("t and r must be positive");
  return static_cast<std::int64_t>(t - 1) * (r - 1) + 1;
}

double QBound(int m, int k) {
  if (m == 1 && k == 1) return 1.0;
  if (m < 2 || k < 2) {
    throw PreconditionError("q(m,k) is defined for (1,1) or m,k >= 2; got (" +
                            std::to_string(m) + "," + std::to_string(k) + ")");
  }
  return 2.0 * k - 1.0 + (k - 3) * Lg(m - 2);
}

double MatchingCoefficient(int t) {
  if (t < 2) throw PreconditionError("matching coefficient needs t >= 2");
  return (2.0 * t - 1.0 + (t - 3) * Lg(t - 2)) / (t + 1);
}

std::int64_t MatchingQueryBudget(int t, int n) {
  return static_cast<std::int64_t>(
      std::floor(MatchingCoefficient(t) * n + 1e-9));
}

std::int64_t MatchingCorneringLowerBound(int t, int n) {
  if (t < 2) throw PreconditionError("t must be at least 2");
  // n = (t + 1) r - t  <=>  n + t divisible by t + 1, r >= 2.
  if ((n + t) % (t + 1) != 0 || (n + t) / (t + 1) < 2) {
    throw PreconditionError("n = " + std::to_string(n) +
                            " is not of the form (t+1)r - t with r >= 2");
  }
  const std::int64_t nn = n;
  if (t == 2) return (2 * nn + 1) * (nn - 1) / 9;
  if (t == 3) return (7 * nn + 1) * (nn - 1) / 16;
  return PairCount(nn);
}

std::int64_t Tree3LowerBound(int n) {
  if (n < 3) throw PreconditionError("tree lower bound needs n >= 3");
  const std::int64_t q = n / 4;
  return 6 * q * q;
}

std::optional<int> KnownRamseyNumber(const TargetSpec& targets) {
  const int t = targets.t();
  if (t < 2) return std::nullopt;
  if (targets.AllMatchings()) {
    std::vector<int> rs;
    for (const Goal& g : targets.goals) rs.push_back(g.size);
    return RamseyMatchingNumber(rs);
  }
  if (!targets.AllTrees()) return std::nullopt;
  const int k = targets.goals.front().size;
  for (const Goal& g : targets.goals) {
    if (g.size != k) return std::nullopt;
  }
  if (k == 2) return 2;
  if (t == 2 || t == 3) return TreeRamsey(t, k);
  return std::nullopt;
}

}  // namespace ramsey
