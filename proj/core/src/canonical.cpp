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

// Memo keys for solver states.
//
// The canonical key is the lexicographically least edge-color sequence over
// all vertex orders that respect a color-refinement partition. Edges are
// read in colex order (01, 02, 12, 03, 13, 23, ...) so that placing the
// vertex at position p fixes one contiguous block of the sequence, which
// allows branch-and-bound on prefixes. Interchangeable vertices (same color
// towards every third vertex) are tried once per position.

#include <algorithm>
#include <bit>
#include <map>
#include <span>
#include <vector>

#include "ramsey/errors.h"
#include "ramsey/solver.h"

namespace ramsey {
namespace {

using Matrix = std::vector<std::vector<std::uint8_t>>;

Matrix ColorMatrix(const SolverState& s) {
  Matrix m(static_cast<std::size_t>(s.n),
           std::vector<std::uint8_t>(static_cast<std::size_t>(s.n), 0));
  std::size_t idx = 0;
  for (int u = 0; u < s.n; ++u) {
    for (int v = u + 1; v < s.n; ++v, ++idx) {
      m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = s.colors[idx];
      m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = s.colors[idx];
    }
  }
  return m;
}

// Stable color refinement; labels are ranks of sorted signatures and hence
// invariant under relabeling.
std::vector<int> RefinedLabels(const Matrix& m, int n) {
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  int classes = 1;
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> nbrs;
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        nbrs.push_back(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] *
                           (n + 1) +
                       label[static_cast<std::size_t>(w)]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      auto& sv = sig[static_cast<std::size_t>(v)];
      sv.push_back(label[static_cast<std::size_t>(v)]);
      sv.insert(sv.end(), nbrs.begin(), nbrs.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& sv : sig) rank.emplace(sv, 0);
    int next = 0;
    for (auto& [sv, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) {
      label[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    }
    if (next == classes) return label;
    classes = next;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SolverState& s)
      : n_(s.n), m_(ColorMatrix(s)), label_(RefinedLabels(m_, s.n)) {
    for (int v = 0; v < n_; ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
      return label_[static_cast<std::size_t>(a)] <
             label_[static_cast<std::size_t>(b)];
    });
    twin_.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      twin_[static_cast<std::size_t>(v)] = v;
      for (int u = 0; u < v; ++u) {
        if (Twins(u, v)) {
          twin_[static_cast<std::size_t>(v)] = twin_[static_cast<std::size_t>(u)];
          break;
        }
      }
    }
    used_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::vector<std::uint8_t> Run() {
    Place(0, true);
    return best_;
  }

 private:
  bool Twins(int a, int b) const {
    for (int x = 0; x < n_; ++x) {
      if (x == a || x == b) continue;
      if (C(a, x) != C(b, x)) return false;
    }
    return true;
  }

  std::uint8_t C(int a, int b) const {
    return m_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  // `tight`: the current prefix equals the prefix of best_.
  void Place(int p, bool tight) {
    if (p == n_) {
      if (best_.empty() || !tight) best_ = seq_;
      return;
    }
    const int cell = label_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])];
    std::vector<int> tried_twins;
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] ||
          label_[static_cast<std::size_t>(v)] != cell) {
        continue;
      }
      const int rep = twin_[static_cast<std::size_t>(v)];
      if (std::find(tried_twins.begin(), tried_twins.end(), rep) !=
          tried_twins.end()) {
        continue;
      }
      tried_twins.push_back(rep);
      const std::size_t start = seq_.size();
      for (int i = 0; i < p; ++i) seq_.push_back(C(placed_[static_cast<std::size_t>(i)], v));
      bool next_tight = false;
      bool prune = false;
      if (tight && !best_.empty()) {
        const auto mine = std::span(seq_).subspan(start);
        const auto theirs = std::span(best_).subspan(start, mine.size());
        const auto cmp = std::lexicographical_compare_three_way(
            mine.begin(), mine.end(), theirs.begin(), theirs.end());
        prune = cmp > 0;
        next_tight = cmp == 0;
      }
      if (!prune) {
        used_[static_cast<std::size_t>(v)] = 1;
        placed_.push_back(v);
        Place(p + 1, next_tight);
        placed_.pop_back();
        used_[static_cast<std::size_t>(v)] = 0;
        // best_ may have improved; later siblings compare against it.
        if (!tight && !best_.empty()) tight = Prefix(start);
      }
      seq_.resize(start);
    }
  }

  // seq_[0, len) equals best_[0, len).
  bool Prefix(std::size_t len) const {
    return std::equal(seq_.begin(), seq_.begin() + static_cast<long>(len),
                      best_.begin());
  }

  int n_;
  Matrix m_;
  std::vector<int> label_;
  std::vector<int> order_;
  std::vector<int> twin_;
  std::vector<char> used_;
  std::vector<int> placed_;
  std::vector<std::uint8_t> seq_;
  std::vector<std::uint8_t> best_;
};

}  // namespace

std::uint64_t CanonicalKey(const SolverState& s, bool canonicalize) {
  const int bits = std::bit_width(static_cast<unsigned>(s.t));
  RAMSEY_INVARIANT(static_cast<std::int64_t>(s.colors.size()) * bits <= 64,
                   "state does not fit a 64-bit key");
  std::vector<std::uint8_t> seq;
  if (canonicalize) {
    seq = CanonicalSearch(s).Run();
  } else {
    seq = s.colors;
  }
  std::uint64_t key = 0;
  for (std::uint8_t c : seq) key = (key << bits) | c;
  return key;
}

}  // namespace ramsey
