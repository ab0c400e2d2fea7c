// Copyright 2026 The tilegf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <string>

#include "tilegf/errors.hpp"
#include "tilegf/oracle.hpp"

namespace tilegf::oracle {

namespace {

void validate_dims(int m, int n, int k) {
  if (k < 2) throw ValidationError("tile length k must be >= 2");
  if (m < 0 || n < 0) throw ValidationError("board dimensions must be >= 0");
}

// Shared backtracking engine. Boundary-crossing counts are maintained
// incrementally: crossings[a] = number of tiles whose interior the line
// x = a cuts. Once the first empty cell has moved to column >= a no future
// placement can cross a, so in fault-free mode a zero count there kills the
// subtree.
class Enumerator {
 public:
  Enumerator(int m, int n, int k, bool mixed, FaultFilter filter,
             const Budget& budget,
             std::function<void(const Board2D&)> on_complete,
             bool stop_at_first = false)
      : mixed_(mixed),
        filter_(filter),
        stop_at_first_(stop_at_first),
        budget_(budget),
        on_complete_(std::move(on_complete)) {
    board_.m = m;
    board_.n = n;
    board_.k = k;
    board_.occupied.assign(static_cast<size_t>(m) * n, 0);
    crossings_.assign(static_cast<size_t>(std::max(n, 1)), 0);
  }

  bool run() {
    if (board_.m == 0 || board_.n == 0) {
      // One empty tiling. A 0 x n board with n >= 2 has interior lines
      // crossed by nothing, so it fails the fault-free filter; callers
      // wanting the a(m,0) = 0 convention handle n = 0 themselves.
      bool ok = filter_ == FaultFilter::all ||
                !(board_.m == 0 && board_.n >= 2);
      if (ok) on_complete_(board_);
      return true;
    }
    return recurse(0);
  }

 private:
  bool cell(int x, int y) const {
    return board_.occupied[static_cast<size_t>(x) * board_.m + y] != 0;
  }
  void set_cell(int x, int y, char v) {
    board_.occupied[static_cast<size_t>(x) * board_.m + y] = v;
  }

  void spend_node() {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("backtracking node cap " +
                           std::to_string(budget_.max_nodes) + " reached");
  }

  // Returns false to abort the whole enumeration (existence short-circuit).
  bool recurse(int scan_from) {
    const int m = board_.m, n = board_.n, k = board_.k;
    // First uncovered cell, column-major.
    int idx = scan_from;
    const int total = m * n;
    while (idx < total &&
           board_.occupied[static_cast<size_t>(idx)] != 0)
      ++idx;
    if (idx == total) {
      if (filter_ == FaultFilter::fault_free_only) {
        for (int a = 1; a <= n - 1; ++a)
          if (crossings_[static_cast<size_t>(a)] == 0) return true;
      }
      on_complete_(board_);
      return !stop_at_first_;
    }
    const int x = idx / m;
    const int y = idx % m;

    if (filter_ == FaultFilter::fault_free_only) {
      // Boundaries at or left of the first empty column are final: later
      // placements anchor at column >= x and cross only boundaries beyond
      // their anchor.
      for (int a = 1; a <= x && a <= n - 1; ++a)
        if (crossings_[static_cast<size_t>(a)] == 0) return true;
    }

    // Horizontal k x 1: columns x..x+k-1 of row y.
    if (x + k <= n) {
      bool free = true;
      for (int i = 1; i < k; ++i)
        if (cell(x + i, y)) { free = false; break; }
      if (free && !place_span(x, y, k, 1, Shape::horizontal)) return false;
    }
    // Vertical k x 1: rows y..y+k-1 of column x.
    if (y + k <= m) {
      bool free = true;
      for (int j = 1; j < k; ++j)
        if (cell(x, y + j)) { free = false; break; }
      if (free && !place_span(x, y, 1, k, Shape::vertical)) return false;
    }
    // k x k square.
    if (mixed_ && x + k <= n && y + k <= m) {
      bool free = true;
      for (int i = 0; i < k && free; ++i)
        for (int j = 0; j < k; ++j)
          if ((i != 0 || j != 0) && cell(x + i, y + j)) { free = false; break; }
      if (free && !place_span(x, y, k, k, Shape::square)) return false;
    }
    return true;
  }

  bool place_span(int x, int y, int w, int h, Shape shape) {
    spend_node();
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < h; ++j) set_cell(x + i, y + j, 1);
    for (int a = x + 1; a < x + w; ++a) ++crossings_[static_cast<size_t>(a)];
    board_.placements.push_back({shape, x, y});
    if (shape == Shape::vertical) ++board_.stats.verticals;
    if (shape == Shape::square) ++board_.stats.squares;

    bool keep_going = recurse(x * board_.m + y);

    if (shape == Shape::vertical) --board_.stats.verticals;
    if (shape == Shape::square) --board_.stats.squares;
    board_.placements.pop_back();
    for (int a = x + 1; a < x + w; ++a) --crossings_[static_cast<size_t>(a)];
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < h; ++j) set_cell(x + i, y + j, 0);
    return keep_going;
  }

  bool mixed_;
  FaultFilter filter_;
  bool stop_at_first_;
  Budget budget_;
  std::function<void(const Board2D&)> on_complete_;
  Board2D board_;
  std::vector<int> crossings_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool Board2D::fault_at(int a) const {
  if (a < 1 || a > n - 1) return false;
  for (const Placement& p : placements) {
    int w = (p.shape == Shape::vertical) ? 1 : k;
    if (p.x < a && a < p.x + w) return false;
  }
  return true;
}

bool Board2D::is_fault_free() const {
  for (int a = 1; a <= n - 1; ++a)
    if (fault_at(a)) return false;
  return true;
}

void enumerate_tilings(int m, int n, int k, bool mixed, FaultFilter filter,
                       const Budget& budget,
                       const std::function<void(const Board2D&)>& on_complete) {
  validate_dims(m, n, k);
  Enumerator e(m, n, k, mixed, filter, budget, on_complete);
  e.run();
}

BigInt count_tilings_bt(int m, int n, int k, bool mixed, const Budget& budget) {
  BigInt count = 0;
  enumerate_tilings(m, n, k, mixed, FaultFilter::all, budget,
                    [&count](const Board2D&) { ++count; });
  return count;
}

bool tiling_exists_bt(int m, int n, int k, const Budget& budget) {
  validate_dims(m, n, k);
  bool found = false;
  Enumerator e(m, n, k, /*mixed=*/false, FaultFilter::all, budget,
               [&found](const Board2D&) { found = true; },
               /*stop_at_first=*/true);
  e.run();
  return found;
}

std::map<std::pair<int, int>, BigInt> count_by_stats(int m, int n, int k,
                                                     bool mixed,
                                                     const Budget& budget) {
  std::map<std::pair<int, int>, BigInt> out;
  enumerate_tilings(m, n, k, mixed, FaultFilter::all, budget,
                    [&out](const Board2D& b) {
                      ++out[{b.stats.verticals, b.stats.squares}];
                    });
  return out;
}

BigInt count_faultfree(int m, int n, int k, bool mixed, const Budget& budget) {
  validate_dims(m, n, k);
  if (n == 0) return 0;
  BigInt direct = 0;
  enumerate_tilings(m, n, k, mixed, FaultFilter::fault_free_only, budget,
                    [&direct](const Board2D&) { ++direct; });
  BigInt inverted = count_faultfree_via_inversion(m, n, k, mixed, budget);
  if (direct != inverted)
    throw ValidationError(
        "fault-free routes disagree: direct " + to_decimal(direct) +
        " vs inversion " + to_decimal(inverted));
  return direct;
}

BigInt count_faultfree_via_inversion(int m, int n, int k, bool mixed,
                                     const Budget& budget) {
  validate_dims(m, n, k);
  if (n == 0) return 0;
  std::vector<BigInt> h(static_cast<size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) h[static_cast<size_t>(l)] = count_tilings_bt(m, l, k, mixed, budget);
  std::vector<BigInt> a(static_cast<size_t>(n) + 1);
  for (int l = 1; l <= n; ++l) {
    BigInt acc = h[static_cast<size_t>(l)];
    for (int j = 1; j < l; ++j) acc -= a[static_cast<size_t>(j)] * h[static_cast<size_t>(l - j)];
    a[static_cast<size_t>(l)] = std::move(acc);
  }
  return a[static_cast<size_t>(n)];
}

std::map<std::pair<int, int>, BigInt> count_blocks_and_verticals(
    int m, int n, int k, const Budget& budget) {
  validate_dims(m, n, k);
  if (!(k < m && m < 2 * k))
    throw RegimeMismatch("blocks/verticals classification requires k < m < 2k");
  if (n % k != 0)
    throw ValidationError("n must be a multiple of k");
  std::map<std::pair<int, int>, BigInt> out;
  enumerate_tilings(
      m, n, k, /*mixed=*/false, FaultFilter::fault_free_only, budget,
      [&out, m, n, k](const Board2D& b) {
        // A block anchor (x0, y0) has a horizontal tile at (x0, y) for all
        // y in y0..y0+k-1.
        std::vector<char> horiz(static_cast<size_t>(m) * n, 0);
        for (const Placement& p : b.placements)
          if (p.shape == Shape::horizontal)
            horiz[static_cast<size_t>(p.x) * m + p.y] = 1;
        int blocks = 0;
        for (int x0 = 0; x0 + k <= n; ++x0) {
          for (int y0 = 0; y0 + k <= m; ++y0) {
            bool all = true;
            for (int j = 0; j < k; ++j)
              if (!horiz[static_cast<size_t>(x0) * m + y0 + j]) { all = false; break; }
            if (all) ++blocks;
          }
        }
        ++out[{b.stats.verticals, blocks}];
      });
  return out;
}

}  // namespace tilegf::oracle
