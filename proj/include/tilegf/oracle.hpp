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

#ifndef TILEGF_ORACLE_HPP
#define TILEGF_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "tilegf/bigint.hpp"

namespace tilegf::oracle {

// Ground-truth counters, independent of every closed form: first-empty-cell
// backtracking over explicit boards, and a broken-profile transfer matrix.
// The board is m rows tall (y-axis) and n columns wide (x-axis); a vertical
// tile spans k rows of one column, a horizontal tile spans k columns of one
// row.

struct Budget {
  std::uint64_t max_nodes = 100'000'000;  // backtracking placement steps
  std::uint64_t max_states = 1u << 22;    // transfer-matrix profile states
};

enum class Shape { horizontal, vertical, square };

struct Placement {
  Shape shape;
  int x;  // anchor column (leftmost)
  int y;  // anchor row (bottom)
};

/// Per-tiling statistics: r vertical tiles, s square tiles.
struct TileStats {
  int verticals = 0;
  int squares = 0;
};

struct Board2D {
  int m = 0;
  int n = 0;
  int k = 0;
  std::vector<char> occupied;  // column-major: cell (x, y) at x*m + y
  std::vector<Placement> placements;
  TileStats stats;

  bool cell(int x, int y) const { return occupied[static_cast<size_t>(x) * m + y] != 0; }
  /// True iff the vertical line x = a cuts no tile interior (1 <= a <= n-1).
  bool fault_at(int a) const;
  bool is_fault_free() const;
};

enum class FaultFilter { all, fault_free_only };

/// Enumerate complete tilings by k x 1 tiles (plus k x k squares when
/// mixed), invoking on_complete for each. The first uncovered cell in
/// column-major order (x ascending, then y) is covered by each feasible
/// placement in turn, so every tiling is generated exactly once.
/// FaultFilter::fault_free_only prunes subtrees that already committed to a
/// fault. Throws BudgetExceeded past budget.max_nodes placement steps.
void enumerate_tilings(int m, int n, int k, bool mixed, FaultFilter filter,
                       const Budget& budget,
                       const std::function<void(const Board2D&)>& on_complete);

/// Number of complete tilings; h(m,0) = h(0,n) = 1.
BigInt count_tilings_bt(int m, int n, int k, bool mixed = false,
                        const Budget& budget = {});

/// Existence check with early exit on the first complete tiling. Proving
/// non-existence this way can blow up; prefer tiling_exists_profile beyond
/// toy sizes.
bool tiling_exists_bt(int m, int n, int k, const Budget& budget = {});

/// Existence via profile reachability: the board is oriented so the
/// smaller side is the height, then a boolean column sweep marks reachable
/// profiles. Decides m x n boards with k^min(m,n) within max_states.
bool tiling_exists_profile(int m, int n, int k, const Budget& budget = {});

/// Tilings partitioned by (verticals, squares). Values sum to the total.
std::map<std::pair<int, int>, BigInt> count_by_stats(int m, int n, int k,
                                                     bool mixed,
                                                     const Budget& budget = {});

/// Fault-free tilings, computed two ways that must agree: direct
/// enumeration with the fault test, and the inversion
///   a(n) = h(n) - sum_{l=1..n-1} a(l) h(n-l)
/// from plain counts. Width-0 boards are not fault-free pieces: returns 0
/// for n = 0, matching the generating-function convention a(m,0) = 0.
BigInt count_faultfree(int m, int n, int k, bool mixed = false,
                       const Budget& budget = {});

/// The inversion route alone (used as an independent cross-check).
BigInt count_faultfree_via_inversion(int m, int n, int k, bool mixed = false,
                                     const Budget& budget = {});

/// Fault-free tilings classified by (vertical tiles, blocks), where a block
/// is k contiguous horizontal tiles stacked into a k x k square. Requires
/// k < m < 2k and n a multiple of k.
std::map<std::pair<int, int>, BigInt> count_blocks_and_verticals(
    int m, int n, int k, const Budget& budget = {});

/// 3D brick tilings of an m x n x k box by k x k x 1 bricks, classified by
/// orientation: r bricks parallel to the yz-plane, s parallel to xy.
struct Count3D {
  BigInt total = 0;
  std::map<std::pair<int, int>, BigInt> by_orientation;  // (r, s) -> count
};

Count3D count_3d(int m, int n, int k, const Budget& budget = {});

/// Column-sweep dynamic program over broken profiles. The per-row digit in
/// {0..k-1} records how many further columns the horizontal tile covering
/// this row's cell extends, so the state space is k^m; vertical tiles are
/// resolved inside a column before advancing. Agrees with count_tilings_bt
/// everywhere both run, with no regime restriction on m.
BigInt transfer_matrix_count(int m, int n, int k, const Budget& budget = {});

/// Fast fault-free path: a fault at x = a is exactly the all-zeros profile
/// at that boundary, so fault-free counts forbid it at 1 <= a <= n-1.
BigInt transfer_matrix_faultfree_count(int m, int n, int k,
                                       const Budget& budget = {});

}  // namespace tilegf::oracle

#endif  // TILEGF_ORACLE_HPP
