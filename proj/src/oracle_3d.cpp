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

#include <string>

#include "tilegf/errors.hpp"
#include "tilegf/oracle.hpp"

namespace tilegf::oracle {

namespace {

// Box of size n x m x k along x, y, z. A brick occupies k x k x 1 cells,
// thin along exactly one axis:
//   xy-parallel: k in x, k in y, 1 in z  (s statistic)
//   yz-parallel: 1 in x, k in y, k in z  (r statistic)
//   xz-parallel: k in x, 1 in y, k in z
class Enumerator3D {
 public:
  Enumerator3D(int m, int n, int k, const Budget& budget, Count3D& out)
      : m_(m), n_(n), k_(k), budget_(budget), out_(out) {
    occupied_.assign(static_cast<size_t>(m) * n * k, 0);
  }

  void run() {
    if (m_ == 0 || n_ == 0) {
      out_.total = 1;
      ++out_.by_orientation[{0, 0}];
      return;
    }
    recurse(0);
  }

 private:
  size_t index(int x, int y, int z) const {
    return (static_cast<size_t>(x) * m_ + y) * k_ + z;
  }
  bool cell(int x, int y, int z) const { return occupied_[index(x, y, z)] != 0; }

  void spend_node() {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("3d backtracking node cap " +
                           std::to_string(budget_.max_nodes) + " reached");
  }

  // Scan order x, then y, then z; every brick covering the first empty
  // cell has it as its minimal corner, so the anchor is forced and only
  // the orientation varies.
  void recurse(int scan_from) {
    const int total = m_ * n_ * k_;
    int idx = scan_from;
    while (idx < total && occupied_[static_cast<size_t>(idx)] != 0) ++idx;
    if (idx == total) {
      out_.total += 1;
      ++out_.by_orientation[{r_, s_}];
      return;
    }
    const int x = idx / (m_ * k_);
    const int y = (idx / k_) % m_;
    const int z = idx % k_;

    try_place(x, y, z, k_, k_, 1, idx, /*dr=*/0, /*ds=*/1);  // xy-parallel
    try_place(x, y, z, 1, k_, k_, idx, /*dr=*/1, /*ds=*/0);  // yz-parallel
    try_place(x, y, z, k_, 1, k_, idx, /*dr=*/0, /*ds=*/0);  // xz-parallel
  }

  void try_place(int x, int y, int z, int dx, int dy, int dz, int scan_from,
                 int dr, int ds) {
    if (x + dx > n_ || y + dy > m_ || z + dz > k_) return;
    for (int i = 0; i < dx; ++i)
      for (int j = 0; j < dy; ++j)
        for (int l = 0; l < dz; ++l)
          if ((i | j | l) != 0 && cell(x + i, y + j, z + l)) return;
    spend_node();
    fill(x, y, z, dx, dy, dz, 1);
    r_ += dr;
    s_ += ds;
    recurse(scan_from);
    r_ -= dr;
    s_ -= ds;
    fill(x, y, z, dx, dy, dz, 0);
  }

  void fill(int x, int y, int z, int dx, int dy, int dz, char v) {
    for (int i = 0; i < dx; ++i)
      for (int j = 0; j < dy; ++j)
        for (int l = 0; l < dz; ++l) occupied_[index(x + i, y + j, z + l)] = v;
  }

  int m_, n_, k_;
  Budget budget_;
  Count3D& out_;
  std::vector<char> occupied_;
  int r_ = 0;
  int s_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Count3D count_3d(int m, int n, int k, const Budget& budget) {
  if (k < 2) throw ValidationError("brick size k must be >= 2");
  if (m < 0 || n < 0) throw ValidationError("box dimensions must be >= 0");
  Count3D out;
  Enumerator3D e(m, n, k, budget, out);
  e.run();
  return out;
}

}  // namespace tilegf::oracle
