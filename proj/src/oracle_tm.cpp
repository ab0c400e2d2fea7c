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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tilegf/errors.hpp"
#include "tilegf/oracle.hpp"

namespace tilegf::oracle {

namespace {

// Broken-profile machinery shared by the counting and reachability sweeps.
// One digit in {0..k-1} per row, encoded base k: digit[y] = number of
// columns after the current one still covered by the horizontal tile
// running through row y. The all-zeros profile at a column boundary means
// no tile crosses it — exactly a fault (or the board edge).
class ProfileSweep {
 public:
  ProfileSweep(int m, int n, int k, const Budget& budget) : m_(m), n_(n), k_(k) {
    if (k < 2) throw ValidationError("tile length k must be >= 2");
    if (m < 0 || n < 0) throw ValidationError("board dimensions must be >= 0");
    states_ = 1;
    for (int i = 0; i < m; ++i) {
      states_ *= static_cast<std::uint64_t>(k);
      if (states_ > budget.max_states)
        throw BudgetExceeded("profile state space k^m exceeds cap " +
                             std::to_string(budget.max_states));
    }
    digits_.assign(static_cast<size_t>(m), 0);
    out_digit_.assign(static_cast<size_t>(m), 0);
  }

  std::uint64_t state_count() const { return states_; }

  // Enumerate every way to resolve one column of the given profile:
  // rows with a positive digit are already covered; a zero-digit row either
  // starts a horizontal tile (digit k-1 afterwards) or begins a vertical
  // tile spanning k zero-digit rows. emit() receives each successor state.
  template <typename Emit>
  void transitions(std::uint64_t state, bool horizontal_fits, Emit&& emit) {
    std::uint64_t s = state;
    for (int y = 0; y < m_; ++y) {
      digits_[static_cast<size_t>(y)] = static_cast<int>(s % k_);
      s /= static_cast<std::uint64_t>(k_);
    }
    fill_from(0, horizontal_fits, emit);
  }

 private:
  template <typename Emit>
  void fill_from(int y, bool horizontal_fits, Emit&& emit) {
    if (y == m_) {
      std::uint64_t state = 0;
      for (int yy = m_ - 1; yy >= 0; --yy)
        state = state * static_cast<std::uint64_t>(k_) +
                static_cast<std::uint64_t>(out_digit_[static_cast<size_t>(yy)]);
      emit(state);
      return;
    }
    if (digits_[static_cast<size_t>(y)] > 0) {
      out_digit_[static_cast<size_t>(y)] = digits_[static_cast<size_t>(y)] - 1;
      fill_from(y + 1, horizontal_fits, emit);
      return;
    }
    if (horizontal_fits) {
      out_digit_[static_cast<size_t>(y)] = k_ - 1;
      fill_from(y + 1, horizontal_fits, emit);
    }
    if (y + k_ <= m_) {
      bool clear = true;
      for (int j = 0; j < k_; ++j)
        if (digits_[static_cast<size_t>(y + j)] > 0) { clear = false; break; }
      if (clear) {
        for (int j = 0; j < k_; ++j) out_digit_[static_cast<size_t>(y + j)] = 0;
        fill_from(y + k_, horizontal_fits, emit);
      }
    }
  }

  int m_, n_, k_;
  std::uint64_t states_ = 1;
  std::vector<int> digits_;
  std::vector<int> out_digit_;
};

BigInt profile_count(int m, int n, int k, const Budget& budget,
                     bool fault_free) {
  ProfileSweep sweep(m, n, k, budget);
  if (n == 0) return fault_free ? BigInt(0) : BigInt(1);

  std::map<std::uint64_t, BigInt> current;
  current[0] = 1;
  for (int col = 0; col < n; ++col) {
    std::map<std::uint64_t, BigInt> next;
    const bool horizontal_fits = col + k <= n;
    for (const auto& [state, ways] : current) {
      sweep.transitions(state, horizontal_fits,
                        [&next, &ways](std::uint64_t out) { next[out] += ways; });
    }
    if (fault_free && col < n - 1) next.erase(0);
    current = std::move(next);
  }
  auto it = current.find(0);
  return it == current.end() ? BigInt(0) : it->second;
}

}  // namespace

BigInt transfer_matrix_count(int m, int n, int k, const Budget& budget) {
  return profile_count(m, n, k, budget, /*fault_free=*/false);
}

BigInt transfer_matrix_faultfree_count(int m, int n, int k,
                                       const Budget& budget) {
  return profile_count(m, n, k, budget, /*fault_free=*/true);
}

bool tiling_exists_profile(int m, int n, int k, const Budget& budget) {
  if (k < 2) throw ValidationError("tile length k must be >= 2");
  if (m < 0 || n < 0) throw ValidationError("board dimensions must be >= 0");
  if (m == 0 || n == 0) return true;
  if (m > n) std::swap(m, n);  // counts are transpose-invariant

  ProfileSweep sweep(m, n, k, budget);
  std::vector<char> current(sweep.state_count(), 0);
  std::vector<char> next(sweep.state_count(), 0);
  current[0] = 1;
  for (int col = 0; col < n; ++col) {
    std::fill(next.begin(), next.end(), 0);
    const bool horizontal_fits = col + k <= n;
    bool any = false;
    for (std::uint64_t s = 0; s < sweep.state_count(); ++s) {
      if (!current[s]) continue;
      sweep.transitions(s, horizontal_fits, [&next, &any](std::uint64_t out) {
        next[out] = 1;
        any = true;
      });
    }
    if (!any) return false;
    current.swap(next);
  }
  return current[0] != 0;
}

}  // namespace tilegf::oracle
