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

#ifndef TILEGF_ASYMPTOTICS_HPP
#define TILEGF_ASYMPTOTICS_HPP

#include "tilegf/poly.hpp"
#include "tilegf/rational_gf.hpp"

namespace tilegf::asymptotics {

// Coefficient growth of a rational generating function is governed by the
// smallest positive real root of its denominator. The root is bracketed by
// exact big-rational sign evaluation, so no float cancellation can move it.

struct RootBracket {
  BigRational lo;   // den(lo) >= 0
  BigRational hi;   // den(hi) <= 0
  double value = 0;  // midpoint
  double width = 0;
};

/// Smallest positive real root of den in (0, 1]: scan a uniform grid for
/// the first sign change, then bisect to width <= tol. Requires den(0) = 1.
/// Throws NoRootInUnitInterval when the grid finds no sign change.
RootBracket dominant_root(const IntPolynomial& den, double tol,
                          int grid = 1024);

struct GrowthReport {
  double rho = 0;             // smallest positive root of den in t = x^k
  double rho_error = 0;       // half the certified bracket width
  double per_k_growth = 0;    // 1/rho: growth per k columns
  double per_column_growth = 0;  // (1/rho)^(1/k)
  double empirical_ratio = 0;    // c(n_max) / c(n_max - k)
  int n_max = 0;
  double discrepancy = 0;  // |empirical - per_k| / per_k
  // The root is not verified to be simple or uniquely dominant; the
  // empirical ratio is the guard against that assumption failing.
  bool root_simplicity_checked = false;
};

/// Growth constants for a generating function in x^k: the denominator is
/// rewritten in t = x^k (rejecting stray exponents), the dominant root
/// extracted, and the series ratio c(n_max)/c(n_max - k) reported next to
/// it. n_max must be a positive multiple of k.
GrowthReport growth_report(const RationalGF& gf, int k, int n_max,
                           double tol = 1e-12);

}  // namespace tilegf::asymptotics

#endif  // TILEGF_ASYMPTOTICS_HPP
