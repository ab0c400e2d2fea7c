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

#ifndef TILEGF_CLOSEDFORM_HPP
#define TILEGF_CLOSEDFORM_HPP

#include "tilegf/bigint.hpp"
#include "tilegf/mpoly.hpp"
#include "tilegf/rational_gf.hpp"

namespace tilegf::closedform {

// Closed-form counts and generating functions for k x 1 tilings of m x n
// rectangles with m < 2k, their refinements, mixed k x 1 / k x k tilings,
// and k x k x 1 brick tilings of m x n x k boxes. Each formula is proved
// only for its regime, so regime guards are hard errors: silently wrong
// numbers would be the worst failure mode.

enum class Regime { thin, equal, main };

struct RegimeParams {
  int k = 0;
  int m = 0;
  Regime regime = Regime::thin;
};

/// Classify (m, k): thin (m < k), equal (m = k), main (k < m < 2k).
/// Throws RegimeMismatch for m >= 2k (no closed form there) and
/// ValidationError for k < 2 or m < 1.
RegimeParams classify_regime(int m, int k);

/// Existence of a k x 1 tiling of an m x n rectangle: true iff k divides
/// m or n. n = 0 is vacuously tileable.
bool klarner_exists(int m, int n, int k);

struct KasteleynOptions {
  int max_dim = 16;       // float-safety bound on m and n
  double rel_tol = 1e-6;  // max relative distance from the nearest integer
};

/// Domino count of an m x n rectangle by the cosine double product,
/// evaluated in extended precision and rounded to the nearest integer.
/// Throws OddArea when m*n is odd and RoundingUnsafe when the float value
/// sits farther than rel_tol (relative) from any integer.
BigInt kasteleyn_count(int m, int n, const KasteleynOptions& opts = {});

/// m < k: 1 / (1 - x^k). One tiling when k | n, none otherwise.
RationalGF gf_thin(int m, int k);

/// m = k: 1 / (1 - x - x^k). Coefficients count compositions of n into
/// parts 1 and k.
RationalGF gf_rect_k_by_n(int k);

/// Fault-free tilings of an m x (k*ell) rectangle, k < m < 2k:
///   ell = 1:  m - k + 2
///   ell >= 2: (m - k + 1) * C(k + ell - 3, k - 2)
BigInt faultfree_count(int m, int ell, int k);

/// A(x) = x^k + (m-k+1) x^k / (1 - x^k)^{k-1} as one normalized ratio.
RationalGF gf_faultfree(int m, int k);

/// H(x) = (1 - x^k)^{k-1} / ((1 - x^k)^k - (m-k+1) x^k), k < m < 2k.
RationalGF gf_main(int m, int k);

/// H = 1 / (1 - A) for a fault-free generating function A with A(0) = 0.
RationalGF compose_h_from_a(const RationalGF& a);

/// Bivariate refinement: y marks vertical tiles.
///   (1 - x^k)^{k-1} / ((1 - x^k)^k - (m-k+1) x^k y^k)
MRationalGF gf_vertical(int m, int k);

/// Fault-free mixed (k x 1 and k x k) tilings of m x (k*ell):
///   ell = 1:  2m - 2k + 3
///   ell >= 2: 2^{ell-1} (m-k+1) C(ell + k - 3, ell - 1)
BigInt faultfree_mixed_count(int m, int ell, int k);

/// Mixed k x 1 / k x k tilings:
///   (1-2x^k)^{k-1} / ((1-2x^k)^{k-1} [1-(m-k+2) x^k] - (m-k+1) x^k)
RationalGF gf_mixed(int m, int k);

/// Trivariate refinement of gf_mixed: y marks vertical k x 1 tiles,
/// z marks k x k squares.
MRationalGF gf_mixed_refined(int m, int k);

/// k x k x 1 brick tilings of an m x n x k box; the same rational
/// function as gf_mixed via the projection bijection.
RationalGF gf_brick3d(int m, int k);

/// gf_mixed_refined with z replaced by z^k: y marks yz-parallel bricks,
/// z marks xy-parallel bricks (each square lifts to k of them).
MRationalGF gf_brick3d_refined(int m, int k);

}  // namespace tilegf::closedform

#endif  // TILEGF_CLOSEDFORM_HPP
