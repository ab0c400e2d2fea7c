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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tilegf/closedform.hpp"
#include "tilegf/errors.hpp"
#include "tilegf/mseries.hpp"
#include "tilegf/oracle.hpp"

using namespace tilegf;
namespace cf = tilegf::closedform;

namespace {

// Independent oracle for the m = k strip: compositions of n with parts in
// {1, k}, enumerated recursively (no recurrence shared with the code under
// test).
long compositions_1_k(int n, int k) {
  if (n == 0) return 1;
  long total = 0;
  if (n >= 1) total += compositions_1_k(n - 1, k);
  if (n >= k) total += compositions_1_k(n - k, k);
  return total;
}

std::vector<std::pair<int, int>> main_regime_pairs() {
  std::vector<std::pair<int, int>> out;
  for (int k = 2; k <= 4; ++k)
    for (int m = k + 1; m < 2 * k; ++m) out.emplace_back(m, k);
  return out;
}

}  // namespace

TEST_CASE("regime classification") {
  CHECK(cf::classify_regime(2, 3).regime == cf::Regime::thin);
  CHECK(cf::classify_regime(3, 3).regime == cf::Regime::equal);
  CHECK(cf::classify_regime(5, 3).regime == cf::Regime::main);
  CHECK_THROWS_AS(cf::classify_regime(6, 3), RegimeMismatch);
  CHECK_THROWS_AS(cf::classify_regime(9, 3), RegimeMismatch);
  CHECK_THROWS_AS(cf::classify_regime(3, 1), ValidationError);
  CHECK_THROWS_AS(cf::classify_regime(0, 3), ValidationError);
}

TEST_CASE("klarner_exists") {
  CHECK(cf::klarner_exists(5, 6, 3));
  CHECK_FALSE(cf::klarner_exists(4, 5, 3));
  CHECK(cf::klarner_exists(3, 0, 3));  // empty tiling
  CHECK(cf::klarner_exists(9, 7, 3));
  CHECK_FALSE(cf::klarner_exists(7, 9, 4));
}

TEST_CASE("kasteleyn_count") {
  CHECK(cf::kasteleyn_count(2, 2) == 2);
  CHECK(cf::kasteleyn_count(2, 3) == 3);
  CHECK(cf::kasteleyn_count(4, 4) == 36);
  CHECK(cf::kasteleyn_count(1, 2) == 1);
  CHECK(cf::kasteleyn_count(8, 8) == 12988816);
  CHECK_THROWS_AS(cf::kasteleyn_count(3, 3), OddArea);
  CHECK_THROWS_AS(cf::kasteleyn_count(18, 2), ValidationError);
  cf::KasteleynOptions strict;
  strict.rel_tol = 0.0;
  CHECK_THROWS_AS(cf::kasteleyn_count(8, 8, strict), RoundingUnsafe);

  // Against the backtracking oracle on a small even-area sweep.
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      if ((m * n) % 2 != 0) continue;
      CHECK(cf::kasteleyn_count(m, n) == oracle::count_tilings_bt(m, n, 2));
    }

  // Well beyond the unit sweep the extended-precision product still rounds
  // to the exact transfer-matrix count.
  CHECK(cf::kasteleyn_count(10, 12) ==
        oracle::transfer_matrix_count(10, 12, 2));
  // The configured float-safety bound itself is usable.
  CHECK(cf::kasteleyn_count(16, 16) > 0);
}

TEST_CASE("gf_thin") {
  RationalGF gf = cf::gf_thin(2, 3);
  CHECK(gf.num() == IntPolynomial(1));
  CHECK(gf.den() == IntPolynomial{1, 0, 0, -1});
  std::vector<BigInt> expected{1, 0, 0, 1, 0, 0, 1};
  CHECK(series_expand(gf, 6) == expected);
  CHECK_THROWS_AS(cf::gf_thin(3, 3), RegimeMismatch);
  CHECK_THROWS_AS(cf::gf_thin(4, 3), RegimeMismatch);
  // Thin strips really do have one tiling per multiple of k.
  for (int n = 0; n <= 6; ++n)
    CHECK(series_expand(gf, 6)[static_cast<size_t>(n)] ==
          oracle::count_tilings_bt(2, n, 3));
}

TEST_CASE("gf_rect_k_by_n") {
  SUBCASE("k=2 gives the Fibonacci-shifted strip counts") {
    std::vector<BigInt> c = series_expand(cf::gf_rect_k_by_n(2), 5);
    std::vector<BigInt> expected{1, 1, 2, 3, 5, 8};
    CHECK(c == expected);
    for (int n = 0; n <= 5; ++n)
      CHECK(c[static_cast<size_t>(n)] == oracle::count_tilings_bt(2, n, 2));
  }
  SUBCASE("k=3") {
    std::vector<BigInt> c = series_expand(cf::gf_rect_k_by_n(3), 6);
    std::vector<BigInt> expected{1, 1, 1, 2, 3, 4, 6};
    CHECK(c == expected);
    for (int n = 0; n <= 6; ++n)
      CHECK(c[static_cast<size_t>(n)] == oracle::count_tilings_bt(3, n, 3));
  }
  SUBCASE("coefficients count compositions with parts 1 and k") {
    for (int k = 2; k <= 4; ++k) {
      std::vector<BigInt> c = series_expand(cf::gf_rect_k_by_n(k), 12);
      for (int n = 0; n <= 12; ++n)
        CHECK(c[static_cast<size_t>(n)] == compositions_1_k(n, k));
    }
  }
  CHECK_THROWS_AS(cf::gf_rect_k_by_n(1), RegimeMismatch);
}

TEST_CASE("faultfree_count closed form") {
  CHECK(cf::faultfree_count(5, 1, 3) == 4);
  CHECK(cf::faultfree_count(5, 2, 3) == 6);
  CHECK(cf::faultfree_count(3, 3, 2) == 2);
  CHECK_THROWS_AS(cf::faultfree_count(3, 1, 3), RegimeMismatch);
  CHECK_THROWS_AS(cf::faultfree_count(6, 1, 3), RegimeMismatch);
  CHECK_THROWS_AS(cf::faultfree_count(5, 0, 3), ValidationError);
  // Direct fault-free enumeration sees the same numbers.
  for (auto [m, k] : main_regime_pairs())
    for (int ell = 1; ell <= 3; ++ell)
      CHECK(cf::faultfree_count(m, ell, k) ==
            oracle::count_faultfree(m, k * ell, k));
}

TEST_CASE("gf_faultfree") {
  SUBCASE("m=5 k=3") {
    std::vector<BigInt> a = series_expand(cf::gf_faultfree(5, 3), 9);
    CHECK(a[3] == 4);
    CHECK(a[6] == 6);
    CHECK(a[9] == 9);
    for (int n = 0; n <= 9; ++n)
      if (n % 3 != 0) CHECK(a[static_cast<size_t>(n)] == 0);
  }
  SUBCASE("m=3 k=2") {
    std::vector<BigInt> a = series_expand(cf::gf_faultfree(3, 2), 6);
    CHECK(a[2] == 3);
    CHECK(a[4] == 2);
    CHECK(a[6] == 2);
    CHECK(a[0] == 0);
  }
  CHECK_THROWS_AS(cf::gf_faultfree(3, 3), RegimeMismatch);
}

TEST_CASE("gf_main series vs both oracles") {
  SUBCASE("m=3 k=2") {
    std::vector<BigInt> c = series_expand(cf::gf_main(3, 2), 6);
    CHECK(c[0] == 1);
    CHECK(c[2] == 3);
    CHECK(c[4] == 11);
    CHECK(c[6] == 41);
  }
  SUBCASE("m=5 k=3") {
    std::vector<BigInt> c = series_expand(cf::gf_main(5, 3), 6);
    CHECK(c[0] == 1);
    CHECK(c[3] == 4);
    CHECK(c[6] == 22);
  }
  SUBCASE("oracle agreement across the regime") {
    for (auto [m, k] : main_regime_pairs()) {
      std::vector<BigInt> c = series_expand(cf::gf_main(m, k), 4 * k);
      for (int n = 0; n <= 4 * k; ++n) {
        CHECK(c[static_cast<size_t>(n)] == oracle::count_tilings_bt(m, n, k));
        CHECK(c[static_cast<size_t>(n)] == oracle::transfer_matrix_count(m, n, k));
      }
    }
  }
  SUBCASE("a taller tile, outside the sweep") {
    std::vector<BigInt> c = series_expand(cf::gf_main(7, 5), 10);
    CHECK(c[5] == 4);    // m - k + 2
    CHECK(c[10] == 28);  // 4*4 + 3*C(4,3)
    for (int n = 0; n <= 10; ++n)
      CHECK(c[static_cast<size_t>(n)] == oracle::count_tilings_bt(7, n, 5));
  }
  CHECK_THROWS_AS(cf::gf_main(3, 3), RegimeMismatch);
  CHECK_THROWS_AS(cf::gf_main(4, 2), RegimeMismatch);
}

TEST_CASE("compose_h_from_a") {
  SUBCASE("A = x + x^k recovers the m=k strip") {
    for (int k = 2; k <= 5; ++k) {
      IntPolynomial a_num =
          IntPolynomial::monomial(1, 1) + IntPolynomial::monomial(1, k);
      RationalGF h = cf::compose_h_from_a(RationalGF(a_num, IntPolynomial(1)));
      CHECK(h.same_function(cf::gf_rect_k_by_n(k)));
    }
  }
  SUBCASE("A = 0 gives 1") {
    RationalGF h = cf::compose_h_from_a(RationalGF(IntPolynomial{}, IntPolynomial(1)));
    CHECK(h.same_function(RationalGF(IntPolynomial(1), IntPolynomial(1))));
  }
  SUBCASE("closing the loop: 1/(1 - gf_faultfree) = gf_main") {
    for (auto [m, k] : main_regime_pairs()) {
      RationalGF composed = cf::compose_h_from_a(cf::gf_faultfree(m, k));
      CHECK(composed.same_function(cf::gf_main(m, k)));
    }
  }
  CHECK_THROWS_AS(cf::compose_h_from_a(RationalGF(IntPolynomial(1), IntPolynomial(1))),
                  NonzeroConstant);
}

TEST_CASE("gf_main * (1 - gf_faultfree) = 1 and the convolution identity") {
  for (auto [m, k] : main_regime_pairs()) {
    RationalGF h = cf::gf_main(m, k);
    RationalGF a = cf::gf_faultfree(m, k);
    // Cross-multiplied:  h.num * (a.den - a.num) == h.den * a.den.
    CHECK(h.num() * (a.den() - a.num()) == h.den() * a.den());

    const int order = 4 * k;
    std::vector<BigInt> hs = series_expand(h, order);
    std::vector<BigInt> as = series_expand(a, order);
    for (int n = 1; n <= order; ++n) {
      BigInt sum = 0;
      for (int l = 1; l <= n; ++l)
        sum += as[static_cast<size_t>(l)] * hs[static_cast<size_t>(n - l)];
      CHECK(sum == hs[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("gf_vertical") {
  for (auto [m, k] : main_regime_pairs()) {
    MRationalGF gf = cf::gf_vertical(m, k);
    TruncatedMSeries s = mseries_expand(gf, 2 * k);
    CHECK(s.at(k, 0, 0) == 1);
    CHECK(s.at(k, k, 0) == m - k + 1);
    // y = 1 collapses to the plain generating function.
    CHECK(gf.num.set_one(Var::y).to_univariate() == cf::gf_main(m, k).num());
    CHECK(gf.den.set_one(Var::y).to_univariate() == cf::gf_main(m, k).den());
    // Every y-exponent is 0 or a positive multiple of k, bounded by n.
    for (const auto& [e, c] : s.terms) {
      CHECK(e.r % k == 0);
      CHECK(e.r <= e.n);
      CHECK(e.s == 0);
    }
  }
  SUBCASE("m=3 k=2 coefficient of x^4 y^2 is the oracle's 6") {
    TruncatedMSeries s = mseries_expand(cf::gf_vertical(3, 2), 4);
    auto stats = oracle::count_by_stats(3, 4, 2, false);
    CHECK(s.at(4, 2, 0) == stats.at({2, 0}));
    CHECK(s.at(4, 2, 0) == 6);
  }
  CHECK_THROWS_AS(cf::gf_vertical(2, 2), RegimeMismatch);
}

TEST_CASE("faultfree_mixed_count") {
  CHECK(cf::faultfree_mixed_count(3, 1, 2) == 5);
  CHECK(cf::faultfree_mixed_count(5, 2, 3) == 12);
  CHECK(cf::faultfree_mixed_count(3, 2, 2) == 4);
  CHECK_THROWS_AS(cf::faultfree_mixed_count(4, 1, 2), RegimeMismatch);
  for (auto [m, k] : main_regime_pairs())
    for (int ell = 1; ell <= 2; ++ell)
      CHECK(cf::faultfree_mixed_count(m, ell, k) ==
            oracle::count_faultfree(m, k * ell, k, /*mixed=*/true));
}

TEST_CASE("gf_mixed") {
  std::vector<BigInt> c = series_expand(cf::gf_mixed(3, 2), 4);
  CHECK(c[0] == 1);
  CHECK(c[2] == 5);
  CHECK(c[4] == 29);
  for (int n = 0; n <= 4; ++n)
    CHECK(c[static_cast<size_t>(n)] ==
          oracle::count_tilings_bt(3, n, 2, /*mixed=*/true));
  // Identical rational function to the brick count.
  for (auto [m, k] : main_regime_pairs())
    CHECK(cf::gf_mixed(m, k).same_function(cf::gf_brick3d(m, k)));
  CHECK_THROWS_AS(cf::gf_mixed(2, 2), RegimeMismatch);
}

TEST_CASE("gf_mixed_refined substitution lattice") {
  for (auto [m, k] : main_regime_pairs()) {
    MRationalGF refined = cf::gf_mixed_refined(m, k);
    // z = 0 recovers the vertical refinement as rational functions.
    MRationalGF at_z0{refined.num.set_zero(Var::z), refined.den.set_zero(Var::z)};
    CHECK(at_z0.same_function(cf::gf_vertical(m, k)));
    // y = z = 1 recovers the mixed series.
    MPoly num11 = refined.num.set_one(Var::y).set_one(Var::z);
    MPoly den11 = refined.den.set_one(Var::y).set_one(Var::z);
    RationalGF collapsed(num11.to_univariate(), den11.to_univariate());
    CHECK(collapsed.same_function(cf::gf_mixed(m, k)));
    // One square and nothing else: coefficient of x^k z.
    TruncatedMSeries s = mseries_expand(refined, k);
    CHECK(s.at(k, 0, 1) == m - k + 1);
  }
}

TEST_CASE("gf_brick3d against the 3d oracle") {
  std::vector<BigInt> c = series_expand(cf::gf_brick3d(3, 2), 5);
  CHECK(c[2] == oracle::count_3d(3, 2, 2).total);
  CHECK(c[4] == oracle::count_3d(3, 4, 2).total);
  CHECK(c[2] == 5);
  CHECK(c[4] == 29);
  CHECK(c[1] == 0);
  CHECK(c[3] == 0);
}

TEST_CASE("gf_brick3d_refined") {
  for (auto [m, k] : main_regime_pairs()) {
    MRationalGF brick = cf::gf_brick3d_refined(m, k);
    TruncatedMSeries s = mseries_expand(brick, k);
    // A single slab of k stacked bricks.
    CHECK(s.at(k, 0, k) == m - k + 1);
    // y = z = 1 equals the plain brick series.
    TruncatedMSeries full = mseries_expand(brick, 2 * k);
    CHECK(full.set_one(Var::y).set_one(Var::z).x_coefficients() ==
          series_expand(cf::gf_brick3d(m, k), 2 * k));
  }
  SUBCASE("orientation statistics on the 3 x 4 x 2 box") {
    TruncatedMSeries s = mseries_expand(cf::gf_brick3d_refined(3, 2), 4);
    oracle::Count3D c3 = oracle::count_3d(3, 4, 2);
    BigInt sum = 0;
    for (const auto& [rs, cnt] : c3.by_orientation) {
      CHECK(s.at(4, rs.first, rs.second) == cnt);
      sum += cnt;
    }
    CHECK(sum == c3.total);
  }
}

TEST_CASE("univariate closed forms vanish off multiples of k") {
  for (auto [m, k] : main_regime_pairs()) {
    for (const RationalGF& gf :
         {cf::gf_main(m, k), cf::gf_faultfree(m, k), cf::gf_mixed(m, k)}) {
      std::vector<BigInt> c = series_expand(gf, 4 * k + k - 1);
      for (size_t n = 0; n < c.size(); ++n)
        if (n % static_cast<size_t>(k) != 0) CHECK(c[n] == 0);
    }
  }
}
