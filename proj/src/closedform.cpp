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

#include "tilegf/closedform.hpp"

#include <cmath>
#include <string>

#include "tilegf/errors.hpp"

namespace tilegf::closedform {

namespace {

std::string pair_str(int m, int k) {
  return "(m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")";
}

void require_main_regime(int m, int k) {
  RegimeParams p = classify_regime(m, k);
  if (p.regime != Regime::main)
    throw RegimeMismatch("formula requires k < m < 2k, got " + pair_str(m, k));
}

// 1 - x^k
IntPolynomial one_minus_xk(int k) {
  return IntPolynomial(1) - IntPolynomial::monomial(1, k);
}

}  // namespace

RegimeParams classify_regime(int m, int k) {
  if (k < 2) throw ValidationError("tile length k must be >= 2");
  if (m < 1) throw ValidationError("strip height m must be >= 1");
  RegimeParams p;
  p.k = k;
  p.m = m;
  if (m < k) {
    p.regime = Regime::thin;
  } else if (m == k) {
    p.regime = Regime::equal;
  } else if (m < 2 * k) {
    p.regime = Regime::main;
  } else {
    throw RegimeMismatch("no closed form for m >= 2k, got " + pair_str(m, k));
  }
  return p;
}

bool klarner_exists(int m, int n, int k) {
  if (k < 1 || m < 1 || n < 0)
    throw ValidationError("klarner_exists requires m, k >= 1 and n >= 0");
  if (n == 0) return true;
  return m % k == 0 || n % k == 0;
}

BigInt kasteleyn_count(int m, int n, const KasteleynOptions& opts) {
  if (m < 1 || n < 1) throw ValidationError("board dimensions must be >= 1");
  if (m > opts.max_dim || n > opts.max_dim)
    throw ValidationError("dimension exceeds float-safety bound " +
                          std::to_string(opts.max_dim));
  if ((static_cast<long>(m) * n) % 2 != 0)
    throw OddArea("no domino tiling of an odd-area board");

  // Double product of 4cos^2(j pi/(m+1)) + 4cos^2(l pi/(n+1)); the plain
  // long-double product is accurate at the capped sizes.
  const long double pi = std::acos(-1.0L);
  long double product = 1.0L;
  for (int j = 1; j <= (m + 1) / 2; ++j) {
    long double cj = std::cos(j * pi / (m + 1));
    for (int l = 1; l <= (n + 1) / 2; ++l) {
      long double cl = std::cos(l * pi / (n + 1));
      product *= 4.0L * cj * cj + 4.0L * cl * cl;
    }
  }
  long double rounded = std::round(product);
  long double scale = std::max(1.0L, std::fabs(product));
  if (std::fabs(product - rounded) > opts.rel_tol * scale)
    throw RoundingUnsafe("product " + std::to_string(static_cast<double>(product)) +
                         " too far from an integer");
  // Round-trip through a decimal string so values beyond 2^63 stay exact.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.0Lf", rounded);
  return BigInt(buf);
}

RationalGF gf_thin(int m, int k) {
  RegimeParams p = classify_regime(m, k);
  if (p.regime != Regime::thin)
    throw RegimeMismatch("gf_thin requires m < k, got " + pair_str(m, k));
  return RationalGF(IntPolynomial(1), one_minus_xk(k));
}

RationalGF gf_rect_k_by_n(int k) {
  if (k <= 1)
    throw RegimeMismatch("gf_rect_k_by_n requires k > 1, got k=" +
                         std::to_string(k));
  IntPolynomial den = IntPolynomial(1) - IntPolynomial::monomial(1, 1) -
                      IntPolynomial::monomial(1, k);
  return RationalGF(IntPolynomial(1), std::move(den));
}

BigInt faultfree_count(int m, int ell, int k) {
  require_main_regime(m, k);
  if (ell < 1) throw ValidationError("ell must be >= 1");
  if (ell == 1) return BigInt(m - k + 2);
  return BigInt(m - k + 1) *
         binomial(static_cast<unsigned long>(k + ell - 3),
                  static_cast<unsigned long>(k - 2));
}

RationalGF gf_faultfree(int m, int k) {
  require_main_regime(m, k);
  // x^k (1-x^k)^{k-1} + (m-k+1) x^k  over  (1-x^k)^{k-1}
  IntPolynomial xk = IntPolynomial::monomial(1, k);
  IntPolynomial den = pow(one_minus_xk(k), static_cast<unsigned>(k - 1));
  IntPolynomial num = xk * den + IntPolynomial(m - k + 1) * xk;
  return RationalGF(std::move(num), std::move(den));
}

RationalGF gf_main(int m, int k) {
  require_main_regime(m, k);
  IntPolynomial base = one_minus_xk(k);
  IntPolynomial num = pow(base, static_cast<unsigned>(k - 1));
  IntPolynomial den = num * base - IntPolynomial::monomial(m - k + 1, k);
  return RationalGF(std::move(num), std::move(den));
}

RationalGF compose_h_from_a(const RationalGF& a) {
  if (a.num().coeff(0) != 0)
    throw NonzeroConstant("fault-free generating function must have A(0)=0");
  // 1/(1 - num/den) = den / (den - num)
  return RationalGF(a.den(), a.den() - a.num());
}

MRationalGF gf_vertical(int m, int k) {
  require_main_regime(m, k);
  MPoly base = MPoly::from_univariate(one_minus_xk(k));
  MPoly num = pow(base, static_cast<unsigned>(k - 1));
  MPoly den = num * base - MPoly::monomial(m - k + 1, MExp{k, k, 0});
  return MRationalGF{std::move(num), std::move(den)};
}

BigInt faultfree_mixed_count(int m, int ell, int k) {
  require_main_regime(m, k);
  if (ell < 1) throw ValidationError("ell must be >= 1");
  if (ell == 1) return BigInt(2 * (m - k) + 3);
  return pow2(static_cast<unsigned long>(ell - 1)) * BigInt(m - k + 1) *
         binomial(static_cast<unsigned long>(ell + k - 3),
                  static_cast<unsigned long>(ell - 1));
}

RationalGF gf_mixed(int m, int k) {
  require_main_regime(m, k);
  IntPolynomial one_minus_2xk =
      IntPolynomial(1) - IntPolynomial::monomial(2, k);
  IntPolynomial num = pow(one_minus_2xk, static_cast<unsigned>(k - 1));
  IntPolynomial bracket =
      IntPolynomial(1) - IntPolynomial::monomial(m - k + 2, k);
  IntPolynomial den = num * bracket - IntPolynomial::monomial(m - k + 1, k);
  return RationalGF(std::move(num), std::move(den));
}

MRationalGF gf_mixed_refined(int m, int k) {
  require_main_regime(m, k);
  // num = (1 - x^k - x^k z)^{k-1}
  // den = (1 - x^k - (m-k+1) x^k z) num - (m-k+1) x^k y^k
  MPoly xk = MPoly::monomial(1, MExp{k, 0, 0});
  MPoly xkz = MPoly::monomial(1, MExp{k, 0, 1});
  MPoly num = pow(MPoly(1) - xk - xkz, static_cast<unsigned>(k - 1));
  MPoly lead = MPoly(1) - xk - MPoly::monomial(m - k + 1, MExp{k, 0, 1});
  MPoly den = lead * num - MPoly::monomial(m - k + 1, MExp{k, k, 0});
  return MRationalGF{std::move(num), std::move(den)};
}

RationalGF gf_brick3d(int m, int k) {
  require_main_regime(m, k);
  // The projection onto the base plane is a bijection with mixed tilings.
  return gf_mixed(m, k);
}

MRationalGF gf_brick3d_refined(int m, int k) {
  MRationalGF refined = gf_mixed_refined(m, k);
  // Each square in the projection is the shadow of k stacked bricks.
  return MRationalGF{refined.num.stretch(Var::z, k),
                     refined.den.stretch(Var::z, k)};
}

}  // namespace tilegf::closedform
