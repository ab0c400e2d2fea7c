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

#include "tilegf/asymptotics.hpp"

#include <cmath>

#include "tilegf/errors.hpp"

namespace tilegf::asymptotics {

namespace {

int sign_at(const IntPolynomial& den, const BigRational& t) {
  return sgn(den.eval(t));
}

}  // namespace

RootBracket dominant_root(const IntPolynomial& den, double tol, int grid) {
  if (den.coeff(0) != 1)
    throw ValidationError("denominator must have constant term 1");
  if (tol <= 0 || grid < 2) throw ValidationError("bad tolerance or grid");

  BigRational lo(0);
  int lo_sign = 1;  // den(0) = 1
  for (int i = 1; i <= grid; ++i) {
    BigRational t(i, static_cast<unsigned long>(grid));
    t.canonicalize();
    int s = sign_at(den, t);
    if (s == 0) {
      double v = t.get_d();
      return RootBracket{t, t, v, 0.0};
    }
    if (lo_sign > 0 && s < 0) {
      BigRational hi = t;
      // Bisect; signs stay strict so the bracket certificate holds.
      while (BigRational(hi - lo).get_d() > tol) {
        BigRational mid = (lo + hi) / 2;
        mid.canonicalize();
        int ms = sign_at(den, mid);
        if (ms == 0) return RootBracket{mid, mid, mid.get_d(), 0.0};
        if (ms > 0)
          lo = mid;
        else
          hi = mid;
      }
      double width = BigRational(hi - lo).get_d();
      double value = BigRational((lo + hi) / 2).get_d();
      return RootBracket{lo, hi, value, width};
    }
    lo = t;
    lo_sign = s;
  }
  throw NoRootInUnitInterval("no sign change of " + den.to_string() +
                             " found on (0, 1]");
}

GrowthReport growth_report(const RationalGF& gf, int k, int n_max,
                           double tol) {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (n_max < k || n_max % k != 0)
    throw ValidationError("n_max must be a positive multiple of k");

  IntPolynomial den_t = compress_power(gf.den(), k);
  RootBracket root = dominant_root(den_t, tol);

  GrowthReport report;
  report.rho = root.value;
  report.rho_error = root.width / 2;
  report.per_k_growth = 1.0 / root.value;
  report.per_column_growth =
      std::pow(report.per_k_growth, 1.0 / static_cast<double>(k));
  report.n_max = n_max;

  std::vector<BigInt> c = series_expand(gf, n_max);
  const BigInt& hi = c[static_cast<size_t>(n_max)];
  const BigInt& lo = c[static_cast<size_t>(n_max - k)];
  if (lo == 0)
    throw ValidationError("series coefficient at n_max - k is zero");
  BigRational ratio(hi, lo);
  ratio.canonicalize();
  report.empirical_ratio = ratio.get_d();
  report.discrepancy =
      std::fabs(report.empirical_ratio - report.per_k_growth) /
      report.per_k_growth;
  return report;
}

}  // namespace tilegf::asymptotics
