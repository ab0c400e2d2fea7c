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

#ifndef TILEGF_MSERIES_HPP
#define TILEGF_MSERIES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tilegf/mpoly.hpp"

namespace tilegf {

/// Power series in x, y, z truncated at a stated x-order. Every stored
/// coefficient with n <= x_order is exact; nothing beyond x_order is kept.
/// The y/z exponents need no truncation of their own: each power of x
/// carries a bounded number of them in all series produced here.
struct TruncatedMSeries {
  std::map<MExp, BigInt> terms;
  int x_order = 0;
  std::array<std::string, 3> symbols = {"x", "y", "z"};

  const BigInt& at(int n, int r, int s) const;

  /// Substitute v = 0, dropping terms with a positive exponent in v.
  TruncatedMSeries set_zero(Var v) const;
  /// Substitute v = 1, summing over the exponent of v.
  TruncatedMSeries set_one(Var v) const;

  /// Sum over r and s per power of x: coefficients c_0..c_{x_order}.
  std::vector<BigInt> x_coefficients() const;
};

/// Expand num/den as a power series, exact to x-exponent <= x_order.
///
/// Requires den's only term with x-exponent 0 to be the constant 1, which
/// makes the division well-founded one x-degree at a time (every closed
/// form in this library satisfies it).
TruncatedMSeries mseries_expand(const MPoly& num, const MPoly& den,
                                int x_order);

inline TruncatedMSeries mseries_expand(const MRationalGF& gf, int x_order) {
  return mseries_expand(gf.num, gf.den, x_order);
}

}  // namespace tilegf

#endif  // TILEGF_MSERIES_HPP
