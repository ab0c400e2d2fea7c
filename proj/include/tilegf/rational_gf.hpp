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

#ifndef TILEGF_RATIONAL_GF_HPP
#define TILEGF_RATIONAL_GF_HPP

#include <vector>

#include "tilegf/poly.hpp"

namespace tilegf {

/// Linear recurrence c_n = -(q_1 c_{n-1} + ... + q_d c_{n-d}) extracted from
/// a rational generating function. The recurrence is valid for every
/// n >= seed.size(); the seed is long enough that no negative index is
/// ever referenced.
struct Recurrence {
  int order = 0;                // d = degree of the denominator
  std::vector<BigInt> den;      // q_1 .. q_d
  std::vector<BigInt> seed;     // c_0 .. c_{L-1}, L = max(deg num + 1, d)
};

/// Ratio of integer polynomials normalized so den(0) == 1.
///
/// Construction divides num and den by den's constant term when it is +-1
/// and rejects every other constant term (all generating functions in this
/// library have unit constant term, so rational-coefficient arithmetic is
/// never needed). num/den are never reduced by a common factor; equality is
/// decided by cross-multiplication.
class RationalGF {
 public:
  RationalGF(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  /// Equality as rational functions: num*rhs.den == rhs.num*den.
  bool same_function(const RationalGF& rhs) const;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Series coefficients c_0..c_order of num/den, computed by the recurrence
/// c_n = p_n - sum_{i=1..n} q_i c_{n-i}. Exact.
std::vector<BigInt> series_expand(const RationalGF& gf, int order);

Recurrence recurrence_from_gf(const RationalGF& gf);

}  // namespace tilegf

#endif  // TILEGF_RATIONAL_GF_HPP
