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

#include "tilegf/rational_gf.hpp"

#include <algorithm>

#include "tilegf/errors.hpp"

namespace tilegf {

RationalGF::RationalGF(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  const BigInt& c0 = den_.coeff(0);
  if (c0 == 0)
    throw UnnormalizedGF("denominator constant term is 0");
  if (c0 == -1) {
    num_ = -num_;
    den_ = -den_;
  } else if (c0 != 1) {
    throw UnnormalizedGF("denominator constant term " + to_decimal(c0) +
                         " is not a unit");
  }
}

bool RationalGF::same_function(const RationalGF& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

std::vector<BigInt> series_expand(const RationalGF& gf, int order) {
  if (order < 0) throw ValidationError("series order must be >= 0");
  const IntPolynomial& p = gf.num();
  const IntPolynomial& q = gf.den();
  std::vector<BigInt> c(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    BigInt acc = p.coeff(n);
    int top = std::min(n, q.degree());
    for (int i = 1; i <= top; ++i) acc -= q.coeff(i) * c[static_cast<size_t>(n - i)];
    c[static_cast<size_t>(n)] = std::move(acc);
  }
  return c;
}

Recurrence recurrence_from_gf(const RationalGF& gf) {
  Recurrence rec;
  rec.order = std::max(gf.den().degree(), 0);
  rec.den.reserve(static_cast<size_t>(rec.order));
  for (int i = 1; i <= rec.order; ++i) rec.den.push_back(gf.den().coeff(i));
  int seed_len = std::max(gf.num().degree() + 1, rec.order);
  seed_len = std::max(seed_len, 1);
  rec.seed = series_expand(gf, seed_len - 1);
  return rec;
}

}  // namespace tilegf
