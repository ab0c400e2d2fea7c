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

#ifndef TILEGF_BIGINT_HPP
#define TILEGF_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace tilegf {

// Every count in this library is exact. GMP provides the digits; all
// tiling-specific arithmetic lives in IntPolynomial and friends.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long r) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

inline BigInt pow2(unsigned long e) {
  BigInt out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), e);
  return out;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace tilegf

#endif  // TILEGF_BIGINT_HPP
