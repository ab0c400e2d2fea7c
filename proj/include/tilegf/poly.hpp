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

#ifndef TILEGF_POLY_HPP
#define TILEGF_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "tilegf/bigint.hpp"

namespace tilegf {

/// Dense univariate polynomial with exact integer coefficients.
///
/// Invariant: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient vector and degree() == -1. All operations are exact.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c) : IntPolynomial(BigInt(c)) {}  // NOLINT(runtime/explicit)
  IntPolynomial(BigInt c);                             // NOLINT(runtime/explicit)
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// c * x^exp
  static IntPolynomial monomial(BigInt c, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of x^i; zero outside the stored range.
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;
  BigRational eval(const BigRational& x) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend IntPolynomial operator*(const IntPolynomial& lhs,
                                 const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial& lhs,
                         const IntPolynomial& rhs) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned exponent);

/// p(x^k): the coefficient of x^{k*j} in the result is p's coefficient of x^j.
IntPolynomial substitute_power(const IntPolynomial& p, int k);

/// Inverse of substitute_power: for p a polynomial in x^k, return the
/// polynomial q with q(t) = p(x) under t = x^k. Rejects stray exponents.
IntPolynomial compress_power(const IntPolynomial& p, int k);

}  // namespace tilegf

#endif  // TILEGF_POLY_HPP
