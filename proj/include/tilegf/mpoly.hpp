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

#ifndef TILEGF_MPOLY_HPP
#define TILEGF_MPOLY_HPP

#include <compare>
#include <map>
#include <string>

#include "tilegf/bigint.hpp"
#include "tilegf/poly.hpp"

namespace tilegf {

/// Variables of the refined generating functions: x tracks columns, y the
/// marked tile count, z the square/orientation count.
enum class Var { x = 0, y = 1, z = 2 };

/// Exponent triple of a term x^n y^r z^s.
struct MExp {
  int n = 0;
  int r = 0;
  int s = 0;

  friend auto operator<=>(const MExp&, const MExp&) = default;

  int get(Var v) const;
  MExp with(Var v, int e) const;
};

/// Sparse polynomial in x, y, z with exact integer coefficients. Bivariate
/// polynomials simply never touch z. Most closed forms here have a handful
/// of terms, so a sorted map is plenty.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c) : MPoly(BigInt(c)) {}  // NOLINT(runtime/explicit)
  MPoly(BigInt c);                     // NOLINT(runtime/explicit)

  static MPoly monomial(BigInt c, MExp e);
  /// Lift a univariate polynomial in x.
  static MPoly from_univariate(const IntPolynomial& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<MExp, BigInt>& terms() const { return terms_; }
  const BigInt& coeff(MExp e) const;
  /// Highest x-exponent present (-1 for the zero polynomial).
  int x_degree() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { lhs += rhs; return lhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { lhs -= rhs; return lhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend bool operator==(const MPoly& lhs, const MPoly& rhs) = default;

  /// Substitute v = 0 (drop every term with a positive exponent in v).
  MPoly set_zero(Var v) const;
  /// Substitute v = 1 (erase v from every term, merging coefficients).
  MPoly set_one(Var v) const;
  /// Substitute v -> v^k (multiply v-exponents by k).
  MPoly stretch(Var v, int k) const;

  /// Convert to a univariate polynomial in x. Requires y and z absent.
  IntPolynomial to_univariate() const;

  std::string to_string() const;

 private:
  void add_term(MExp e, BigInt c);

  std::map<MExp, BigInt> terms_;
};

MPoly pow(const MPoly& p, unsigned exponent);

/// num/den pair for the bivariate and trivariate closed forms. Kept as
/// sparse polynomials (not expanded) so each factor stays auditable;
/// expansion is delegated to mseries_expand.
struct MRationalGF {
  MPoly num;
  MPoly den;

  bool same_function(const MRationalGF& rhs) const {
    return num * rhs.den == rhs.num * den;
  }
};

}  // namespace tilegf

#endif  // TILEGF_MPOLY_HPP
