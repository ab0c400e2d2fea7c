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

#include "tilegf/poly.hpp"

#include <sstream>

#include "tilegf/errors.hpp"

namespace tilegf {

namespace {
const BigInt kZero = 0;
}  // namespace

IntPolynomial::IntPolynomial(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt c, int exp) {
  if (exp < 0) throw ValidationError("monomial exponent must be >= 0");
  if (c == 0) return {};
  IntPolynomial p;
  p.coeffs_.assign(static_cast<size_t>(exp) + 1, kZero);
  p.coeffs_.back() = std::move(c);
  return p;
}

const BigInt& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

BigRational IntPolynomial::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + BigRational(*it);
    acc.canonicalize();
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  IntPolynomial out;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  out.trim();
  return out;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << to_decimal(mag);
    } else {
      if (mag != 1) os << to_decimal(mag) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial out(1);
  IntPolynomial base = p;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

IntPolynomial substitute_power(const IntPolynomial& p, int k) {
  if (k < 1) throw ValidationError("substitute_power requires k >= 1");
  if (k == 1 || p.is_zero()) return p;
  std::vector<BigInt> out(static_cast<size_t>(p.degree()) * k + 1, BigInt(0));
  for (int i = 0; i <= p.degree(); ++i)
    out[static_cast<size_t>(i) * k] = p.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial compress_power(const IntPolynomial& p, int k) {
  if (k < 1) throw ValidationError("compress_power requires k >= 1");
  if (k == 1 || p.is_zero()) return p;
  std::vector<BigInt> out(static_cast<size_t>(p.degree() / k) + 1, BigInt(0));
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    if (i % k != 0)
      throw ValidationError("polynomial is not a function of x^" +
                            std::to_string(k));
    out[static_cast<size_t>(i / k)] = p.coeff(i);
  }
  return IntPolynomial(std::move(out));
}

}  // namespace tilegf
