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

#include "tilegf/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "tilegf/errors.hpp"

namespace tilegf {

namespace {
const BigInt kZero = 0;
}  // namespace

int MExp::get(Var v) const {
  switch (v) {
    case Var::x: return n;
    case Var::y: return r;
    case Var::z: return s;
  }
  return 0;
}

MExp MExp::with(Var v, int e) const {
  MExp out = *this;
  switch (v) {
    case Var::x: out.n = e; break;
    case Var::y: out.r = e; break;
    case Var::z: out.s = e; break;
  }
  return out;
}

MPoly::MPoly(BigInt c) {
  if (c != 0) terms_.emplace(MExp{}, std::move(c));
}

MPoly MPoly::monomial(BigInt c, MExp e) {
  if (e.n < 0 || e.r < 0 || e.s < 0)
    throw ValidationError("monomial exponents must be >= 0");
  MPoly p;
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

MPoly MPoly::from_univariate(const IntPolynomial& p) {
  MPoly out;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) out.terms_.emplace(MExp{i, 0, 0}, p.coeff(i));
  return out;
}

const BigInt& MPoly::coeff(MExp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? kZero : it->second;
}

int MPoly::x_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.n);
  return d;
}

void MPoly::add_term(MExp e, BigInt c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_)
      out.add_term(MExp{ea.n + eb.n, ea.r + eb.r, ea.s + eb.s}, ca * cb);
  return out;
}

MPoly pow(const MPoly& p, unsigned exponent) {
  MPoly out(1);
  MPoly base = p;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

MPoly MPoly::set_zero(Var v) const {
  MPoly out;
  for (const auto& [e, c] : terms_)
    if (e.get(v) == 0) out.terms_.emplace(e, c);
  return out;
}

MPoly MPoly::set_one(Var v) const {
  MPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e.with(v, 0), c);
  return out;
}

MPoly MPoly::stretch(Var v, int k) const {
  if (k < 1) throw ValidationError("stretch requires k >= 1");
  MPoly out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(e.with(v, e.get(v) * k), c);
  return out;
}

IntPolynomial MPoly::to_univariate() const {
  std::vector<BigInt> coeffs(static_cast<size_t>(std::max(x_degree(), -1) + 1),
                             BigInt(0));
  for (const auto& [e, c] : terms_) {
    if (e.r != 0 || e.s != 0)
      throw ValidationError("polynomial still involves y or z");
    coeffs[static_cast<size_t>(e.n)] = c;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::ostringstream term;
    bool has_var = e.n > 0 || e.r > 0 || e.s > 0;
    if (mag != 1 || !has_var) term << to_decimal(mag);
    const char* names[3] = {"x", "y", "z"};
    int exps[3] = {e.n, e.r, e.s};
    for (int i = 0; i < 3; ++i) {
      if (exps[i] == 0) continue;
      if (term.tellp() > 0) term << "*";
      term << names[i];
      if (exps[i] > 1) term << "^" << exps[i];
    }
    os << term.str();
  }
  return os.str();
}

}  // namespace tilegf
