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

#include "tilegf/mseries.hpp"

#include <utility>

#include "tilegf/errors.hpp"

namespace tilegf {

namespace {
const BigInt kZero = 0;
}  // namespace

const BigInt& TruncatedMSeries::at(int n, int r, int s) const {
  auto it = terms.find(MExp{n, r, s});
  return it == terms.end() ? kZero : it->second;
}

TruncatedMSeries TruncatedMSeries::set_zero(Var v) const {
  TruncatedMSeries out;
  out.x_order = x_order;
  out.symbols = symbols;
  for (const auto& [e, c] : terms)
    if (e.get(v) == 0) out.terms.emplace(e, c);
  return out;
}

TruncatedMSeries TruncatedMSeries::set_one(Var v) const {
  TruncatedMSeries out;
  out.x_order = x_order;
  out.symbols = symbols;
  for (const auto& [e, c] : terms) {
    auto [it, inserted] = out.terms.emplace(e.with(v, 0), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

std::vector<BigInt> TruncatedMSeries::x_coefficients() const {
  std::vector<BigInt> out(static_cast<size_t>(x_order) + 1, kZero);
  for (const auto& [e, c] : terms) out[static_cast<size_t>(e.n)] += c;
  return out;
}

TruncatedMSeries mseries_expand(const MPoly& num, const MPoly& den,
                                int x_order) {
  if (x_order < 0) throw ValidationError("x_order must be >= 0");
  for (const auto& [e, c] : den.terms()) {
    if (e.n > 0) continue;
    if (e.r != 0 || e.s != 0 || c != 1)
      throw ZeroConstantTerm(
          "denominator must be 1 plus terms with positive x-exponent, got " +
          den.to_string());
  }
  if (den.coeff(MExp{0, 0, 0}) != 1)
    throw ZeroConstantTerm("denominator constant term must be 1, got " +
                           den.to_string());

  // Group den's non-constant terms and num's terms by x-exponent, then run
  // the division one x-degree at a time:
  //   S_n = num_n - sum_{d=1..n} den_d * S_{n-d}   (convolution over y, z).
  using Slice = std::map<std::pair<int, int>, BigInt>;
  std::vector<Slice> den_by_n(static_cast<size_t>(x_order) + 1);
  for (const auto& [e, c] : den.terms())
    if (e.n >= 1 && e.n <= x_order) den_by_n[static_cast<size_t>(e.n)][{e.r, e.s}] = c;

  std::vector<Slice> series(static_cast<size_t>(x_order) + 1);
  for (const auto& [e, c] : num.terms())
    if (e.n <= x_order) series[static_cast<size_t>(e.n)][{e.r, e.s}] += c;

  for (int n = 0; n <= x_order; ++n) {
    Slice& sn = series[static_cast<size_t>(n)];
    for (int d = 1; d <= n; ++d) {
      const Slice& dd = den_by_n[static_cast<size_t>(d)];
      if (dd.empty()) continue;
      for (const auto& [de, dc] : dd)
        for (const auto& [se, sc] : series[static_cast<size_t>(n - d)])
          sn[{de.first + se.first, de.second + se.second}] -= dc * sc;
    }
    std::erase_if(sn, [](const auto& kv) { return kv.second == 0; });
  }

  TruncatedMSeries out;
  out.x_order = x_order;
  for (int n = 0; n <= x_order; ++n)
    for (auto& [rs, c] : series[static_cast<size_t>(n)])
      out.terms.emplace(MExp{n, rs.first, rs.second}, std::move(c));
  return out;
}

}  // namespace tilegf
