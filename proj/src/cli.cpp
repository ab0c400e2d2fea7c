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

#include "tilegf/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tilegf/asymptotics.hpp"
#include "tilegf/closedform.hpp"
#include "tilegf/errors.hpp"
#include "tilegf/mseries.hpp"
#include "tilegf/oeis.hpp"
#include "tilegf/oracle.hpp"
#include "tilegf/rational_gf.hpp"

namespace tilegf::cli {

namespace cf = tilegf::closedform;
using json = nlohmann::ordered_json;

namespace {

enum class Format { json_fmt, csv_fmt, plain_fmt };

struct FormatFlags {
  bool csv = false;
  bool plain = false;

  Format resolve() const {
    if (csv && plain) throw ValidationError("choose at most one of --csv/--plain");
    if (csv) return Format::csv_fmt;
    if (plain) return Format::plain_fmt;
    return Format::json_fmt;
  }
};

void add_format_flags(CLI::App* cmd, FormatFlags& flags) {
  cmd->add_flag("--csv", flags.csv, "CSV output instead of JSON");
  cmd->add_flag("--plain", flags.plain, "minimal plain-text output");
}

void emit_json(std::ostream& out, const json& record) {
  out << record.dump(2) << "\n";
}

std::optional<cf::RegimeParams> try_regime(int m, int k) {
  try {
    return cf::classify_regime(m, k);
  } catch (const RegimeMismatch&) {
    return std::nullopt;
  }
}

RationalGF plain_gf_for_regime(const cf::RegimeParams& p) {
  switch (p.regime) {
    case cf::Regime::thin: return cf::gf_thin(p.m, p.k);
    case cf::Regime::equal: return cf::gf_rect_k_by_n(p.k);
    case cf::Regime::main: return cf::gf_main(p.m, p.k);
  }
  throw ValidationError("unreachable regime");
}

struct Range {
  int lo = 0;
  int hi = 0;
};

// "a" or "a..b"
Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw ValidationError("bad range '" + text + "', expected N or A..B");
  }
  if (r.hi < r.lo) throw ValidationError("empty range '" + text + "'");
  return r;
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  int m = 0, n = 0, k = 0;
  bool mixed = false;
  std::string method = "auto";
  FormatFlags fmt;
};

int run_count(const CountArgs& a, std::ostream& out) {
  std::string method = a.method;
  if (method == "auto") {
    auto regime = try_regime(a.m, a.k);
    bool closed_ok =
        regime && (!a.mixed || regime->regime == cf::Regime::main);
    if (closed_ok)
      method = "closed";
    else if (!a.mixed)
      method = "tm";
    else
      method = "bt";
  }

  BigInt count;
  std::string provenance;
  if (method == "closed") {
    cf::RegimeParams p = cf::classify_regime(a.m, a.k);
    RationalGF gf = a.mixed ? cf::gf_mixed(a.m, a.k) : plain_gf_for_regime(p);
    count = series_expand(gf, a.n)[static_cast<size_t>(a.n)];
    provenance = "closed-form";
  } else if (method == "bt") {
    count = oracle::count_tilings_bt(a.m, a.n, a.k, a.mixed);
    provenance = "backtracking";
  } else if (method == "tm") {
    if (a.mixed)
      throw ValidationError("transfer matrix supports k x 1 tiles only");
    count = oracle::transfer_matrix_count(a.m, a.n, a.k);
    provenance = "transfer-matrix";
  } else {
    throw ValidationError("unknown method '" + method + "'");
  }

  switch (a.fmt.resolve()) {
    case Format::plain_fmt:
      out << to_decimal(count) << "\n";
      break;
    case Format::csv_fmt:
      out << "m,n,k,mixed,provenance,count\n"
          << a.m << "," << a.n << "," << a.k << "," << (a.mixed ? 1 : 0) << ","
          << provenance << "," << to_decimal(count) << "\n";
      break;
    case Format::json_fmt: {
      json rec;
      rec["command"] = "count";
      rec["params"] = {{"m", a.m}, {"n", a.n}, {"k", a.k}, {"mixed", a.mixed}};
      rec["provenance"] = provenance;
      rec["result"] = {{"count", to_decimal(count)}};
      emit_json(out, rec);
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// series

struct SeriesArgs {
  int m = 0, k = 0;
  int order = 0;
  std::string kind = "plain";
  FormatFlags fmt;
};

RationalGF series_gf(const SeriesArgs& a) {
  if (a.kind == "plain")
    return plain_gf_for_regime(cf::classify_regime(a.m, a.k));
  if (a.kind == "faultfree") return cf::gf_faultfree(a.m, a.k);
  if (a.kind == "mixed") return cf::gf_mixed(a.m, a.k);
  if (a.kind == "brick") return cf::gf_brick3d(a.m, a.k);
  throw ValidationError("unknown series kind '" + a.kind + "'");
}

int run_series(const SeriesArgs& a, std::ostream& out) {
  RationalGF gf = series_gf(a);
  std::vector<BigInt> coeffs = series_expand(gf, a.order);
  switch (a.fmt.resolve()) {
    case Format::plain_fmt: {
      for (size_t i = 0; i < coeffs.size(); ++i)
        out << (i ? " " : "") << to_decimal(coeffs[i]);
      out << "\n";
      break;
    }
    case Format::csv_fmt: {
      out << "n,coefficient\n";
      for (size_t i = 0; i < coeffs.size(); ++i)
        out << i << "," << to_decimal(coeffs[i]) << "\n";
      break;
    }
    case Format::json_fmt: {
      json rec;
      rec["command"] = "series";
      rec["params"] = {{"m", a.m}, {"k", a.k}, {"order", a.order}, {"kind", a.kind}};
      rec["provenance"] = "closed-form";
      json arr = json::array();
      for (const BigInt& c : coeffs) arr.push_back(to_decimal(c));
      rec["result"] = {{"num", gf.num().to_string()},
                       {"den", gf.den().to_string()},
                       {"coefficients", arr}};
      emit_json(out, rec);
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// refine

struct RefineArgs {
  int m = 0, k = 0;
  int order = 0;
  std::string kind = "vertical";
  FormatFlags fmt;
};

int run_refine(const RefineArgs& a, std::ostream& out) {
  MRationalGF gf;
  if (a.kind == "vertical")
    gf = cf::gf_vertical(a.m, a.k);
  else if (a.kind == "mixed")
    gf = cf::gf_mixed_refined(a.m, a.k);
  else if (a.kind == "brick")
    gf = cf::gf_brick3d_refined(a.m, a.k);
  else
    throw ValidationError("unknown refine kind '" + a.kind + "'");

  TruncatedMSeries series = mseries_expand(gf, a.order);
  switch (a.fmt.resolve()) {
    case Format::plain_fmt: {
      for (const auto& [e, c] : series.terms)
        out << e.n << " " << e.r << " " << e.s << " " << to_decimal(c) << "\n";
      break;
    }
    case Format::csv_fmt: {
      out << "n,r,s,coefficient\n";
      for (const auto& [e, c] : series.terms)
        out << e.n << "," << e.r << "," << e.s << "," << to_decimal(c) << "\n";
      break;
    }
    case Format::json_fmt: {
      json rec;
      rec["command"] = "refine";
      rec["params"] = {{"m", a.m}, {"k", a.k}, {"order", a.order}, {"kind", a.kind}};
      rec["provenance"] = "closed-form";
      rec["symbols"] = {series.symbols[0], series.symbols[1], series.symbols[2]};
      json rows = json::array();
      for (const auto& [e, c] : series.terms)
        rows.push_back({{"n", e.n}, {"r", e.r}, {"s", e.s}, {"coeff", to_decimal(c)}});
      rec["result"] = {{"num", gf.num.to_string()},
                       {"den", gf.den.to_string()},
                       {"rows", rows}};
      emit_json(out, rec);
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// asympt

struct AsymptArgs {
  int m = 0, k = 0;
  int n_max = 0;  // 0 = auto: 20k
  double tol = 1e-12;
  std::string kind = "plain";
  FormatFlags fmt;
};

int run_asympt(const AsymptArgs& a, std::ostream& out) {
  int k_eff = a.k;
  RationalGF gf = [&] {
    if (a.kind == "plain") {
      cf::RegimeParams p = cf::classify_regime(a.m, a.k);
      // The m = k strip mixes periods: its series is a function of x, not
      // x^k, so growth is normalized per column there.
      if (p.regime == cf::Regime::equal) k_eff = 1;
      return plain_gf_for_regime(p);
    }
    if (a.kind == "mixed") return cf::gf_mixed(a.m, a.k);
    if (a.kind == "brick") return cf::gf_brick3d(a.m, a.k);
    throw ValidationError("unknown asympt kind '" + a.kind + "'");
  }();
  int n_max = a.n_max > 0 ? a.n_max : 20 * a.k;
  n_max -= n_max % k_eff;
  asymptotics::GrowthReport rep =
      asymptotics::growth_report(gf, k_eff, n_max, a.tol);

  switch (a.fmt.resolve()) {
    case Format::plain_fmt:
      out << "rho " << rep.rho << "\n"
          << "per_k_growth " << rep.per_k_growth << "\n"
          << "per_column_growth " << rep.per_column_growth << "\n"
          << "empirical_ratio " << rep.empirical_ratio << "\n";
      break;
    case Format::csv_fmt:
      out << "rho,rho_error,per_k_growth,per_column_growth,empirical_ratio,"
             "n_max,discrepancy\n"
          << rep.rho << "," << rep.rho_error << "," << rep.per_k_growth << ","
          << rep.per_column_growth << "," << rep.empirical_ratio << ","
          << rep.n_max << "," << rep.discrepancy << "\n";
      break;
    case Format::json_fmt: {
      json rec;
      rec["command"] = "asympt";
      rec["params"] = {{"m", a.m}, {"k", a.k}, {"kind", a.kind}, {"n_max", n_max}};
      rec["provenance"] = "closed-form";
      rec["result"] = {
          {"den_t", compress_power(gf.den(), k_eff).to_string("t")},
          {"rho", rep.rho},
          {"rho_error", rep.rho_error},
          {"per_k_growth", rep.per_k_growth},
          {"per_column_growth", rep.per_column_growth},
          {"empirical_ratio", rep.empirical_ratio},
          {"n_max", rep.n_max},
          {"discrepancy", rep.discrepancy},
          {"caveat",
           "dominant root not symbolically verified simple; empirical ratio "
           "is the consistency guard"}};
      emit_json(out, rec);
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oeis-verify

struct OeisArgs {
  std::string id;
  int m = 0, k = 0;
  std::string bfile;
  bool fetch = false;
  std::string cache_dir;
  std::string base_url = "http://oeis.org";
  std::optional<int> shift;
  int min_terms = 10;
  FormatFlags fmt;
};

int run_oeis_verify(const OeisArgs& a, std::ostream& out) {
  if (a.bfile.empty() && !a.fetch)
    throw ValidationError("supply --bfile PATH or --fetch");
  oeis::RefSequence ref =
      a.fetch && a.bfile.empty()
          ? oeis::fetch_bfile(a.id, oeis::default_cache_dir(a.cache_dir),
                              a.base_url)
          : oeis::load_bfile(a.id, a.bfile);

  long max_index = 0;
  for (const auto& [i, v] : ref.entries) max_index = std::max(max_index, i);
  int order = static_cast<int>(a.k * (max_index + 3));
  RationalGF gf = cf::gf_main(a.m, a.k);
  std::vector<BigInt> coeffs = series_expand(gf, order);
  oeis::SequenceReport rep =
      oeis::compare(ref, coeffs, a.k, a.shift, a.min_terms);

  auto verdict_name = [](oeis::Verdict v) {
    switch (v) {
      case oeis::Verdict::match: return "match";
      case oeis::Verdict::mismatch: return "mismatch";
      case oeis::Verdict::missing: return "missing";
    }
    return "missing";
  };

  switch (a.fmt.resolve()) {
    case Format::plain_fmt:
      out << rep.id << " " << (rep.pass ? "pass" : "fail") << " compared="
          << rep.compared << " matches=" << rep.matches << " shift="
          << rep.aligned_shift << "\n";
      break;
    case Format::csv_fmt: {
      out << "index,n,verdict,expected,computed\n";
      for (const auto& v : rep.verdicts)
        out << v.index << "," << v.n << "," << verdict_name(v.verdict) << ","
            << to_decimal(v.expected) << ","
            << (v.verdict == oeis::Verdict::missing ? "" : to_decimal(v.computed))
            << "\n";
      break;
    }
    case Format::json_fmt: {
      json rec;
      rec["command"] = "oeis-verify";
      rec["params"] = {{"id", a.id}, {"m", a.m}, {"k", a.k},
                       {"source", ref.source}, {"min_terms", a.min_terms}};
      rec["provenance"] = "closed-form";
      json verdicts = json::array();
      for (const auto& v : rep.verdicts) {
        json row = {{"index", v.index}, {"n", v.n},
                    {"verdict", verdict_name(v.verdict)},
                    {"expected", to_decimal(v.expected)}};
        if (v.verdict != oeis::Verdict::missing)
          row["computed"] = to_decimal(v.computed);
        verdicts.push_back(std::move(row));
      }
      rec["result"] = {{"shift", rep.aligned_shift},
                       {"compared", rep.compared},
                       {"matches", rep.matches},
                       {"pass", rep.pass},
                       {"verdicts", verdicts}};
      emit_json(out, rec);
      break;
    }
  }
  return rep.pass ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string k_range = "2..3";
  std::string m_range = "auto";
  int n_max = 12;
  std::uint64_t budget_nodes = 10'000'000;
  int max_3d_cells = 48;
  bool perturb = false;
  FormatFlags fmt;
};

struct CheckRecord {
  std::string check;
  int k = 0;
  int m = 0;
  std::string status;  // pass | fail | skipped
  std::string detail;
  std::string provenance;
};

class VerifyRun {
 public:
  VerifyRun(const VerifyArgs& args) : args_(args) {
    budget_.max_nodes = args.budget_nodes;
  }

  std::vector<CheckRecord> execute() {
    Range kr = parse_range(args_.k_range);
    for (int k = kr.lo; k <= kr.hi; ++k) {
      if (k < 2) {
        add("params", k, 0, "skipped", "k < 2 not supported");
        continue;
      }
      std::vector<int> ms;
      if (args_.m_range == "auto") {
        for (int m = k + 1; m < 2 * k; ++m) ms.push_back(m);
      } else {
        Range mr = parse_range(args_.m_range);
        for (int m = mr.lo; m <= mr.hi; ++m) ms.push_back(m);
      }
      for (int m : ms) run_pair(k, m);
    }
    return std::move(records_);
  }

 private:
  RationalGF main_gf(int m, int k) const {
    RationalGF gf = cf::gf_main(m, k);
    if (args_.perturb)
      return RationalGF(gf.num() + IntPolynomial::monomial(1, 1), gf.den());
    return gf;
  }

  void add(const std::string& check, int k, int m, const std::string& status,
           const std::string& detail = "", const std::string& provenance = "") {
    records_.push_back({check, k, m, status, detail, provenance});
  }

  // Wrap one named check; BudgetExceeded means skipped, not failed.
  template <typename Fn>
  void guarded(const std::string& check, int k, int m,
               const std::string& provenance, Fn&& fn) {
    try {
      std::string detail = fn();
      add(check, k, m, detail.empty() ? "pass" : "fail", detail, provenance);
    } catch (const BudgetExceeded& e) {
      add(check, k, m, "skipped", e.what(), provenance);
    }
  }

  void run_pair(int k, int m) {
    auto regime = try_regime(m, k);
    const bool main_regime = regime && regime->regime == cf::Regime::main;
    const int n_max = args_.n_max;

    // Oracle triangle runs for every m, including m >= 2k.
    guarded("bt_vs_tm", k, m, "backtracking", [&]() -> std::string {
      for (int n = 0; n <= n_max; ++n) {
        BigInt bt = oracle::count_tilings_bt(m, n, k, false, budget_);
        BigInt tm = oracle::transfer_matrix_count(m, n, k, budget_);
        if (bt != tm)
          return "n=" + std::to_string(n) + ": bt " + to_decimal(bt) +
                 " vs tm " + to_decimal(tm);
      }
      return "";
    });

    guarded("klarner_existence", k, m, "transfer-matrix", [&]() -> std::string {
      for (int n = 1; n <= n_max; ++n) {
        bool exists = oracle::tiling_exists_profile(m, n, k, budget_);
        if (exists != cf::klarner_exists(m, n, k))
          return "n=" + std::to_string(n) + ": oracle " +
                 (exists ? "tileable" : "untileable") +
                 " vs divisibility criterion";
      }
      return "";
    });

    guarded("fault_decomposition", k, m, "backtracking", [&]() -> std::string {
      std::vector<BigInt> h(static_cast<size_t>(n_max) + 1), a(static_cast<size_t>(n_max) + 1);
      for (int n = 0; n <= n_max; ++n)
        h[static_cast<size_t>(n)] = oracle::count_tilings_bt(m, n, k, false, budget_);
      for (int n = 1; n <= n_max; ++n)
        a[static_cast<size_t>(n)] = oracle::count_faultfree(m, n, k, false, budget_);
      for (int n = 1; n <= n_max; ++n) {
        BigInt sum = 0;
        for (int l = 1; l <= n; ++l) sum += a[static_cast<size_t>(l)] * h[static_cast<size_t>(n - l)];
        if (sum != h[static_cast<size_t>(n)])
          return "n=" + std::to_string(n) + ": decomposition sum " +
                 to_decimal(sum) + " vs h " + to_decimal(h[static_cast<size_t>(n)]);
      }
      return "";
    });

    if (!regime) {
      add("closed_vs_oracles", k, m, "skipped", "m >= 2k has no closed form",
          "closed-form");
      return;
    }

    guarded("closed_vs_oracles", k, m, "closed-form", [&]() -> std::string {
      RationalGF gf = regime->regime == cf::Regime::main
                          ? main_gf(m, k)
                          : plain_gf_for_regime(*regime);
      std::vector<BigInt> c = series_expand(gf, n_max);
      for (int n = 0; n <= n_max; ++n) {
        BigInt bt = oracle::count_tilings_bt(m, n, k, false, budget_);
        BigInt tm = oracle::transfer_matrix_count(m, n, k, budget_);
        if (c[static_cast<size_t>(n)] != bt || c[static_cast<size_t>(n)] != tm)
          return "n=" + std::to_string(n) + ": closed " +
                 to_decimal(c[static_cast<size_t>(n)]) + " vs bt " + to_decimal(bt) +
                 " vs tm " + to_decimal(tm);
      }
      return "";
    });

    if (!main_regime) {
      add("refinements", k, m, "skipped",
          "refined forms require k < m < 2k", "closed-form");
      return;
    }

    guarded("faultfree_closed_form", k, m, "backtracking", [&]() -> std::string {
      for (int ell = 1; k * ell <= n_max; ++ell) {
        BigInt oracle_a = oracle::count_faultfree(m, k * ell, k, false, budget_);
        BigInt closed_a = cf::faultfree_count(m, ell, k);
        if (oracle_a != closed_a)
          return "ell=" + std::to_string(ell) + ": oracle " +
                 to_decimal(oracle_a) + " vs closed " + to_decimal(closed_a);
        BigInt tm_a = oracle::transfer_matrix_faultfree_count(m, k * ell, k, budget_);
        if (tm_a != closed_a)
          return "ell=" + std::to_string(ell) + ": tm fault-free " +
                 to_decimal(tm_a) + " vs closed " + to_decimal(closed_a);
      }
      return "";
    });

    guarded("faultfree_mixed", k, m, "backtracking", [&]() -> std::string {
      for (int ell = 1; k * ell <= std::min(n_max, 3 * k); ++ell) {
        BigInt oracle_a = oracle::count_faultfree(m, k * ell, k, true, budget_);
        BigInt closed_a = cf::faultfree_mixed_count(m, ell, k);
        if (oracle_a != closed_a)
          return "ell=" + std::to_string(ell) + ": oracle " +
                 to_decimal(oracle_a) + " vs closed " + to_decimal(closed_a);
      }
      return "";
    });

    guarded("substitution_lattice", k, m, "closed-form", [&]() -> std::string {
      int order = std::min(n_max, 4 * k);
      auto refined = cf::gf_mixed_refined(m, k);
      auto vertical = cf::gf_vertical(m, k);
      TruncatedMSeries full = mseries_expand(refined, order);
      TruncatedMSeries vert = mseries_expand(vertical, order);
      if (full.set_zero(Var::z).terms != vert.terms)
        return "z=0 slice differs from vertical refinement";
      std::vector<BigInt> mixed = series_expand(cf::gf_mixed(m, k), order);
      if (full.set_one(Var::y).set_one(Var::z).x_coefficients() != mixed)
        return "y=z=1 marginal differs from mixed series";
      std::vector<BigInt> plain = series_expand(main_gf(m, k), order);
      if (vert.set_one(Var::y).x_coefficients() != plain)
        return "vertical y=1 marginal differs from plain series";
      auto brick = cf::gf_brick3d_refined(m, k);
      std::vector<BigInt> brick_plain = series_expand(cf::gf_brick3d(m, k), order);
      if (mseries_expand(brick, order).set_one(Var::y).set_one(Var::z)
              .x_coefficients() != brick_plain)
        return "brick refinement marginal differs from brick series";
      return "";
    });

    guarded("stats_vs_refinements", k, m, "backtracking", [&]() -> std::string {
      int order = std::min(n_max, 3 * k);
      TruncatedMSeries vert = mseries_expand(cf::gf_vertical(m, k), order);
      TruncatedMSeries mixed = mseries_expand(cf::gf_mixed_refined(m, k), order);
      for (int n = 0; n <= order; ++n) {
        auto plain_stats = oracle::count_by_stats(m, n, k, false, budget_);
        for (const auto& [rs, cnt] : plain_stats)
          if (vert.at(n, rs.first, 0) != cnt)
            return "n=" + std::to_string(n) + " r=" + std::to_string(rs.first) +
                   ": oracle " + to_decimal(cnt) + " vs refinement " +
                   to_decimal(vert.at(n, rs.first, 0));
        auto mixed_stats = oracle::count_by_stats(m, n, k, true, budget_);
        for (const auto& [rs, cnt] : mixed_stats)
          if (mixed.at(n, rs.first, rs.second) != cnt)
            return "n=" + std::to_string(n) + " (r,s)=(" +
                   std::to_string(rs.first) + "," + std::to_string(rs.second) +
                   "): oracle " + to_decimal(cnt) + " vs refinement " +
                   to_decimal(mixed.at(n, rs.first, rs.second));
      }
      return "";
    });

    guarded("brick3d_bijection", k, m, "3d", [&]() -> std::string {
      int n_limit = args_.max_3d_cells / (m * k);
      int order = std::min(n_max, n_limit);
      if (order < 1) throw BudgetExceeded("3d cell budget excludes all n");
      std::vector<BigInt> closed = series_expand(cf::gf_brick3d(m, k), order);
      TruncatedMSeries refined =
          mseries_expand(cf::gf_brick3d_refined(m, k), order);
      for (int n = 0; n <= order; ++n) {
        oracle::Count3D c3 = oracle::count_3d(m, n, k, budget_);
        BigInt mixed2d = oracle::count_tilings_bt(m, n, k, true, budget_);
        if (c3.total != mixed2d || c3.total != closed[static_cast<size_t>(n)])
          return "n=" + std::to_string(n) + ": 3d " + to_decimal(c3.total) +
                 " vs 2d mixed " + to_decimal(mixed2d) + " vs closed " +
                 to_decimal(closed[static_cast<size_t>(n)]);
        for (const auto& [rs, cnt] : c3.by_orientation)
          if (refined.at(n, rs.first, rs.second) != cnt)
            return "n=" + std::to_string(n) + " orientation (" +
                   std::to_string(rs.first) + "," + std::to_string(rs.second) +
                   "): 3d " + to_decimal(cnt) + " vs refinement " +
                   to_decimal(refined.at(n, rs.first, rs.second));
      }
      return "";
    });

    guarded("blocks_and_verticals", k, m, "backtracking", [&]() -> std::string {
      for (int ell = 2; k * ell <= n_max; ++ell) {
        auto classes = oracle::count_blocks_and_verticals(m, k * ell, k, budget_);
        for (const auto& [vb, cnt] : classes) {
          if (vb.first != k)
            return "ell=" + std::to_string(ell) + ": tiling with " +
                   std::to_string(vb.first) + " verticals (expected k)";
          if (vb.second != ell - 1)
            return "ell=" + std::to_string(ell) + ": tiling with " +
                   std::to_string(vb.second) + " blocks (expected ell-1)";
        }
        // Fiber relation: mixed fault-free = 2^{ell-1} * single fault-free.
        BigInt single = oracle::count_faultfree(m, k * ell, k, false, budget_);
        BigInt mixed = oracle::count_faultfree(m, k * ell, k, true, budget_);
        if (mixed != pow2(static_cast<unsigned long>(ell - 1)) * single)
          return "ell=" + std::to_string(ell) + ": mixed fault-free " +
                 to_decimal(mixed) + " != 2^(ell-1) * " + to_decimal(single);
      }
      return "";
    });
  }

  VerifyArgs args_;
  oracle::Budget budget_;
  std::vector<CheckRecord> records_;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyRun runner(a);
  std::vector<CheckRecord> records = runner.execute();

  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : records) {
    if (r.status == "pass") ++pass;
    else if (r.status == "fail") ++fail;
    else ++skipped;
  }
  bool ok = fail == 0;

  switch (a.fmt.resolve()) {
    case Format::plain_fmt: {
      for (const auto& r : records) {
        out << r.check << " k=" << r.k << " m=" << r.m << " " << r.status;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
      }
      out << (ok ? "PASS" : "FAIL") << " pass=" << pass << " fail=" << fail
          << " skipped=" << skipped << "\n";
      break;
    }
    case Format::csv_fmt: {
      out << "check,k,m,status,detail\n";
      for (const auto& r : records)
        out << r.check << "," << r.k << "," << r.m << "," << r.status << ",\""
            << r.detail << "\"\n";
      break;
    }
    case Format::json_fmt: {
      json rec;
      rec["command"] = "verify";
      rec["params"] = {{"k", a.k_range}, {"m", a.m_range}, {"nmax", a.n_max},
                       {"budget", a.budget_nodes}};
      json checks = json::array();
      for (const auto& r : records) {
        json c = {{"check", r.check}, {"k", r.k}, {"m", r.m},
                  {"status", r.status}};
        if (!r.provenance.empty()) c["provenance"] = r.provenance;
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(std::move(c));
      }
      rec["result"] = {{"checks", checks},
                       {"pass_count", pass},
                       {"fail_count", fail},
                       {"skipped_count", skipped},
                       {"pass", ok}};
      emit_json(out, rec);
      break;
    }
  }
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact tiling enumeration: closed forms, oracles, growth "
               "rates, OEIS checks"};
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count", "count tilings of an m x n board");
  count->add_option("m", count_args.m, "board height")->required();
  count->add_option("n", count_args.n, "board width")->required();
  count->add_option("k", count_args.k, "tile length")->required();
  count->add_flag("--mixed", count_args.mixed, "also allow k x k square tiles");
  count->add_option("--method", count_args.method,
                    "auto|closed|bt|tm (closed requires a supported regime)")
      ->check(CLI::IsMember({"auto", "closed", "bt", "tm"}));
  add_format_flags(count, count_args.fmt);

  SeriesArgs series_args;
  CLI::App* series = app.add_subcommand("series", "coefficients c_0..c_N of a closed form");
  series->add_option("m", series_args.m, "strip height")->required();
  series->add_option("k", series_args.k, "tile length")->required();
  series->add_option("--order", series_args.order, "series order N")->required();
  series->add_option("--kind", series_args.kind, "plain|faultfree|mixed|brick")
      ->check(CLI::IsMember({"plain", "faultfree", "mixed", "brick"}));
  add_format_flags(series, series_args.fmt);

  RefineArgs refine_args;
  CLI::App* refine = app.add_subcommand(
      "refine", "refined expansion rows (n, r, s, coefficient)");
  refine->add_option("m", refine_args.m, "strip height")->required();
  refine->add_option("k", refine_args.k, "tile length")->required();
  refine->add_option("--order", refine_args.order, "x-order")->required();
  refine->add_option("--kind", refine_args.kind, "vertical|mixed|brick")
      ->check(CLI::IsMember({"vertical", "mixed", "brick"}));
  add_format_flags(refine, refine_args.fmt);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-validate closed forms against the oracles");
  verify->add_option("--k", verify_args.k_range, "k or k-range (A..B)");
  verify->add_option("--m", verify_args.m_range, "m, m-range, or 'auto'");
  verify->add_option("--nmax", verify_args.n_max, "largest board width");
  verify->add_option("--budget", verify_args.budget_nodes,
                     "backtracking node budget per check");
  verify->add_option("--max-3d-cells", verify_args.max_3d_cells,
                     "cell cap for 3d enumeration");
  verify->add_flag("--self-test-perturb", verify_args.perturb,
                   "perturb a closed form to prove the checks can fail")
      ->group("");  // testing hook, hidden from help
  add_format_flags(verify, verify_args.fmt);

  AsymptArgs asympt_args;
  CLI::App* asympt = app.add_subcommand(
      "asympt", "growth constants from the dominant denominator root");
  asympt->add_option("m", asympt_args.m, "strip height")->required();
  asympt->add_option("k", asympt_args.k, "tile length")->required();
  asympt->add_option("--kind", asympt_args.kind, "plain|mixed|brick")
      ->check(CLI::IsMember({"plain", "mixed", "brick"}));
  asympt->add_option("--nmax", asympt_args.n_max,
                     "empirical-ratio position (default 20k)");
  asympt->add_option("--tol", asympt_args.tol, "root bracket width");
  add_format_flags(asympt, asympt_args.fmt);

  OeisArgs oeis_args;
  CLI::App* oeis_cmd = app.add_subcommand(
      "oeis-verify", "compare a closed form against an OEIS b-file");
  oeis_cmd->add_option("id", oeis_args.id, "OEIS identifier, e.g. A001835")->required();
  oeis_cmd->add_option("m", oeis_args.m, "strip height")->required();
  oeis_cmd->add_option("k", oeis_args.k, "tile length")->required();
  oeis_cmd->add_option("--bfile", oeis_args.bfile, "local b-file path");
  oeis_cmd->add_flag("--fetch", oeis_args.fetch,
                     "fetch <base-url>/<id>/b<digits>.txt with a local cache");
  oeis_cmd->add_option("--cache-dir", oeis_args.cache_dir,
                       "cache directory (default $OEIS_CACHE_DIR or ./oeis-cache)");
  oeis_cmd->add_option("--base-url", oeis_args.base_url, "fetch base URL");
  int shift_value = 0;
  CLI::Option* shift_opt =
      oeis_cmd->add_option("--shift", shift_value,
                           "index shift: reference i maps to n = k*(i+shift) "
                           "(default: auto-detect)");
  oeis_cmd->add_option("--min-terms", oeis_args.min_terms,
                       "minimum compared terms for a pass");
  add_format_flags(oeis_cmd, oeis_args.fmt);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tilegf");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    json rec;
    rec["error"] = {{"kind", "UsageError"}, {"message", e.what()}};
    err << rec.dump(2) << "\n";
    return kExitValidation;
  }

  try {
    if (count->parsed()) return run_count(count_args, out);
    if (series->parsed()) return run_series(series_args, out);
    if (refine->parsed()) return run_refine(refine_args, out);
    if (verify->parsed()) return run_verify(verify_args, out);
    if (asympt->parsed()) return run_asympt(asympt_args, out);
    if (oeis_cmd->parsed()) {
      if (shift_opt->count() > 0) oeis_args.shift = shift_value;
      return run_oeis_verify(oeis_args, out);
    }
  } catch (const Error& e) {
    json rec;
    rec["error"] = {{"kind", e.kind()}, {"message", e.message()}};
    err << rec.dump(2) << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    json rec;
    rec["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
    err << rec.dump(2) << "\n";
    return kExitParseIo;
  }
  return kExitValidation;
}

}  // namespace tilegf::cli
