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

#include "tilegf/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "tilegf/errors.hpp"

namespace tilegf::oeis {

namespace {

bool parse_integer(const std::string& tok, BigInt& out) {
  if (tok.empty()) return false;
  size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size()) return false;
  for (size_t i = start; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  out = BigInt(tok);
  return true;
}

bool parse_index(const std::string& tok, long& out) {
  BigInt v;
  if (!parse_integer(tok, v)) return false;
  if (!v.fits_slong_p()) return false;
  out = v.get_si();
  return true;
}

}  // namespace

std::vector<std::pair<long, BigInt>> parse_bfile(const std::string& text) {
  std::vector<std::pair<long, BigInt>> entries;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;        // blank
    if (first[0] == '#') continue;       // comment
    std::string second, extra;
    if (!(ls >> second) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected exactly two fields");
    long index = 0;
    BigInt value;
    if (!parse_index(first, index) || !parse_integer(second, value))
      throw ParseError("line " + std::to_string(line_no) +
                       ": fields must be integers");
    if (!entries.empty() && index <= entries.back().first)
      throw ParseError("line " + std::to_string(line_no) +
                       ": indices must be strictly increasing");
    entries.emplace_back(index, std::move(value));
  }
  return entries;
}

RefSequence load_bfile(const std::string& id, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open b-file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  RefSequence ref;
  ref.id = id;
  ref.source = path;
  ref.entries = parse_bfile(buf.str());
  return ref;
}

SequenceReport compare(const RefSequence& ref,
                       const std::vector<BigInt>& computed, int k,
                       std::optional<int> shift, int min_count) {
  if (k < 1) throw ValidationError("k must be >= 1");
  SequenceReport report;
  report.id = ref.id;
  report.min_count = min_count;

  const int max_n = static_cast<int>(computed.size()) - 1;
  auto ref_value = [&ref](long index) -> const BigInt* {
    auto it = std::lower_bound(
        ref.entries.begin(), ref.entries.end(), index,
        [](const auto& e, long i) { return e.first < i; });
    if (it == ref.entries.end() || it->first != index) return nullptr;
    return &it->second;
  };

  int use_shift = 0;
  if (shift.has_value()) {
    use_shift = *shift;
  } else {
    // Probe: the first three nonzero computed coefficients must all be
    // found in the reference at the shifted index.
    std::vector<std::pair<int, const BigInt*>> probes;  // (n, value)
    for (int n = 0; n <= max_n && probes.size() < 3; ++n)
      if (computed[static_cast<size_t>(n)] != 0)
        probes.emplace_back(n, &computed[static_cast<size_t>(n)]);
    if (probes.size() < 3)
      throw AlignmentAmbiguous(
          "fewer than three nonzero computed terms to probe with");
    std::vector<int> valid;
    for (int s = -2; s <= 2; ++s) {
      bool all = true;
      for (const auto& [n, v] : probes) {
        if (n % k != 0) { all = false; break; }
        long index = n / k - s;
        const BigInt* rv = ref_value(index);
        if (rv == nullptr || *rv != *v) { all = false; break; }
      }
      if (all) valid.push_back(s);
    }
    if (valid.size() != 1)
      throw AlignmentAmbiguous(
          valid.empty() ? "no shift in {-2..2} matches the probe terms"
                        : "multiple shifts match the probe terms");
    use_shift = valid.front();
  }
  report.aligned_shift = use_shift;

  for (const auto& [index, expected] : ref.entries) {
    IndexVerdict v;
    v.index = index;
    v.expected = expected;
    long n = k * (index + use_shift);
    v.n = static_cast<int>(n);
    if (n < 0 || n > max_n) {
      v.verdict = Verdict::missing;
    } else {
      v.computed = computed[static_cast<size_t>(n)];
      v.verdict = (v.computed == expected) ? Verdict::match : Verdict::mismatch;
      ++report.compared;
      if (v.verdict == Verdict::match) ++report.matches;
    }
    report.verdicts.push_back(std::move(v));
  }
  report.pass =
      report.compared >= min_count && report.matches == report.compared;
  return report;
}

std::string default_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("OEIS_CACHE_DIR"); env && *env)
    return env;
  return "./oeis-cache";
}

RefSequence fetch_bfile(const std::string& id, const std::string& cache_dir,
                        const std::string& base_url) {
  if (id.size() < 2 || id[0] != 'A')
    throw ValidationError("OEIS id must look like A001835");
  std::string bname = "b" + id.substr(1) + ".txt";
  std::filesystem::path cached = std::filesystem::path(cache_dir) / bname;
  if (std::filesystem::exists(cached)) {
    RefSequence ref = load_bfile(id, cached.string());
    ref.source = cached.string();
    return ref;
  }

  httplib::Client client(base_url);
  client.set_follow_location(true);
  std::string path = "/" + id + "/" + bname;
  auto res = client.Get(path);
  if (!res || res->status != 200)
    throw IoError("fetch of " + base_url + path + " failed" +
                  (res ? " with status " + std::to_string(res->status) : ""));

  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::ofstream out(cached);
  if (!out) throw IoError("cannot write cache file " + cached.string());
  out << res->body;
  out.close();

  RefSequence ref;
  ref.id = id;
  ref.source = base_url + path;
  ref.entries = parse_bfile(res->body);
  return ref;
}

}  // namespace tilegf::oeis
