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

#ifndef TILEGF_OEIS_HPP
#define TILEGF_OEIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilegf/bigint.hpp"

namespace tilegf::oeis {

/// A reference sequence parsed from an OEIS b-file ("index value" lines,
/// '#' comments and blank lines ignored). Indices are strictly increasing.
struct RefSequence {
  std::string id;      // e.g. "A001835"
  std::string source;  // local path or fetch URL
  std::vector<std::pair<long, BigInt>> entries;
};

/// Parse b-file text. Throws ParseError (with line number) on malformed
/// lines or non-increasing indices.
std::vector<std::pair<long, BigInt>> parse_bfile(const std::string& text);

/// Read and parse a local b-file.
RefSequence load_bfile(const std::string& id, const std::string& path);

enum class Verdict { match, mismatch, missing };

struct IndexVerdict {
  long index = 0;   // reference index
  int n = 0;        // mapped coefficient position (k * (index + shift))
  Verdict verdict = Verdict::missing;
  BigInt expected;  // reference value
  BigInt computed;  // meaningful for match/mismatch
};

struct SequenceReport {
  std::string id;
  int aligned_shift = 0;  // reference index i maps to n = k * (i + shift)
  int min_count = 10;
  int compared = 0;
  int matches = 0;
  std::vector<IndexVerdict> verdicts;
  bool pass = false;
};

/// Compare a reference sequence against computed series coefficients
/// c_0..c_N (indexed by column count n). Reference index i maps to
/// n = k * (i + shift). When shift is not supplied it is auto-detected by
/// matching the first three nonzero computed terms against the reference
/// over shifts in {-2..2}; zero or multiple surviving shifts raise
/// AlignmentAmbiguous — never a silent guess. pass requires every compared
/// index to match and at least min_count comparisons.
SequenceReport compare(const RefSequence& ref,
                       const std::vector<BigInt>& computed, int k,
                       std::optional<int> shift = std::nullopt,
                       int min_count = 10);

/// Fetch a b-file over HTTP with a local cache, keyed by identifier. The
/// cache directory comes from the OEIS_CACHE_DIR environment variable when
/// set. Network access is an explicit opt-in; nothing in the test suite
/// uses it.
RefSequence fetch_bfile(const std::string& id, const std::string& cache_dir,
                        const std::string& base_url = "http://oeis.org");

/// Cache directory resolution: explicit flag value, else OEIS_CACHE_DIR,
/// else "./oeis-cache".
std::string default_cache_dir(const std::string& flag_value = "");

}  // namespace tilegf::oeis

#endif  // TILEGF_OEIS_HPP
