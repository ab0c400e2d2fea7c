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

#ifndef TILEGF_CLI_HPP
#define TILEGF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tilegf::cli {

/// Entry point shared by the binary and the tests. args excludes the
/// program name. Identical invocations produce identical output bytes:
/// stable key order, counts as decimal strings, no timestamps.
///
/// Exit codes: 0 success, 2 regime/validation error, 3 budget exceeded,
/// 4 verification failure, 5 parse/IO error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tilegf::cli

#endif  // TILEGF_CLI_HPP
