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

#ifndef TILEGF_ERRORS_HPP
#define TILEGF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tilegf {

// Process exit codes used by the CLI. Library errors carry the code they
// should map to so the CLI does not need a type switch.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,  // domain/regime/argument errors
  kExitBudget = 3,      // work budget exceeded
  kExitVerification = 4,
  kExitParseIo = 5,
};

class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string msg, int exit_code)
      : std::runtime_error(kind + ": " + msg),
        kind_(std::move(kind)),
        message_(std::move(msg)),
        exit_code_(exit_code) {}

  const std::string& kind() const { return kind_; }
  const std::string& message() const { return message_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string kind_;
  std::string message_;
  int exit_code_;
};

#define TILEGF_DEFINE_ERROR(Name, Code)                      \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& msg)                    \
        : Error(#Name, msg, Code) {}                         \
  }

TILEGF_DEFINE_ERROR(ValidationError, kExitValidation);
TILEGF_DEFINE_ERROR(RegimeMismatch, kExitValidation);
TILEGF_DEFINE_ERROR(UnnormalizedGF, kExitValidation);
TILEGF_DEFINE_ERROR(ZeroConstantTerm, kExitValidation);
TILEGF_DEFINE_ERROR(NonzeroConstant, kExitValidation);
TILEGF_DEFINE_ERROR(OddArea, kExitValidation);
TILEGF_DEFINE_ERROR(RoundingUnsafe, kExitValidation);
TILEGF_DEFINE_ERROR(NoRootInUnitInterval, kExitValidation);
TILEGF_DEFINE_ERROR(BudgetExceeded, kExitBudget);
TILEGF_DEFINE_ERROR(AlignmentAmbiguous, kExitVerification);
TILEGF_DEFINE_ERROR(ParseError, kExitParseIo);
TILEGF_DEFINE_ERROR(IoError, kExitParseIo);

#undef TILEGF_DEFINE_ERROR

}  // namespace tilegf

#endif  // TILEGF_ERRORS_HPP
