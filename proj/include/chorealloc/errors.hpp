// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHOREALLOC_ERRORS_HPP_
#define CHOREALLOC_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chorealloc {

enum class ErrorKind {
  kMalformedAllocation,
  kDomain,
  kContractViolation,
  kOracleContract,
  kConfiguration,
  kBudgetExceeded,
  kMalformedTable,
  kParse,
  kValidation,
  kInternal,
};

const char* ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// the C API can map it onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the brute-force enumerators before any work is done.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);

  // Saturates at UINT64_MAX when the true count does not fit.
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string& message);

}  // namespace chorealloc

#endif  // CHOREALLOC_ERRORS_HPP_
