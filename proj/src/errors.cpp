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

#include "chorealloc/errors.hpp"

namespace chorealloc {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedAllocation:
      return "malformed allocation";
    case ErrorKind::kDomain:
      return "domain error";
    case ErrorKind::kContractViolation:
      return "contract violation";
    case ErrorKind::kOracleContract:
      return "oracle contract violation";
    case ErrorKind::kConfiguration:
      return "configuration error";
    case ErrorKind::kBudgetExceeded:
      return "budget exceeded";
    case ErrorKind::kMalformedTable:
      return "malformed table";
    case ErrorKind::kParse:
      return "parse error";
    case ErrorKind::kValidation:
      return "validation error";
    case ErrorKind::kInternal:
      return "internal error";
  }
  return "unknown error";
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : Error(ErrorKind::kBudgetExceeded,
            "enumeration requires " + std::to_string(required) +
                " allocations but the budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace chorealloc
