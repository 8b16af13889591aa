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

#ifndef CHOREALLOC_COMMANDS_HPP_
#define CHOREALLOC_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "chorealloc/io.hpp"
#include "chorealloc/oracle_verifier.hpp"
#include "chorealloc/yankee_swap.hpp"

namespace chorealloc {

// Solves with the gain paired to `kind` and packages the result document.
ResultDocument Solve(const Instance& instance, CriterionKind kind,
                     std::optional<double> p, bool include_trace);

struct VerifyReport {
  std::string criterion;
  CriterionValue solver_value;
  CriterionValue oracle_value;
  std::uint64_t enumerated = 0;
  bool passed = false;

  std::string ToText() const;
};

// Exact equality for exact values; |a - b| <= 1e-9 * max(1, |a|, |b|) when
// either side is floating point.
bool CriterionValuesMatch(const CriterionValue& a, const CriterionValue& b);

// Runs the solver and the brute-force oracle and compares criterion values.
// `gain_override` replaces the criterion's built-in gain (test fixtures).
// Throws BudgetExceeded before solving if enumeration is too large.
VerifyReport Verify(const Instance& instance, CriterionKind kind,
                    std::optional<double> p, const EnumerationBudget& budget,
                    const GainFunction* gain_override = nullptr);

}  // namespace chorealloc

#endif  // CHOREALLOC_COMMANDS_HPP_
