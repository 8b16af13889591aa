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

#include "chorealloc/commands.hpp"

#include <algorithm>
#include <cmath>

namespace chorealloc {
namespace {

std::string ValueToText(const CriterionValue& value) {
  std::string out = "(";
  for (std::size_t k = 0; k < value.size(); ++k) {
    if (k) out += ", ";
    out += value[k].ToString();
  }
  return out + ")";
}

}  // namespace

ResultDocument Solve(const Instance& instance, CriterionKind kind,
                     std::optional<double> p, bool include_trace) {
  const auto criterion = MakeCriterion(kind, p);
  const auto gain = MakeGain(kind, p);
  const YankeeSwapResult result = RunGeneralYankeeSwap(instance, *gain);
  ResultDocument doc =
      MakeResultDocument(instance, result, *criterion, p, include_trace);
  if (auto problem = CheckResultDocument(instance, doc)) {
    Fail(ErrorKind::kInternal, "result document check failed: " + *problem);
  }
  return doc;
}

bool CriterionValuesMatch(const CriterionValue& a, const CriterionValue& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_exact() && b[k].is_exact()) {
      if (a[k].exact() != b[k].exact()) return false;
      continue;
    }
    const double x = a[k].ToDouble();
    const double y = b[k].ToDouble();
    const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    if (std::fabs(x - y) > 1e-9 * scale) return false;
  }
  return true;
}

std::string VerifyReport::ToText() const {
  return "criterion: " + criterion + "\nsolver: " + ValueToText(solver_value) +
         "\noracle: " + ValueToText(oracle_value) +
         "\nenumerated: " + std::to_string(enumerated) + "\n" +
         (passed ? "PASS" : "FAIL") + "\n";
}

VerifyReport Verify(const Instance& instance, CriterionKind kind,
                    std::optional<double> p, const EnumerationBudget& budget,
                    const GainFunction* gain_override) {
  const auto criterion = MakeCriterion(kind, p);
  const std::uint64_t required =
      SaturatingPow(instance.num_agents(), instance.num_chores());
  if (required > budget.max_allocations) {
    throw BudgetExceeded(required, budget.max_allocations);
  }
  std::unique_ptr<GainFunction> built_in;
  if (gain_override == nullptr) built_in = MakeGain(kind, p);
  const GainFunction& gain = gain_override ? *gain_override : *built_in;
  const YankeeSwapResult solved = RunGeneralYankeeSwap(instance, gain);
  const BruteForceResult oracle = BruteForceOptimal(instance, *criterion, budget);

  VerifyReport report;
  report.criterion = criterion->name();
  report.solver_value = criterion->Value(
      ComputeUtilities(instance, solved.allocation), instance.weights());
  report.oracle_value = oracle.value;
  report.enumerated = oracle.visited;
  report.passed = CriterionValuesMatch(report.solver_value, report.oracle_value);
  return report;
}

}  // namespace chorealloc
