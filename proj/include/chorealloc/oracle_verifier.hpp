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

#ifndef CHOREALLOC_ORACLE_VERIFIER_HPP_
#define CHOREALLOC_ORACLE_VERIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chorealloc/core_model.hpp"
#include "chorealloc/yankee_swap.hpp"

namespace chorealloc {

struct EnumerationBudget {
  std::uint64_t max_allocations = 2'000'000;
  std::uint64_t max_subsets = std::uint64_t{1} << kMaxExplicitChores;
};

// base^exponent, saturating at UINT64_MAX.
std::uint64_t SaturatingPow(std::uint64_t base, std::uint64_t exponent);

struct BruteForceResult {
  CriterionValue value;
  Allocation witness;
  UtilityVector utilities;
  std::uint64_t visited = 0;
};

// Enumerates all n^m complete allocations in mixed-radix order (chore 0 is
// the least significant digit) and returns the first criterion-maximal one.
// Throws BudgetExceeded when n^m > budget.max_allocations.
BruteForceResult BruteForceOptimal(const Instance& instance,
                                   const JusticeCriterion& criterion,
                                   const EnumerationBudget& budget = {});

// Largest number of allocated chores over all (n+1)^m partial allocations
// whose bundles all have cost zero. Throws BudgetExceeded when
// (n+1)^m > budget.max_allocations.
std::size_t BruteForceMaxCleanSize(const Instance& instance,
                                   const EnumerationBudget& budget = {});

// A replayable failure of one of the sufficient conditions.
struct Counterexample {
  std::string condition;  // "C1", "G1" or "G2"
  UtilityVector x;
  UtilityVector y;
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<Rational> weights;
  GainVector gain_i;
  GainVector gain_j;
  std::string detail;
};

struct VectorPair {
  UtilityVector x;
  UtilityVector y;
};

struct AgentPairProbe {
  UtilityVector x;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct GainMonotonicityProbe {
  UtilityVector x;
  UtilityVector y;
  std::size_t i = 0;
};

// Pareto dominance: for pairs where x dominates y entrywise, x must be at
// least as good as y, and equally good only when x == y. Pairs where neither
// dominates are skipped.
std::optional<Counterexample> CheckC1(const JusticeCriterion& criterion,
                                      std::span<const Rational> weights,
                                      std::span<const VectorPair> pairs);

// With y = x - e_i and z = x - e_j: phi(x, i) >= phi(x, j) implies y is at
// least as good as z, with equality iff the gains are equal.
std::optional<Counterexample> CheckG1(const GainFunction& gain,
                                      const JusticeCriterion& criterion,
                                      std::span<const Rational> weights,
                                      std::span<const AgentPairProbe> probes);

// x_i >= y_i implies phi(x, i) >= phi(y, i), equal when x_i == y_i.
std::optional<Counterexample> CheckG2(
    const GainFunction& gain, std::span<const Rational> weights,
    std::span<const GainMonotonicityProbe> probes);

// All vectors in {floor, ..., 0}^n in lexicographic order.
std::vector<UtilityVector> UtilityGrid(std::size_t num_agents,
                                       std::int64_t floor);
// All weight vectors drawn from `values`, n entries each.
std::vector<std::vector<Rational>> WeightGrid(std::size_t num_agents,
                                              std::span<const Rational> values);

struct GridReport {
  std::uint64_t checks = 0;
  std::optional<Counterexample> counterexample;
};

// Runs C1 (every dominated pair), G1 (every x, i, j) and G2 (every x, y, i)
// on the grid of utility vectors down to `floor` and all weight vectors over
// `weight_values`, for n = 1..max_agents. Stops at the first counterexample.
// `gain` may be null to run only C1.
GridReport CheckConditionsOnGrid(const GainFunction* gain,
                                 const JusticeCriterion& criterion,
                                 std::size_t max_agents, std::int64_t floor,
                                 std::span<const Rational> weight_values);

}  // namespace chorealloc

#endif  // CHOREALLOC_ORACLE_VERIFIER_HPP_
