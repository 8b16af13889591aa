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

#ifndef CHOREALLOC_COST_ORACLES_HPP_
#define CHOREALLOC_COST_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chorealloc/chore_set.hpp"

namespace chorealloc {

// A binary supermodular cost function over the chores 0..ground_size()-1:
//   cost({}) = 0,
//   cost(S + o) - cost(S) in {0, 1},
//   cost(S + o) - cost(S) <= cost(T + o) - cost(T) whenever S is a subset of T.
// Equivalently rank(S) = |S| - cost(S) is a matroid rank function whose
// independent sets are the zero-cost bundles.
//
// Implementations must be pure; the library queries them from any thread.
class CostOracle {
 public:
  explicit CostOracle(std::size_t ground_size) : ground_size_(ground_size) {}
  virtual ~CostOracle() = default;

  std::size_t ground_size() const { return ground_size_; }

  // Throws Error(kDomain) when `bundle` is not over this ground set.
  std::int64_t Cost(const ChoreSet& bundle) const;

  // cost(bundle + chore) - cost(bundle). Requires chore not in bundle.
  std::int64_t Marginal(const ChoreSet& bundle, std::size_t chore) const;

  std::int64_t Rank(const ChoreSet& bundle) const;

  // Independence test of the dual matroid. Requires cost(bundle) = 0 and
  // chore not in bundle; throws Error(kOracleContract) if cost(bundle + chore)
  // falls outside {0, 1}.
  bool IsZeroCostAddable(const ChoreSet& bundle, std::size_t chore) const;

  virtual std::string_view family() const = 0;

 protected:
  CostOracle(const CostOracle&) = default;
  CostOracle& operator=(const CostOracle&) = default;

  virtual std::int64_t EvaluateCost(const ChoreSet& bundle) const = 0;

 private:
  void CheckDomain(const ChoreSet& bundle) const;
  void CheckChore(std::size_t chore) const;

  std::size_t ground_size_;
};

// cost(S) = max(0, |S & approved| - cap) + |S \ approved|.
class ApprovalCapCost final : public CostOracle {
 public:
  ApprovalCapCost(ChoreSet approved, std::int64_t cap);

  const ChoreSet& approved() const { return approved_; }
  std::int64_t cap() const { return cap_; }
  std::string_view family() const override { return "approval_cap"; }

 protected:
  std::int64_t EvaluateCost(const ChoreSet& bundle) const override;

 private:
  ChoreSet approved_;
  std::int64_t cap_;
};

// cost(S) = sum_j max(0, |S & C_j| - cap_j) + |S \ (C_1 | ... | C_t)| for
// pairwise disjoint categories C_j.
class PartitionCapCost final : public CostOracle {
 public:
  struct Category {
    ChoreSet chores;
    std::int64_t cap = 0;
  };

  PartitionCapCost(std::size_t num_chores, std::vector<Category> categories);

  const std::vector<Category>& categories() const { return categories_; }
  std::string_view family() const override { return "partition_cap"; }

 protected:
  std::int64_t EvaluateCost(const ChoreSet& bundle) const override;

 private:
  std::vector<Category> categories_;
  ChoreSet covered_;
};

inline constexpr std::size_t kMaxExplicitChores = 20;

// One cost value per subset, indexed by the subset's bitmask (bit o set iff
// chore o is in the subset). Validated on construction.
class ExplicitCost final : public CostOracle {
 public:
  ExplicitCost(std::size_t num_chores, std::vector<std::int64_t> table);

  // Evaluates `other` on every subset of its ground set.
  static ExplicitCost Tabulate(const CostOracle& other);

  const std::vector<std::int64_t>& table() const { return table_; }
  std::string_view family() const override { return "explicit"; }

 protected:
  std::int64_t EvaluateCost(const ChoreSet& bundle) const override;

 private:
  std::vector<std::int64_t> table_;
};

struct AxiomViolation {
  enum class Axiom {
    kEmptySetCost,     // cost({}) != 0
    kBinaryMarginal,   // cost(S + o) - cost(S) not in {0, 1}
    kSupermodularity,  // marginal(S, o) > marginal(T, o) for T = S + o'
  };

  Axiom axiom = Axiom::kEmptySetCost;
  std::uint32_t subset = 0;    // S as a bitmask
  std::uint32_t superset = 0;  // T as a bitmask; equals S except for
                               // supermodularity
  std::size_t chore = 0;       // o
  std::int64_t marginal_subset = 0;
  std::int64_t marginal_superset = 0;

  // Human-readable report; labels are used for chore names when non-empty.
  std::string Describe(std::span<const std::string> labels = {}) const;
};

// Checks the three axioms exhaustively. Supermodularity is checked only for
// single-element supersets T = S + o', which implies the general statement.
// Returns the first violation in the order empty set, then binary marginals
// by ascending mask and chore, then supermodularity by ascending mask, extra
// chore and chore.
// Throws Error(kMalformedTable) when table.size() != 2^num_chores or
// num_chores > kMaxExplicitChores.
std::optional<AxiomViolation> ValidateBinarySupermodular(
    std::size_t num_chores, std::span<const std::int64_t> table);

}  // namespace chorealloc

#endif  // CHOREALLOC_COST_ORACLES_HPP_
