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

#include "chorealloc/cost_oracles.hpp"

#include <algorithm>
#include <sstream>

#include "chorealloc/errors.hpp"

namespace chorealloc {
namespace {

std::int64_t OverCap(std::size_t count, std::int64_t cap) {
  return std::max<std::int64_t>(0, static_cast<std::int64_t>(count) - cap);
}

std::string MaskToString(std::uint32_t mask, std::size_t num_chores,
                         std::span<const std::string> labels) {
  std::string out = "{";
  bool first = true;
  for (std::size_t o = 0; o < num_chores; ++o) {
    if (!(mask >> o & 1u)) continue;
    if (!first) out += ",";
    first = false;
    out += o < labels.size() ? labels[o] : "#" + std::to_string(o);
  }
  return out + "}";
}

}  // namespace

void CostOracle::CheckDomain(const ChoreSet& bundle) const {
  if (bundle.size() != ground_size_) {
    Fail(ErrorKind::kDomain, "set over " + std::to_string(bundle.size()) +
                                 " chores passed to an oracle over " +
                                 std::to_string(ground_size_));
  }
}

void CostOracle::CheckChore(std::size_t chore) const {
  if (chore >= ground_size_) {
    Fail(ErrorKind::kDomain, "chore " + std::to_string(chore) +
                                 " outside the oracle's ground set of " +
                                 std::to_string(ground_size_));
  }
}

std::int64_t CostOracle::Cost(const ChoreSet& bundle) const {
  CheckDomain(bundle);
  return EvaluateCost(bundle);
}

std::int64_t CostOracle::Marginal(const ChoreSet& bundle,
                                  std::size_t chore) const {
  CheckDomain(bundle);
  CheckChore(chore);
  if (bundle.test(chore)) {
    Fail(ErrorKind::kContractViolation,
         "marginal of chore " + std::to_string(chore) +
             " against a bundle that already contains it");
  }
  return EvaluateCost(With(bundle, chore)) - EvaluateCost(bundle);
}

std::int64_t CostOracle::Rank(const ChoreSet& bundle) const {
  return static_cast<std::int64_t>(bundle.count()) - Cost(bundle);
}

bool CostOracle::IsZeroCostAddable(const ChoreSet& bundle,
                                   std::size_t chore) const {
  CheckDomain(bundle);
  CheckChore(chore);
  if (bundle.test(chore)) {
    Fail(ErrorKind::kContractViolation,
         "chore " + std::to_string(chore) + " is already in the bundle");
  }
  if (EvaluateCost(bundle) != 0) {
    Fail(ErrorKind::kContractViolation,
         "independence test on a bundle with nonzero cost");
  }
  const std::int64_t after = EvaluateCost(With(bundle, chore));
  if (after != 0 && after != 1) {
    Fail(ErrorKind::kOracleContract,
         "marginal cost " + std::to_string(after) + " of chore " +
             std::to_string(chore) + " is not in {0, 1}");
  }
  return after == 0;
}

ApprovalCapCost::ApprovalCapCost(ChoreSet approved, std::int64_t cap)
    : CostOracle(approved.size()), approved_(std::move(approved)), cap_(cap) {
  if (cap_ < 0) {
    Fail(ErrorKind::kValidation, "approval cap must be nonnegative");
  }
}

std::int64_t ApprovalCapCost::EvaluateCost(const ChoreSet& bundle) const {
  const std::size_t inside = (bundle & approved_).count();
  const std::size_t outside = bundle.count() - inside;
  return OverCap(inside, cap_) + static_cast<std::int64_t>(outside);
}

PartitionCapCost::PartitionCapCost(std::size_t num_chores,
                                   std::vector<Category> categories)
    : CostOracle(num_chores),
      categories_(std::move(categories)),
      covered_(num_chores) {
  for (std::size_t j = 0; j < categories_.size(); ++j) {
    const Category& category = categories_[j];
    if (category.chores.size() != num_chores) {
      Fail(ErrorKind::kValidation,
           "category " + std::to_string(j) + " is over the wrong chore set");
    }
    if (category.cap < 0) {
      Fail(ErrorKind::kValidation,
           "category " + std::to_string(j) + " has a negative cap");
    }
    if (covered_.intersects(category.chores)) {
      Fail(ErrorKind::kValidation,
           "category " + std::to_string(j) + " overlaps an earlier category");
    }
    covered_ |= category.chores;
  }
}

std::int64_t PartitionCapCost::EvaluateCost(const ChoreSet& bundle) const {
  std::int64_t total = 0;
  std::size_t inside = 0;
  for (const Category& category : categories_) {
    const std::size_t count = (bundle & category.chores).count();
    inside += count;
    total += OverCap(count, category.cap);
  }
  return total + static_cast<std::int64_t>(bundle.count() - inside);
}

ExplicitCost::ExplicitCost(std::size_t num_chores,
                           std::vector<std::int64_t> table)
    : CostOracle(num_chores), table_(std::move(table)) {
  if (auto violation = ValidateBinarySupermodular(num_chores, table_)) {
    Fail(ErrorKind::kValidation, violation->Describe());
  }
}

ExplicitCost ExplicitCost::Tabulate(const CostOracle& other) {
  const std::size_t m = other.ground_size();
  if (m > kMaxExplicitChores) {
    Fail(ErrorKind::kMalformedTable,
         "cannot tabulate an oracle over " + std::to_string(m) + " chores");
  }
  std::vector<std::int64_t> table(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = other.Cost(ChoreSet(m, mask));
  }
  return ExplicitCost(m, std::move(table));
}

std::int64_t ExplicitCost::EvaluateCost(const ChoreSet& bundle) const {
  return table_[bundle.to_ulong()];
}

std::string AxiomViolation::Describe(std::span<const std::string> labels) const {
  const std::size_t width = kMaxExplicitChores;
  const std::string chore_name = chore < labels.size()
                                     ? labels[chore]
                                     : "#" + std::to_string(chore);
  std::ostringstream out;
  switch (axiom) {
    case Axiom::kEmptySetCost:
      out << "empty-set axiom violated: cost of the empty set is "
          << marginal_subset;
      break;
    case Axiom::kBinaryMarginal:
      out << "binary-marginal axiom violated: marginal cost of " << chore_name << " at S="
          << MaskToString(subset, width, labels) << " is " << marginal_subset;
      break;
    case Axiom::kSupermodularity:
      out << "supermodularity violated: marginal cost of " << chore_name << " is "
          << marginal_subset << " at S=" << MaskToString(subset, width, labels)
          << " but " << marginal_superset
          << " at T=" << MaskToString(superset, width, labels);
      break;
  }
  return out.str();
}

std::optional<AxiomViolation> ValidateBinarySupermodular(
    std::size_t num_chores, std::span<const std::int64_t> table) {
  if (num_chores > kMaxExplicitChores) {
    Fail(ErrorKind::kMalformedTable,
         "explicit tables support at most " +
             std::to_string(kMaxExplicitChores) + " chores");
  }
  const std::size_t size = std::size_t{1} << num_chores;
  if (table.size() != size) {
    Fail(ErrorKind::kMalformedTable,
         "table has " + std::to_string(table.size()) + " entries, expected " +
             std::to_string(size));
  }
  using Axiom = AxiomViolation::Axiom;
  if (table[0] != 0) {
    return AxiomViolation{.axiom = Axiom::kEmptySetCost,
                          .marginal_subset = table[0]};
  }
  for (std::uint32_t s = 0; s < size; ++s) {
    for (std::size_t o = 0; o < num_chores; ++o) {
      const std::uint32_t bit = 1u << o;
      if (s & bit) continue;
      const std::int64_t delta = table[s | bit] - table[s];
      if (delta != 0 && delta != 1) {
        return AxiomViolation{.axiom = Axiom::kBinaryMarginal,
                              .subset = s,
                              .superset = s,
                              .chore = o,
                              .marginal_subset = delta,
                              .marginal_superset = delta};
      }
    }
  }
  for (std::uint32_t s = 0; s < size; ++s) {
    for (std::size_t extra = 0; extra < num_chores; ++extra) {
      const std::uint32_t t = s | (1u << extra);
      if (t == s) continue;
      for (std::size_t o = 0; o < num_chores; ++o) {
        const std::uint32_t bit = 1u << o;
        if (t & bit) continue;
        const std::int64_t at_s = table[s | bit] - table[s];
        const std::int64_t at_t = table[t | bit] - table[t];
        if (at_s > at_t) {
          return AxiomViolation{.axiom = Axiom::kSupermodularity,
                                .subset = s,
                                .superset = t,
                                .chore = o,
                                .marginal_subset = at_s,
                                .marginal_superset = at_t};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace chorealloc
