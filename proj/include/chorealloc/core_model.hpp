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

#ifndef CHOREALLOC_CORE_MODEL_HPP_
#define CHOREALLOC_CORE_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chorealloc/chore_set.hpp"
#include "chorealloc/cost_oracles.hpp"
#include "chorealloc/errors.hpp"
#include "chorealloc/rational.hpp"

namespace chorealloc {

// Agents are 0..n-1 and chores 0..m-1. Labels only matter for I/O.
struct Agent {
  Rational weight;
  std::shared_ptr<const CostOracle> cost;
};

class Instance {
 public:
  // Throws Error(kValidation) unless n >= 1, every weight is positive, labels
  // are distinct and non-empty, and every oracle is over exactly the m chores.
  Instance(std::vector<std::string> chore_labels, std::vector<Agent> agents);

  std::size_t num_agents() const { return agents_.size(); }
  std::size_t num_chores() const { return labels_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t chore) const { return labels_[chore]; }
  std::optional<std::size_t> FindChore(const std::string& label) const;

  const Rational& weight(std::size_t agent) const { return weights_[agent]; }
  std::span<const Rational> weights() const { return weights_; }
  const CostOracle& oracle(std::size_t agent) const {
    return *agents_[agent].cost;
  }
  const std::vector<Agent>& agents() const { return agents_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Agent> agents_;
  std::vector<Rational> weights_;
};

// "o1", "o2", ..., "om".
std::vector<std::string> DefaultLabels(std::size_t num_chores);

inline constexpr int kPool = -1;

// An (n+1)-partition of the chores, stored as an owner per chore; kPool marks
// the unallocated bundle X_0. Immutable.
class Allocation {
 public:
  // Everything unallocated.
  Allocation(std::size_t num_agents, std::size_t num_chores);

  // Throws Error(kMalformedAllocation) if an owner is outside [-1, n).
  static Allocation FromOwners(std::size_t num_agents, std::vector<int> owners);

  // bundles[i] lists agent i's chores; chores nobody lists go to the pool.
  // Throws Error(kMalformedAllocation) on a wrong bundle count, an unknown
  // chore index or a chore listed twice.
  static Allocation FromBundles(
      std::size_t num_agents, std::size_t num_chores,
      const std::vector<std::vector<std::size_t>>& bundles);

  std::size_t num_agents() const { return num_agents_; }
  std::size_t num_chores() const { return owners_.size(); }

  int owner(std::size_t chore) const { return owners_[chore]; }
  std::span<const int> owners() const { return owners_; }

  ChoreSet bundle(std::size_t agent) const;
  ChoreSet pool() const;
  std::size_t allocated_count() const;
  bool is_complete() const { return allocated_count() == num_chores(); }

  Allocation WithOwner(std::size_t chore, int owner) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  Allocation(std::size_t num_agents, std::vector<int> owners)
      : num_agents_(num_agents), owners_(std::move(owners)) {}

  std::size_t num_agents_;
  std::vector<int> owners_;
};

// Throws Error(kMalformedAllocation) when the shapes disagree.
void CheckCompatible(const Instance& instance, const Allocation& allocation);

// Agent i receives clean_i | supplementary_i. Throws
// Error(kMalformedAllocation) if a chore is held by an agent in both.
Allocation Combine(const Allocation& clean, const Allocation& supplementary);

// X = X0 | X1 with c_i(X0_i) = 0 and c_i(X_i) = |X1_i|.
struct Decomposition {
  Allocation clean;
  Allocation supplementary;

  Allocation Combined() const { return Combine(clean, supplementary); }
};

// Returns a description of the first failed condition (disjointness, zero
// clean cost, cost equals supplementary size), or nullopt when valid.
std::optional<std::string> FindDecompositionViolation(
    const Instance& instance, const Decomposition& decomposition);

using UtilityVector = std::vector<std::int64_t>;

// u_i = -c_i(X_i).
UtilityVector ComputeUtilities(const Instance& instance,
                               const Allocation& allocation);

// e_i = u_i / w_i, exact.
std::vector<Rational> WeightedUtilities(std::span<const std::int64_t> utilities,
                                        std::span<const Rational> weights);
std::vector<Rational> ComputeWeightedUtilities(const Instance& instance,
                                               const Allocation& allocation);

// Weighted utilities in ascending order.
std::vector<Rational> SortedWeighted(std::span<const std::int64_t> utilities,
                                     std::span<const Rational> weights);
std::vector<Rational> ComputeSortedWeighted(const Instance& instance,
                                            const Allocation& allocation);

// Lexicographic comparison. Throws Error(kContractViolation) on a length
// mismatch.
template <typename T>
std::weak_ordering LexCompare(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) {
    Fail(ErrorKind::kContractViolation,
         "lexicographic comparison of vectors with lengths " +
             std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < y[k]) return std::weak_ordering::less;
    if (y[k] < x[k]) return std::weak_ordering::greater;
  }
  return std::weak_ordering::equivalent;
}

template <typename T>
std::weak_ordering LexCompare(const std::vector<T>& x,
                              const std::vector<T>& y) {
  return LexCompare(std::span<const T>(x), std::span<const T>(y));
}

}  // namespace chorealloc

#endif  // CHOREALLOC_CORE_MODEL_HPP_
