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

#include "chorealloc/core_model.hpp"

#include <algorithm>
#include <unordered_set>

namespace chorealloc {

Instance::Instance(std::vector<std::string> chore_labels,
                   std::vector<Agent> agents)
    : labels_(std::move(chore_labels)), agents_(std::move(agents)) {
  if (agents_.empty()) {
    Fail(ErrorKind::kValidation, "an instance needs at least one agent");
  }
  std::unordered_set<std::string> seen;
  for (const std::string& label : labels_) {
    if (label.empty()) Fail(ErrorKind::kValidation, "empty chore label");
    if (!seen.insert(label).second) {
      Fail(ErrorKind::kValidation, "duplicate chore label \"" + label + "\"");
    }
  }
  weights_.reserve(agents_.size());
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    const Agent& agent = agents_[i];
    if (agent.weight <= 0) {
      Fail(ErrorKind::kValidation, "agent " + std::to_string(i) +
                                       " has nonpositive weight " +
                                       FormatRational(agent.weight));
    }
    if (agent.cost == nullptr) {
      Fail(ErrorKind::kValidation,
           "agent " + std::to_string(i) + " has no cost oracle");
    }
    if (agent.cost->ground_size() != labels_.size()) {
      Fail(ErrorKind::kValidation,
           "agent " + std::to_string(i) + "'s oracle covers " +
               std::to_string(agent.cost->ground_size()) + " chores, not " +
               std::to_string(labels_.size()));
    }
    weights_.push_back(agent.weight);
  }
}

std::optional<std::size_t> Instance::FindChore(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::string> DefaultLabels(std::size_t num_chores) {
  std::vector<std::string> labels;
  labels.reserve(num_chores);
  for (std::size_t o = 1; o <= num_chores; ++o) {
    labels.push_back("o" + std::to_string(o));
  }
  return labels;
}

Allocation::Allocation(std::size_t num_agents, std::size_t num_chores)
    : num_agents_(num_agents), owners_(num_chores, kPool) {}

Allocation Allocation::FromOwners(std::size_t num_agents,
                                  std::vector<int> owners) {
  for (std::size_t o = 0; o < owners.size(); ++o) {
    if (owners[o] < kPool || owners[o] >= static_cast<int>(num_agents)) {
      Fail(ErrorKind::kMalformedAllocation,
           "chore " + std::to_string(o) + " has unknown owner " +
               std::to_string(owners[o]));
    }
  }
  return Allocation(num_agents, std::move(owners));
}

Allocation Allocation::FromBundles(
    std::size_t num_agents, std::size_t num_chores,
    const std::vector<std::vector<std::size_t>>& bundles) {
  if (bundles.size() != num_agents) {
    Fail(ErrorKind::kMalformedAllocation,
         std::to_string(bundles.size()) + " bundles for " +
             std::to_string(num_agents) + " agents");
  }
  std::vector<int> owners(num_chores, kPool);
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    for (std::size_t chore : bundles[i]) {
      if (chore >= num_chores) {
        Fail(ErrorKind::kMalformedAllocation,
             "unknown chore " + std::to_string(chore) + " in bundle " +
                 std::to_string(i));
      }
      if (owners[chore] != kPool) {
        Fail(ErrorKind::kMalformedAllocation,
             "chore " + std::to_string(chore) + " appears in bundles " +
                 std::to_string(owners[chore]) + " and " + std::to_string(i));
      }
      owners[chore] = static_cast<int>(i);
    }
  }
  return Allocation(num_agents, std::move(owners));
}

ChoreSet Allocation::bundle(std::size_t agent) const {
  ChoreSet set(owners_.size());
  for (std::size_t o = 0; o < owners_.size(); ++o) {
    if (owners_[o] == static_cast<int>(agent)) set.set(o);
  }
  return set;
}

ChoreSet Allocation::pool() const {
  ChoreSet set(owners_.size());
  for (std::size_t o = 0; o < owners_.size(); ++o) {
    if (owners_[o] == kPool) set.set(o);
  }
  return set;
}

std::size_t Allocation::allocated_count() const {
  return static_cast<std::size_t>(
      std::count_if(owners_.begin(), owners_.end(),
                    [](int owner) { return owner != kPool; }));
}

Allocation Allocation::WithOwner(std::size_t chore, int owner) const {
  if (chore >= owners_.size()) {
    Fail(ErrorKind::kMalformedAllocation,
         "unknown chore " + std::to_string(chore));
  }
  std::vector<int> owners = owners_;
  owners[chore] = owner;
  return FromOwners(num_agents_, std::move(owners));
}

void CheckCompatible(const Instance& instance, const Allocation& allocation) {
  if (allocation.num_agents() != instance.num_agents() ||
      allocation.num_chores() != instance.num_chores()) {
    Fail(ErrorKind::kMalformedAllocation,
         "allocation of " + std::to_string(allocation.num_chores()) +
             " chores among " + std::to_string(allocation.num_agents()) +
             " agents does not match the instance");
  }
}

Allocation Combine(const Allocation& clean, const Allocation& supplementary) {
  if (clean.num_agents() != supplementary.num_agents() ||
      clean.num_chores() != supplementary.num_chores()) {
    Fail(ErrorKind::kMalformedAllocation,
         "combining allocations of different shapes");
  }
  std::vector<int> owners(clean.owners().begin(), clean.owners().end());
  for (std::size_t o = 0; o < owners.size(); ++o) {
    const int extra = supplementary.owner(o);
    if (extra == kPool) continue;
    if (owners[o] != kPool) {
      Fail(ErrorKind::kMalformedAllocation,
           "chore " + std::to_string(o) +
               " is held in both the clean and supplementary parts");
    }
    owners[o] = extra;
  }
  return Allocation::FromOwners(clean.num_agents(), std::move(owners));
}

std::optional<std::string> FindDecompositionViolation(
    const Instance& instance, const Decomposition& decomposition) {
  CheckCompatible(instance, decomposition.clean);
  CheckCompatible(instance, decomposition.supplementary);
  for (std::size_t o = 0; o < instance.num_chores(); ++o) {
    if (decomposition.clean.owner(o) != kPool &&
        decomposition.supplementary.owner(o) != kPool) {
      return "chore " + instance.label(o) +
             " is in both the clean and supplementary parts";
    }
  }
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    const ChoreSet clean = decomposition.clean.bundle(i);
    const ChoreSet extra = decomposition.supplementary.bundle(i);
    const std::int64_t clean_cost = instance.oracle(i).Cost(clean);
    if (clean_cost != 0) {
      return "agent " + std::to_string(i) + "'s clean bundle costs " +
             std::to_string(clean_cost);
    }
    const std::int64_t total = instance.oracle(i).Cost(clean | extra);
    if (total != static_cast<std::int64_t>(extra.count())) {
      return "agent " + std::to_string(i) + "'s bundle costs " +
             std::to_string(total) + " but has " +
             std::to_string(extra.count()) + " supplementary chores";
    }
  }
  return std::nullopt;
}

UtilityVector ComputeUtilities(const Instance& instance,
                               const Allocation& allocation) {
  CheckCompatible(instance, allocation);
  UtilityVector utilities(instance.num_agents());
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    utilities[i] = -instance.oracle(i).Cost(allocation.bundle(i));
  }
  return utilities;
}

std::vector<Rational> WeightedUtilities(std::span<const std::int64_t> utilities,
                                        std::span<const Rational> weights) {
  if (utilities.size() != weights.size()) {
    Fail(ErrorKind::kContractViolation,
         "utility and weight vectors differ in length");
  }
  std::vector<Rational> out;
  out.reserve(utilities.size());
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    out.push_back(Rational(utilities[i]) / weights[i]);
  }
  return out;
}

std::vector<Rational> ComputeWeightedUtilities(const Instance& instance,
                                               const Allocation& allocation) {
  return WeightedUtilities(ComputeUtilities(instance, allocation),
                           instance.weights());
}

std::vector<Rational> SortedWeighted(std::span<const std::int64_t> utilities,
                                     std::span<const Rational> weights) {
  std::vector<Rational> out = WeightedUtilities(utilities, weights);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> ComputeSortedWeighted(const Instance& instance,
                                            const Allocation& allocation) {
  return SortedWeighted(ComputeUtilities(instance, allocation),
                        instance.weights());
}

}  // namespace chorealloc
