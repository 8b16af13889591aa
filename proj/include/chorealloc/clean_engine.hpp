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

#ifndef CHOREALLOC_CLEAN_ENGINE_HPP_
#define CHOREALLOC_CLEAN_ENGINE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "chorealloc/core_model.hpp"

namespace chorealloc {

// Exchange graph of a clean allocation, materialized for inspection. Nodes
// are chores; an arc from -> to means `to` is held by agent j != holder(from)
// and X_j - to + from is still zero cost for j. A sink arc from -> i means
// X_i + from is zero cost for agent i != holder(from).
class ExchangeGraph {
 public:
  struct SinkArc {
    std::size_t chore;
    std::size_t agent;
  };

  // Throws Error(kContractViolation) when `clean` is not zero cost.
  static ExchangeGraph Build(const Instance& instance, const Allocation& clean);

  // Successors of `chore` in ascending index order.
  const std::vector<std::size_t>& arcs(std::size_t chore) const {
    return arcs_[chore];
  }
  // Agents reachable from `chore` in one step, ascending.
  const std::vector<std::size_t>& sinks(std::size_t chore) const {
    return sinks_[chore];
  }

  // Breadth-first distance (number of chore-to-chore arcs) from `source` to
  // the nearest node with a sink arc, or nullopt if no sink is reachable.
  std::optional<std::size_t> DistanceToSink(std::size_t source) const;

 private:
  std::vector<std::vector<std::size_t>> arcs_;
  std::vector<std::vector<std::size_t>> sinks_;
};

// One shortest augmenting path step. `chore` must be unallocated and `clean`
// zero cost for every agent. Returns the grown allocation, or nullopt when no
// path exists. BFS visits successors in ascending chore index and checks sink
// arcs in ascending agent index before expanding a node.
std::optional<Allocation> Augment(const Instance& instance,
                                  const Allocation& clean, std::size_t chore);

// Maximum-size allocation in which every agent's bundle has cost zero
// (matroid partitioning over the rank functions |S| - c_i(S)). Chores are
// tried once each in ascending index order. Throws Error(kOracleContract)
// naming the agent if an oracle reports a marginal outside {0, 1}.
Allocation ComputeMinCostAllocation(const Instance& instance);

// Greedy split of each bundle in chore index order: a chore joins the clean
// part when its marginal cost against the clean part so far is zero.
Decomposition Decompose(const Instance& instance, const Allocation& allocation);

}  // namespace chorealloc

#endif  // CHOREALLOC_CLEAN_ENGINE_HPP_
