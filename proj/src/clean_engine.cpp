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

#include "chorealloc/clean_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace chorealloc {
namespace {

struct CleanState {
  const Instance* instance;
  std::vector<int> owners;
  std::vector<ChoreSet> bundles;

  Allocation ToAllocation() const {
    return Allocation::FromOwners(instance->num_agents(), owners);
  }
};

// cost(set) for a set at most one chore away from a zero-cost bundle, which
// a valid oracle keeps in {0, 1}.
bool IsZeroCost(const Instance& instance, std::size_t agent,
                const ChoreSet& set) {
  const std::int64_t cost = instance.oracle(agent).Cost(set);
  if (cost == 0) return true;
  if (cost == 1) return false;
  Fail(ErrorKind::kOracleContract,
       "cost oracle of agent " + std::to_string(agent) + " returned " +
           std::to_string(cost) +
           " for a bundle one chore away from a zero-cost bundle");
}

bool CanTake(const CleanState& state, std::size_t agent, std::size_t chore) {
  return IsZeroCost(*state.instance, agent, With(state.bundles[agent], chore));
}

bool CanSwap(const CleanState& state, std::size_t agent, std::size_t out,
             std::size_t in) {
  ChoreSet set = state.bundles[agent];
  set.reset(out);
  set.set(in);
  return IsZeroCost(*state.instance, agent, set);
}

CleanState LoadClean(const Instance& instance, const Allocation& clean) {
  CheckCompatible(instance, clean);
  CleanState state{&instance,
                   std::vector<int>(clean.owners().begin(),
                                    clean.owners().end()),
                   {}};
  state.bundles.reserve(instance.num_agents());
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    state.bundles.push_back(clean.bundle(i));
    if (instance.oracle(i).Cost(state.bundles.back()) != 0) {
      Fail(ErrorKind::kContractViolation,
           "agent " + std::to_string(i) + "'s bundle is not zero cost");
    }
  }
  return state;
}

struct AugmentingPath {
  std::vector<std::size_t> chores;  // source first
  std::size_t sink = 0;
};

std::optional<AugmentingPath> FindShortestPath(const CleanState& state,
                                               std::size_t source) {
  const std::size_t n = state.instance->num_agents();
  const std::size_t m = state.instance->num_chores();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(m, kUnseen);
  parent[source] = source;
  std::deque<std::size_t> queue = {source};
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    const int holder = state.owners[node];
    for (std::size_t agent = 0; agent < n; ++agent) {
      if (static_cast<int>(agent) == holder) continue;
      if (!CanTake(state, agent, node)) continue;
      AugmentingPath path;
      path.sink = agent;
      for (std::size_t at = node;; at = parent[at]) {
        path.chores.push_back(at);
        if (at == source) break;
      }
      std::reverse(path.chores.begin(), path.chores.end());
      return path;
    }
    for (std::size_t next = 0; next < m; ++next) {
      const int next_holder = state.owners[next];
      if (parent[next] != kUnseen || next_holder == kPool ||
          next_holder == holder) {
        continue;
      }
      if (!CanSwap(state, static_cast<std::size_t>(next_holder), next, node)) {
        continue;
      }
      parent[next] = node;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

void ApplyPath(CleanState& state, const AugmentingPath& path) {
  // Chore k on the path moves into the bundle its successor leaves; the last
  // chore moves to the sink agent.
  std::set<std::size_t> touched;
  std::vector<int> new_owner(path.chores.size());
  for (std::size_t k = 0; k + 1 < path.chores.size(); ++k) {
    new_owner[k] = state.owners[path.chores[k + 1]];
  }
  new_owner.back() = static_cast<int>(path.sink);
  for (std::size_t k = 0; k < path.chores.size(); ++k) {
    const std::size_t chore = path.chores[k];
    const int before = state.owners[chore];
    if (before != kPool) {
      state.bundles[before].reset(chore);
      touched.insert(static_cast<std::size_t>(before));
    }
  }
  for (std::size_t k = 0; k < path.chores.size(); ++k) {
    const std::size_t chore = path.chores[k];
    state.owners[chore] = new_owner[k];
    state.bundles[new_owner[k]].set(chore);
    touched.insert(static_cast<std::size_t>(new_owner[k]));
  }
  for (std::size_t agent : touched) {
    if (state.instance->oracle(agent).Cost(state.bundles[agent]) != 0) {
      Fail(ErrorKind::kInternal,
           "augmenting path left agent " + std::to_string(agent) +
               " with a bundle of nonzero cost");
    }
  }
}

bool AugmentInPlace(CleanState& state, std::size_t source) {
  std::optional<AugmentingPath> path = FindShortestPath(state, source);
  if (!path) return false;
  ApplyPath(state, *path);
  return true;
}

}  // namespace

ExchangeGraph ExchangeGraph::Build(const Instance& instance,
                                   const Allocation& clean) {
  const CleanState state = LoadClean(instance, clean);
  const std::size_t m = instance.num_chores();
  ExchangeGraph graph;
  graph.arcs_.resize(m);
  graph.sinks_.resize(m);
  for (std::size_t from = 0; from < m; ++from) {
    const int holder = state.owners[from];
    for (std::size_t agent = 0; agent < instance.num_agents(); ++agent) {
      if (static_cast<int>(agent) != holder && CanTake(state, agent, from)) {
        graph.sinks_[from].push_back(agent);
      }
    }
    for (std::size_t to = 0; to < m; ++to) {
      const int to_holder = state.owners[to];
      if (to_holder == kPool || to_holder == holder) continue;
      if (CanSwap(state, static_cast<std::size_t>(to_holder), to, from)) {
        graph.arcs_[from].push_back(to);
      }
    }
  }
  return graph;
}

std::optional<std::size_t> ExchangeGraph::DistanceToSink(
    std::size_t source) const {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> distance(arcs_.size(), kUnseen);
  distance[source] = 0;
  std::deque<std::size_t> queue = {source};
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    if (!sinks_[node].empty()) return distance[node];
    for (std::size_t next : arcs_[node]) {
      if (distance[next] != kUnseen) continue;
      distance[next] = distance[node] + 1;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::optional<Allocation> Augment(const Instance& instance,
                                  const Allocation& clean, std::size_t chore) {
  if (chore >= instance.num_chores() || clean.owner(chore) != kPool) {
    Fail(ErrorKind::kContractViolation,
         "augment requires an unallocated chore, got " +
             std::to_string(chore));
  }
  CleanState state = LoadClean(instance, clean);
  if (!AugmentInPlace(state, chore)) return std::nullopt;
  return state.ToAllocation();
}

Allocation ComputeMinCostAllocation(const Instance& instance) {
  CleanState state = LoadClean(
      instance, Allocation(instance.num_agents(), instance.num_chores()));
  for (std::size_t chore = 0; chore < instance.num_chores(); ++chore) {
    AugmentInPlace(state, chore);
  }
  return state.ToAllocation();
}

Decomposition Decompose(const Instance& instance,
                        const Allocation& allocation) {
  CheckCompatible(instance, allocation);
  const std::size_t m = instance.num_chores();
  std::vector<int> clean_owners(m, kPool);
  std::vector<int> extra_owners(m, kPool);
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    const CostOracle& oracle = instance.oracle(i);
    ChoreSet clean(m);
    for (std::size_t chore : Members(allocation.bundle(i))) {
      if (oracle.Marginal(clean, chore) == 0) {
        clean.set(chore);
        clean_owners[chore] = static_cast<int>(i);
      } else {
        extra_owners[chore] = static_cast<int>(i);
      }
    }
  }
  return Decomposition{
      Allocation::FromOwners(instance.num_agents(), std::move(clean_owners)),
      Allocation::FromOwners(instance.num_agents(), std::move(extra_owners))};
}

}  // namespace chorealloc
