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

// Helpers shared by the test binaries.

#ifndef CHOREALLOC_TESTS_SUPPORT_HPP_
#define CHOREALLOC_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chorealloc/core_model.hpp"
#include "chorealloc/io.hpp"
#include "chorealloc/yankee_swap.hpp"

namespace chorealloc::testing {

inline std::shared_ptr<const CostOracle> Approval(
    std::size_t m, std::initializer_list<std::size_t> approved,
    std::int64_t cap) {
  return std::make_shared<ApprovalCapCost>(MakeChoreSet(m, approved), cap);
}

// n=2, chores {o1,o2,o3}; agent 0 approves {o1,o2} cap 1, agent 1 approves
// {o2,o3} cap 1.
inline Instance D1(Rational w0 = 1, Rational w1 = 1) {
  return Instance(DefaultLabels(3), {{w0, Approval(3, {0, 1}, 1)},
                                     {w1, Approval(3, {1, 2}, 1)}});
}

// Every chore costs 1 for every agent.
inline Instance AllCost(std::vector<Rational> weights, std::size_t m) {
  std::vector<Agent> agents;
  for (const Rational& w : weights) agents.push_back({w, Approval(m, {}, 0)});
  return Instance(DefaultLabels(m), std::move(agents));
}

inline std::vector<Rational> AcceptanceWeights() {
  return {Rational(1), Rational(2), Rational(3), Rational(1, 2)};
}

// Instance #seed of the small random family: n in {2,3}, m in {3..6}, all
// three cost families, weights from {1, 2, 3, 1/2}.
inline Instance SmallRandomInstance(std::uint64_t seed) {
  GeneratorOptions options;
  options.num_agents = 2 + seed % 2;
  options.num_chores = 3 + (seed / 2) % 4;
  options.families = {"approval_cap", "partition_cap", "explicit"};
  options.weight_values = AcceptanceWeights();
  options.seed = seed * 7919 + 17;
  return GenerateInstance(options);
}

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Arbitrary but deterministic gain depending on (seed, agent, u_agent) only.
class SeededRandomGain final : public GainFunction {
 public:
  explicit SeededRandomGain(std::uint64_t seed) : seed_(seed) {}

  std::string name() const override { return "seeded_random"; }
  std::size_t dimension() const override { return 1; }
  GainVector Evaluate(std::span<const std::int64_t> utilities,
                      std::span<const Rational>,
                      std::size_t agent) const override {
    const std::uint64_t h = SplitMix64(
        seed_ ^ SplitMix64(agent * 1000003 +
                           static_cast<std::uint64_t>(-utilities[agent])));
    return {Scalar(Rational(static_cast<std::int64_t>(h % 1000)))};
  }

 private:
  std::uint64_t seed_;
};

// Random (n+1)-partition; owners drawn uniformly from {pool, 0..n-1}.
inline Allocation RandomAllocation(std::size_t n, std::size_t m,
                                   std::mt19937_64& rng, bool complete) {
  std::vector<int> owners(m);
  for (int& owner : owners) {
    owner = complete ? static_cast<int>(rng() % n)
                     : static_cast<int>(rng() % (n + 1)) - 1;
  }
  return Allocation::FromOwners(n, std::move(owners));
}

// Largest number of chores placeable with every bundle at cost zero, by
// trying every owner (or the pool) for every chore.
inline std::size_t MaxCleanSizeByEnumeration(const Instance& instance) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_chores();
  std::vector<ChoreSet> bundles(n, ChoreSet(m));
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> visit =
      [&](std::size_t chore, std::size_t placed) {
        if (placed + (m - chore) <= best) return;
        if (chore == m) {
          best = placed;
          return;
        }
        for (std::size_t i = 0; i < n; ++i) {
          bundles[i].set(chore);
          if (instance.oracle(i).Cost(bundles[i]) == 0) {
            visit(chore + 1, placed + 1);
          }
          bundles[i].reset(chore);
        }
        visit(chore + 1, placed);
      };
  visit(0, 0);
  return best;
}

// Per-agent costs of a complete owner vector, straight from the oracles.
inline std::vector<std::int64_t> CostsOf(const Instance& instance,
                                         const std::vector<int>& owners) {
  std::vector<ChoreSet> bundles(instance.num_agents(),
                                ChoreSet(instance.num_chores()));
  for (std::size_t o = 0; o < owners.size(); ++o) bundles[owners[o]].set(o);
  std::vector<std::int64_t> costs;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    costs.push_back(instance.oracle(i).Cost(bundles[i]));
  }
  return costs;
}

// Ascending -c_i / w_i; larger (lexicographically) is better.
inline std::vector<Rational> LeximinKey(const Instance& instance,
                                        const std::vector<std::int64_t>& costs) {
  std::vector<Rational> key;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    key.push_back(Rational(-costs[i]) / instance.weight(i));
  }
  std::sort(key.begin(), key.end());
  return key;
}

// sum_i w_i c_i^p for integral p; smaller is better.
inline Rational MalfareKey(const Instance& instance,
                           const std::vector<std::int64_t>& costs,
                           unsigned p) {
  Rational total = 0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    Rational power = 1;
    for (unsigned k = 0; k < p; ++k) power *= costs[i];
    total += instance.weight(i) * power;
  }
  return total;
}

// Calls visit(owners) for every complete allocation.
inline void ForEachCompleteAllocation(
    const Instance& instance,
    const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t m = instance.num_chores();
  const int n = static_cast<int>(instance.num_agents());
  std::vector<int> owners(m, 0);
  while (true) {
    visit(owners);
    std::size_t k = 0;
    while (k < m && ++owners[k] == n) owners[k++] = 0;
    if (k == m) return;
  }
}

inline std::vector<Rational> BestLeximinKey(const Instance& instance) {
  std::optional<std::vector<Rational>> best;
  ForEachCompleteAllocation(instance, [&](const std::vector<int>& owners) {
    auto key = LeximinKey(instance, CostsOf(instance, owners));
    if (!best || key > *best) best = std::move(key);
  });
  return *best;
}

inline Rational BestMalfareKey(const Instance& instance, unsigned p) {
  std::optional<Rational> best;
  ForEachCompleteAllocation(instance, [&](const std::vector<int>& owners) {
    Rational key = MalfareKey(instance, CostsOf(instance, owners), p);
    if (!best || key < *best) best = key;
  });
  return *best;
}

inline std::vector<int> OwnersOf(const Allocation& allocation) {
  return {allocation.owners().begin(), allocation.owners().end()};
}

}  // namespace chorealloc::testing

#endif  // CHOREALLOC_TESTS_SUPPORT_HPP_
