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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "chorealloc/clean_engine.hpp"
#include "chorealloc/yankee_swap.hpp"
#include "error_kind.hpp"
#include "support.hpp"

namespace chorealloc {
namespace {

using testing::D1;
using testing::KindOf;

Rational R(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

GainVector G(std::initializer_list<Scalar> values) { return GainVector(values); }

std::vector<Rational> Weights(std::initializer_list<Rational> w) { return w; }

TEST_CASE("empty chore set") {
  const Instance instance = testing::AllCost({1, 2}, 0);
  const auto result = RunGeneralYankeeSwap(instance, WeightedLeximinGain());
  CHECK(result.allocation.num_chores() == 0);
  CHECK(result.trace.empty());
  CHECK(ComputeUtilities(instance, result.allocation) == UtilityVector{0, 0});
}

TEST_CASE("D1 with equal weights") {
  const Instance instance = D1();
  const auto result = RunGeneralYankeeSwap(instance, WeightedLeximinGain());
  CHECK(result.clean_size == 2);
  CHECK(result.decomposition.clean == Allocation::FromOwners(2, {0, 1, kPool}));
  CHECK(result.allocation == Allocation::FromOwners(2, {0, 1, 1}));
  REQUIRE(result.trace.size() == 1);
  CHECK(result.trace[0].agent == 1);
  CHECK(result.trace[0].chore == 2);
  CHECK(ComputeSortedWeighted(instance, result.allocation) ==
        std::vector<Rational>{-1, 0});
  CHECK(ComputeSortedWeighted(instance, result.allocation) ==
        testing::BestLeximinKey(instance));
}

TEST_CASE("D1 with weights (1, 2)") {
  const Instance instance = D1(1, 2);
  const auto result = RunGeneralYankeeSwap(instance, WeightedLeximinGain());
  CHECK(result.allocation.owner(2) == 1);
  CHECK(ComputeSortedWeighted(instance, result.allocation) ==
        std::vector<Rational>{R(-1, 2), 0});
  CHECK(testing::BestLeximinKey(instance) ==
        std::vector<Rational>{R(-1, 2), 0});
}

TEST_CASE("select agent") {
  CHECK(SelectAgent(std::vector<GainVector>{G({0, 1}), G({0, 1})}) == 1);
  CHECK(SelectAgent(std::vector<GainVector>{G({0, 1}), G({0, 2})}) == 1);
  CHECK(SelectAgent(std::vector<GainVector>{G({0, 2}), G({0, 1})}) == 0);
  CHECK(SelectAgent(std::vector<GainVector>{G({-1, 1}), G({0, 1}),
                                            G({0, 1})}) == 2);
  CHECK(KindOf([] { SelectAgent(std::vector<GainVector>{}); }) ==
        ErrorKind::kContractViolation);
  CHECK(KindOf([] {
          SelectAgent(std::vector<GainVector>{G({0, 1}), G({0})});
        }) == ErrorKind::kContractViolation);
}

TEST_CASE("weighted utility gain") {
  const WeightedUtilityGain gain;
  const auto w = Weights({1, 2});
  const std::vector<std::int64_t> u = {0, -1};
  CHECK(gain.Evaluate(u, w, 0) == G({0, 1}));
  CHECK(gain.Evaluate(u, w, 1) == G({R(-1, 2), 2}));
  // Equal first components: the heavier agent wins.
  const auto w31 = Weights({3, 1});
  const std::vector<std::int64_t> tied = {-3, -1};
  const std::vector<GainVector> gains = {gain.Evaluate(tied, w31, 0),
                                         gain.Evaluate(tied, w31, 1)};
  CHECK(SelectAgent(gains) == 0);
}

TEST_CASE("weighted leximin gain") {
  const WeightedLeximinGain gain;
  const auto w = Weights({1, 2});
  const std::vector<std::int64_t> u = {0, -1};
  CHECK(gain.Evaluate(u, w, 0) == G({-1, 0}));
  CHECK(gain.Evaluate(u, w, 1) == G({-1, R(1, 2)}));
  // Agent 1 ends at -1 either way but currently sits lower, so agent 1 wins.
  CHECK(SelectAgent(std::vector<GainVector>{gain.Evaluate(u, w, 0),
                                            gain.Evaluate(u, w, 1)}) == 1);
}

TEST_CASE("malfare gain") {
  const auto w1 = Weights({1});
  CHECK(PMeanMalfareGain(1).Evaluate(std::vector<std::int64_t>{0}, w1, 0) ==
        G({-1}));
  CHECK(PMeanMalfareGain(2).Evaluate(std::vector<std::int64_t>{-2}, w1, 0) ==
        G({-5}));
  const auto w = Weights({3, 1});
  const std::vector<std::int64_t> u = {0, -1};
  const PMeanMalfareGain squared(2);
  const std::vector<GainVector> gains = {squared.Evaluate(u, w, 0),
                                         squared.Evaluate(u, w, 1)};
  CHECK(gains[0] == G({-3}));
  CHECK(gains[1] == G({-3}));
  CHECK(SelectAgent(gains) == 1);
  CHECK(squared.exact());
  const PMeanMalfareGain fractional(1.5);
  CHECK_FALSE(fractional.exact());
  const auto value =
      fractional.Evaluate(std::vector<std::int64_t>{-2}, w1, 0)[0].ToDouble();
  CHECK(value == doctest::Approx(std::pow(2.0, 1.5) - std::pow(3.0, 1.5)));
  CHECK(KindOf([] { PMeanMalfareGain(0.5); }) == ErrorKind::kDomain);
  CHECK(KindOf([] { PMeanMalfareGain(NAN); }) == ErrorKind::kDomain);
  CHECK(KindOf([] { MakeGain(CriterionKind::kMalfare, std::nullopt); }) ==
        ErrorKind::kConfiguration);
  CHECK(KindOf([] { MakeCriterion(CriterionKind::kMalfare, std::nullopt); }) ==
        ErrorKind::kConfiguration);
}

TEST_CASE("criterion compare") {
  const Instance instance = D1();
  const Allocation x = Allocation::FromOwners(2, {0, 1, 1});
  const Allocation y = Allocation::FromOwners(2, {0, 0, 0});
  const UtilitarianCriterion usw;
  const WeightedLeximinCriterion leximin;
  const WeightedPMalfareCriterion malfare(2);
  for (const JusticeCriterion* c :
       std::initializer_list<const JusticeCriterion*>{&usw, &leximin,
                                                      &malfare}) {
    CHECK(CriterionCompare(*c, instance, x, x) == std::weak_ordering::equivalent);
  }
  CHECK(CriterionCompare(usw, instance, x, y) == std::weak_ordering::greater);
  CHECK(CriterionCompare(usw, instance, y, x) == std::weak_ordering::less);
  CHECK(CriterionCompare(malfare, instance, x, y) ==
        std::weak_ordering::greater);

  const Instance weighted = D1(1, 2);
  // Sorted weighted vectors (-1/2, 0) versus (-1, 0).
  CHECK(CriterionCompare(leximin, weighted, x,
                         Allocation::FromOwners(2, {0, 1, 0})) ==
        std::weak_ordering::greater);
  CHECK(KindOf([&] {
          CriterionCompare(usw, instance, x,
                           Allocation::FromOwners(2, {0, 1, kPool}));
        }) == ErrorKind::kContractViolation);
}

TEST_CASE("criterion kinds") {
  CHECK(ParseCriterionKind("leximin") == CriterionKind::kLeximin);
  CHECK(ParseCriterionKind("malfare") == CriterionKind::kMalfare);
  CHECK(ParseCriterionKind("usw") == CriterionKind::kUsw);
  CHECK_FALSE(ParseCriterionKind("nash").has_value());
  CHECK(std::string(CriterionKindName(CriterionKind::kMalfare)) == "malfare");
}

TEST_CASE("leximin optimal on small instances") {
  const WeightedLeximinGain gain;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance instance = testing::SmallRandomInstance(seed);
    const auto result = RunGeneralYankeeSwap(instance, gain);
    const auto costs =
        testing::CostsOf(instance, testing::OwnersOf(result.allocation));
    CHECK(testing::LeximinKey(instance, costs) ==
          testing::BestLeximinKey(instance));
  }
}

TEST_CASE("malfare optimal on small instances") {
  for (unsigned p : {1u, 2u, 3u}) {
    const PMeanMalfareGain gain(p);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Instance instance = testing::SmallRandomInstance(seed);
      const auto result = RunGeneralYankeeSwap(instance, gain);
      const auto costs =
          testing::CostsOf(instance, testing::OwnersOf(result.allocation));
      CHECK(testing::MalfareKey(instance, costs, p) ==
            testing::BestMalfareKey(instance, p));
    }
  }
}

TEST_CASE("fractional malfare optimal within tolerance") {
  const double p = 1.5;
  const PMeanMalfareGain gain(p);
  auto malfare = [&](const Instance& instance,
                     const std::vector<std::int64_t>& costs) {
    double total = 0;
    for (std::size_t i = 0; i < costs.size(); ++i) {
      total += instance.weight(i).convert_to<double>() *
               std::pow(static_cast<double>(costs[i]), p);
    }
    return total;
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance instance = testing::SmallRandomInstance(seed);
    const auto result = RunGeneralYankeeSwap(instance, gain);
    double best = INFINITY;
    testing::ForEachCompleteAllocation(
        instance, [&](const std::vector<int>& owners) {
          best = std::min(best, malfare(instance, testing::CostsOf(instance, owners)));
        });
    const double got = malfare(
        instance,
        testing::CostsOf(instance, testing::OwnersOf(result.allocation)));
    CHECK(got <= best + 1e-9);
  }
}

TEST_CASE("any gain yields minimum total cost") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance instance = testing::SmallRandomInstance(seed);
    const testing::SeededRandomGain gain(seed);
    const auto result = RunGeneralYankeeSwap(instance, gain);
    CHECK(result.allocation.is_complete());
    const auto costs =
        testing::CostsOf(instance, testing::OwnersOf(result.allocation));
    std::int64_t total = 0;
    for (auto c : costs) total += c;
    CHECK(total == static_cast<std::int64_t>(
                       instance.num_chores() -
                       testing::MaxCleanSizeByEnumeration(instance)));
    CHECK(result.trace.size() == instance.num_chores() - result.clean_size);
  }
}

TEST_CASE("result decomposition is valid and the loop runs once per pool chore") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance instance = testing::SmallRandomInstance(seed);
    const auto result = RunGeneralYankeeSwap(instance, WeightedLeximinGain());
    CHECK_FALSE(FindResultViolation(instance, result).has_value());
    CHECK(result.decomposition.clean == ComputeMinCostAllocation(instance));
    CHECK(result.trace.size() ==
          result.decomposition.clean.pool().count());
    for (std::size_t i = 0; i < instance.num_agents(); ++i) {
      CHECK(instance.oracle(i).Cost(result.allocation.bundle(i)) ==
            static_cast<std::int64_t>(
                result.decomposition.supplementary.bundle(i).count()));
    }
    // Pool chores are handed out in ascending order.
    for (std::size_t k = 1; k < result.trace.size(); ++k) {
      CHECK(result.trace[k - 1].chore < result.trace[k].chore);
    }
  }
}

TEST_CASE("built-in gains are local") {
  std::mt19937_64 rng(11);
  const auto w = testing::AcceptanceWeights();
  const WeightedLeximinGain leximin;
  const WeightedUtilityGain utility;
  const PMeanMalfareGain malfare(3);
  const PMeanMalfareGain fractional(2.5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> x(4);
    std::vector<std::int64_t> y(4);
    for (std::size_t k = 0; k < 4; ++k) {
      x[k] = -static_cast<std::int64_t>(rng() % 6);
      y[k] = -static_cast<std::int64_t>(rng() % 6);
    }
    const std::size_t i = rng() % 4;
    y[i] = x[i];
    for (const GainFunction* g : std::initializer_list<const GainFunction*>{
             &leximin, &utility, &malfare, &fractional}) {
      CHECK(g->Evaluate(x, w, i) == g->Evaluate(y, w, i));
    }
  }
}

TEST_CASE("runs are deterministic") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance instance = testing::SmallRandomInstance(seed);
    const PMeanMalfareGain gain(2);
    const auto a = RunGeneralYankeeSwap(instance, gain);
    const auto b = RunGeneralYankeeSwap(instance, gain);
    CHECK(a.allocation == b.allocation);
    CHECK(a.trace == b.trace);
  }
}

// Gain whose dimension depends on the agent.
class RaggedGain final : public GainFunction {
 public:
  std::string name() const override { return "ragged"; }
  std::size_t dimension() const override { return 1; }
  GainVector Evaluate(std::span<const std::int64_t>,
                      std::span<const Rational>,
                      std::size_t agent) const override {
    return GainVector(agent + 1, Scalar(0));
  }
};

TEST_CASE("gain dimension mismatch") {
  CHECK(KindOf([] {
          RunGeneralYankeeSwap(testing::AllCost({1, 1}, 2), RaggedGain());
        }) == ErrorKind::kContractViolation);
}

TEST_CASE("utility-ratio gain is not leximin-optimal with unequal weights") {
  // Two chores that cost 1 for everybody, weights (1/2, 3).
  const Instance instance = testing::AllCost({R(1, 2), 3}, 2);
  const auto ratio = RunGeneralYankeeSwap(instance, WeightedUtilityGain());
  CHECK(ComputeSortedWeighted(instance, ratio.allocation) ==
        std::vector<Rational>{-2, R(-1, 3)});
  const auto fixed = RunGeneralYankeeSwap(instance, WeightedLeximinGain());
  CHECK(ComputeSortedWeighted(instance, fixed.allocation) ==
        std::vector<Rational>{R(-2, 3), 0});
  CHECK(testing::BestLeximinKey(instance) ==
        std::vector<Rational>{R(-2, 3), 0});
}

TEST_CASE("utility-ratio gain agrees with leximin gain under equal weights") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorOptions options;
    options.num_agents = 2 + seed % 2;
    options.num_chores = 3 + seed % 4;
    options.families = {"approval_cap", "partition_cap"};
    options.seed = seed;
    const Instance instance = GenerateInstance(options);
    const auto result = RunGeneralYankeeSwap(instance, WeightedUtilityGain());
    const auto costs =
        testing::CostsOf(instance, testing::OwnersOf(result.allocation));
    CHECK(testing::LeximinKey(instance, costs) ==
          testing::BestLeximinKey(instance));
  }
}

}  // namespace
}  // namespace chorealloc
