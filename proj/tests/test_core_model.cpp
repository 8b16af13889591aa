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

#include <algorithm>
#include <random>

#include "chorealloc/core_model.hpp"
#include "chorealloc/scalar.hpp"
#include "error_kind.hpp"
#include "support.hpp"

namespace chorealloc {
namespace {

using testing::D1;
using testing::KindOf;

TEST_CASE("utility vector") {
  const Instance d1 = D1();
  CHECK(ComputeUtilities(d1, Allocation(2, 3)) == UtilityVector{0, 0});
  CHECK(ComputeUtilities(d1, Allocation::FromBundles(2, 3, {{0}, {1, 2}})) ==
        UtilityVector{0, -1});
  CHECK(ComputeUtilities(d1, Allocation::FromBundles(2, 3, {{0, 1, 2}, {}})) ==
        UtilityVector{-2, 0});
}

TEST_CASE("malformed allocations are rejected") {
  CHECK(KindOf([] { Allocation::FromBundles(2, 3, {{0}, {3}}); }) ==
        ErrorKind::kMalformedAllocation);
  CHECK(KindOf([] { Allocation::FromBundles(2, 3, {{0}, {0}}); }) ==
        ErrorKind::kMalformedAllocation);
  CHECK(KindOf([] { Allocation::FromBundles(2, 3, {{0}}); }) ==
        ErrorKind::kMalformedAllocation);
  CHECK(KindOf([] { Allocation::FromOwners(2, {0, 2, -1}); }) ==
        ErrorKind::kMalformedAllocation);
  CHECK(KindOf([] { ComputeUtilities(D1(), Allocation(2, 4)); }) ==
        ErrorKind::kMalformedAllocation);
  CHECK(KindOf([] { ComputeUtilities(D1(), Allocation(3, 3)); }) ==
        ErrorKind::kMalformedAllocation);
}

TEST_CASE("allocation partition accessors") {
  const Allocation x = Allocation::FromBundles(2, 4, {{3, 0}, {2}});
  CHECK(x.owner(0) == 0);
  CHECK(x.owner(1) == kPool);
  CHECK(Members(x.bundle(0)) == std::vector<std::size_t>{0, 3});
  CHECK(Members(x.pool()) == std::vector<std::size_t>{1});
  CHECK(x.allocated_count() == 3);
  CHECK_FALSE(x.is_complete());
  const Allocation y = x.WithOwner(1, 1);
  CHECK(y.is_complete());
  CHECK(x.owner(1) == kPool);  // unchanged
}

TEST_CASE("weighted utility vector") {
  const Allocation x = Allocation::FromBundles(2, 3, {{0}, {1, 2}});
  const std::vector<Rational> unit = ComputeWeightedUtilities(D1(), x);
  CHECK(unit == std::vector<Rational>{0, -1});
  CHECK(ComputeWeightedUtilities(D1(1, 2), x) ==
        std::vector<Rational>{0, Rational(-1, 2)});
  CHECK(ComputeWeightedUtilities(D1(3, Rational(1, 2)), Allocation(2, 3)) ==
        std::vector<Rational>{0, 0});
}

TEST_CASE("lexicographic comparison") {
  using V = std::vector<Rational>;
  CHECK(LexCompare(V{0, -5}, V{0, -5}) == 0);
  CHECK(LexCompare(V{-1, 0}, V{-1, -1}) > 0);
  CHECK(LexCompare(V{Rational(-1, 2), 0}, V{-1, 0}) > 0);
  CHECK(LexCompare(V{-1, 0}, V{Rational(-1, 2), 0}) < 0);
  CHECK(KindOf([] { LexCompare(V{0}, V{0, 0}); }) ==
        ErrorKind::kContractViolation);
}

TEST_CASE("lexicographic comparison is a total order") {
  std::mt19937_64 rng(11);
  auto random_vector = [&] {
    std::vector<Rational> v(3);
    for (Rational& x : v) {
      x = Rational(static_cast<int>(rng() % 5) - 4,
                   static_cast<int>(rng() % 3) + 1);
    }
    return v;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_vector();
    const auto b = random_vector();
    const auto c = random_vector();
    const auto ab = LexCompare(a, b);
    const auto ba = LexCompare(b, a);
    CHECK((ab < 0) == (ba > 0));
    CHECK((ab == 0) == (a == b));
    if (ab <= 0 && LexCompare(b, c) <= 0) CHECK(LexCompare(a, c) <= 0);
  }
}

TEST_CASE("sorted weighted vector") {
  CHECK(SortedWeighted(UtilityVector{0, -1}, std::vector<Rational>{1, 1}) ==
        std::vector<Rational>{-1, 0});
  CHECK(SortedWeighted(UtilityVector{-1, -1}, std::vector<Rational>{2, 2}) ==
        std::vector<Rational>{Rational(-1, 2), Rational(-1, 2)});
  CHECK(ComputeSortedWeighted(D1(),
                              Allocation::FromBundles(2, 3, {{0}, {1, 2}})) ==
        std::vector<Rational>{-1, 0});
}

TEST_CASE("sorted weighted vector is a permutation of the weighted vector") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance instance = testing::SmallRandomInstance(trial);
    const Allocation x = testing::RandomAllocation(
        instance.num_agents(), instance.num_chores(), rng, false);
    std::vector<Rational> weighted = ComputeWeightedUtilities(instance, x);
    const std::vector<Rational> sorted = ComputeSortedWeighted(instance, x);
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    std::sort(weighted.begin(), weighted.end());
    CHECK(weighted == sorted);
  }
}

TEST_CASE("instance validation") {
  auto oracle = testing::Approval(2, {0}, 0);
  CHECK(KindOf([] { Instance(DefaultLabels(1), {}); }) ==
        ErrorKind::kValidation);
  CHECK(KindOf([&] { Instance(DefaultLabels(2), {{0, oracle}}); }) ==
        ErrorKind::kValidation);
  CHECK(KindOf([&] { Instance(DefaultLabels(2), {{Rational(-1, 2), oracle}}); }) ==
        ErrorKind::kValidation);
  CHECK(KindOf([&] { Instance({"a", "a"}, {{1, oracle}}); }) ==
        ErrorKind::kValidation);
  CHECK(KindOf([&] { Instance(DefaultLabels(3), {{1, oracle}}); }) ==
        ErrorKind::kValidation);
  const Instance ok({"x", "y"}, {{Rational(3, 2), oracle}});
  CHECK(ok.FindChore("y") == 1u);
  CHECK_FALSE(ok.FindChore("z").has_value());
}

TEST_CASE("combine requires disjoint parts") {
  const Allocation a = Allocation::FromBundles(2, 3, {{0}, {}});
  const Allocation b = Allocation::FromBundles(2, 3, {{}, {1, 2}});
  CHECK(Combine(a, b) == Allocation::FromBundles(2, 3, {{0}, {1, 2}}));
  CHECK(KindOf([&] { Combine(a, a); }) == ErrorKind::kMalformedAllocation);
}

TEST_CASE("rational text form") {
  CHECK(ParseRational("3/6") == Rational(1, 2));
  CHECK(ParseRational("-4") == Rational(-4));
  CHECK(FormatRational(Rational(-2, 4)) == "-1/2");
  CHECK(FormatRational(Rational(3)) == "3/1");
  CHECK(KindOf([] { ParseRational("1/0"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { ParseRational("1.5"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { ParseRational("/2"); }) == ErrorKind::kParse);
}

TEST_CASE("scalars compare exactly unless floating point is involved") {
  CHECK(Scalar(Rational(1, 3)) < Scalar(Rational(1, 3) + Rational(1, 1000000000)));
  CHECK(Scalar(1.0) == Scalar(1.0 + 1e-13));
  CHECK(Scalar(1.0) < Scalar(1.0 + 1e-9));
  CHECK(Scalar(Rational(1, 2)) == Scalar(0.5));
  CHECK(Scalar(Rational(-1, 2)).ToString() == "-1/2");
}

}  // namespace
}  // namespace chorealloc
