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

#include "chorealloc/yankee_swap.hpp"

#include <cmath>

#include "chorealloc/clean_engine.hpp"

namespace chorealloc {
namespace {

constexpr double kMaxExactExponent = 65536;

std::optional<unsigned> ValidateExponent(double p) {
  if (!std::isfinite(p) || p < 1) {
    Fail(ErrorKind::kDomain,
         "p must be a finite real >= 1, got " + Scalar(p).ToString());
  }
  if (p == std::floor(p) && p <= kMaxExactExponent) {
    return static_cast<unsigned>(p);
  }
  return std::nullopt;
}

void CheckAgent(std::span<const std::int64_t> utilities,
                std::span<const Rational> weights, std::size_t agent) {
  if (utilities.size() != weights.size() || agent >= utilities.size()) {
    Fail(ErrorKind::kContractViolation, "gain evaluated for agent " +
                                            std::to_string(agent) +
                                            " outside the utility vector");
  }
}

BigInt Power(std::int64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace

GainVector WeightedLeximinGain::Evaluate(
    std::span<const std::int64_t> utilities, std::span<const Rational> weights,
    std::size_t agent) const {
  CheckAgent(utilities, weights, agent);
  const std::int64_t u = utilities[agent];
  const Rational& w = weights[agent];
  return {Scalar(Rational(u - 1) / w), Scalar(Rational(-u) / w)};
}

GainVector WeightedUtilityGain::Evaluate(
    std::span<const std::int64_t> utilities, std::span<const Rational> weights,
    std::size_t agent) const {
  CheckAgent(utilities, weights, agent);
  const Rational& w = weights[agent];
  return {Scalar(Rational(utilities[agent]) / w), Scalar(w)};
}

PMeanMalfareGain::PMeanMalfareGain(double p)
    : p_(p), integral_exponent_(ValidateExponent(p)) {}

GainVector PMeanMalfareGain::Evaluate(std::span<const std::int64_t> utilities,
                                      std::span<const Rational> weights,
                                      std::size_t agent) const {
  CheckAgent(utilities, weights, agent);
  const std::int64_t cost = -utilities[agent];
  if (cost < 0) {
    Fail(ErrorKind::kContractViolation, "positive utility in a chore setting");
  }
  const Rational& w = weights[agent];
  if (integral_exponent_) {
    const unsigned e = *integral_exponent_;
    return {Scalar(w * Rational(Power(cost, e) - Power(cost + 1, e)))};
  }
  const double c = static_cast<double>(cost);
  return {Scalar(w.convert_to<double>() *
                 (std::pow(c, p_) - std::pow(c + 1, p_)))};
}

GainVector ConstantGain::Evaluate(std::span<const std::int64_t> utilities,
                                  std::span<const Rational> weights,
                                  std::size_t agent) const {
  CheckAgent(utilities, weights, agent);
  return {Scalar(0)};
}

std::size_t SelectAgent(std::span<const GainVector> gains) {
  if (gains.empty()) {
    Fail(ErrorKind::kContractViolation, "no agents to select from");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < gains.size(); ++i) {
    if (gains[i].size() != gains[0].size()) {
      Fail(ErrorKind::kContractViolation,
           "gain vectors of dimensions " + std::to_string(gains[0].size()) +
               " and " + std::to_string(gains[i].size()));
    }
    if (LexCompare(gains[i], gains[best]) >= 0) best = i;
  }
  return best;
}

std::weak_ordering JusticeCriterion::Compare(
    std::span<const std::int64_t> x, std::span<const std::int64_t> y,
    std::span<const Rational> weights) const {
  const std::weak_ordering order = LexCompare(Value(x, weights), Value(y, weights));
  return maximizes() ? order : 0 <=> order;
}

CriterionValue UtilitarianCriterion::Value(
    std::span<const std::int64_t> utilities,
    std::span<const Rational> /*weights*/) const {
  std::int64_t total = 0;
  for (std::int64_t u : utilities) total += u;
  return {Scalar(Rational(total))};
}

CriterionValue WeightedLeximinCriterion::Value(
    std::span<const std::int64_t> utilities,
    std::span<const Rational> weights) const {
  std::vector<Rational> sorted = SortedWeighted(utilities, weights);
  return CriterionValue(sorted.begin(), sorted.end());
}

WeightedPMalfareCriterion::WeightedPMalfareCriterion(double p)
    : p_(p), integral_exponent_(ValidateExponent(p)) {}

CriterionValue WeightedPMalfareCriterion::Value(
    std::span<const std::int64_t> utilities,
    std::span<const Rational> weights) const {
  if (utilities.size() != weights.size()) {
    Fail(ErrorKind::kContractViolation,
         "utility and weight vectors differ in length");
  }
  if (integral_exponent_) {
    Rational total = 0;
    for (std::size_t i = 0; i < utilities.size(); ++i) {
      total += weights[i] * Rational(Power(-utilities[i], *integral_exponent_));
    }
    return {Scalar(total)};
  }
  double total = 0;
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    total += weights[i].convert_to<double>() *
             std::pow(static_cast<double>(-utilities[i]), p_);
  }
  return {Scalar(total)};
}

std::optional<CriterionKind> ParseCriterionKind(std::string_view name) {
  if (name == "leximin") return CriterionKind::kLeximin;
  if (name == "malfare") return CriterionKind::kMalfare;
  if (name == "usw") return CriterionKind::kUsw;
  return std::nullopt;
}

const char* CriterionKindName(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::kLeximin:
      return "leximin";
    case CriterionKind::kMalfare:
      return "malfare";
    case CriterionKind::kUsw:
      return "usw";
  }
  return "unknown";
}

std::unique_ptr<JusticeCriterion> MakeCriterion(CriterionKind kind,
                                                std::optional<double> p) {
  switch (kind) {
    case CriterionKind::kLeximin:
      return std::make_unique<WeightedLeximinCriterion>();
    case CriterionKind::kUsw:
      return std::make_unique<UtilitarianCriterion>();
    case CriterionKind::kMalfare:
      if (!p) Fail(ErrorKind::kConfiguration, "p required for malfare");
      return std::make_unique<WeightedPMalfareCriterion>(*p);
  }
  Fail(ErrorKind::kConfiguration, "unknown criterion");
}

std::unique_ptr<GainFunction> MakeGain(CriterionKind kind,
                                       std::optional<double> p) {
  switch (kind) {
    case CriterionKind::kLeximin:
      return std::make_unique<WeightedLeximinGain>();
    case CriterionKind::kUsw:
      return std::make_unique<ConstantGain>();
    case CriterionKind::kMalfare:
      if (!p) Fail(ErrorKind::kConfiguration, "p required for malfare");
      return std::make_unique<PMeanMalfareGain>(*p);
  }
  Fail(ErrorKind::kConfiguration, "unknown criterion");
}

std::weak_ordering CriterionCompare(const JusticeCriterion& criterion,
                                    const Instance& instance,
                                    const Allocation& x, const Allocation& y) {
  CheckCompatible(instance, x);
  CheckCompatible(instance, y);
  if (!x.is_complete() || !y.is_complete()) {
    Fail(ErrorKind::kContractViolation,
         "criteria compare complete allocations only");
  }
  const UtilityVector ux = ComputeUtilities(instance, x);
  const UtilityVector uy = ComputeUtilities(instance, y);
  return criterion.Compare(ux, uy, instance.weights());
}

YankeeSwapResult RunGeneralYankeeSwap(const Instance& instance,
                                      const GainFunction& gain) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_chores();
  Allocation clean = ComputeMinCostAllocation(instance);
  const std::vector<std::size_t> pool = Members(clean.pool());

  // u_i = -|X1_i|, which equals -c_i(X0_i | X1_i) because X0 is maximum.
  UtilityVector utilities(n, 0);
  std::vector<GainVector> gains(n);
  for (std::size_t i = 0; i < n; ++i) {
    gains[i] = gain.Evaluate(utilities, instance.weights(), i);
  }
  std::vector<int> extra_owners(m, kPool);
  YankeeSwapResult result{Decomposition{clean, clean}, clean, {},
                          clean.allocated_count()};
  result.trace.reserve(pool.size());
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const std::size_t agent = SelectAgent(gains);
    const std::size_t chore = pool[k];
    extra_owners[chore] = static_cast<int>(agent);
    result.trace.push_back(TraceStep{k, agent, chore, gains[agent]});
    utilities[agent] -= 1;
    gains[agent] = gain.Evaluate(utilities, instance.weights(), agent);
  }
  result.decomposition.supplementary =
      Allocation::FromOwners(n, std::move(extra_owners));
  result.allocation = result.decomposition.Combined();
  if (auto problem = FindResultViolation(instance, result)) {
    Fail(ErrorKind::kInternal, "post-run invariant failed: " + *problem);
  }
  return result;
}

std::optional<std::string> FindResultViolation(const Instance& instance,
                                               const YankeeSwapResult& result) {
  if (!result.allocation.is_complete()) return "allocation is not complete";
  if (!(result.decomposition.Combined() == result.allocation)) {
    return "decomposition does not combine to the allocation";
  }
  if (result.decomposition.clean.allocated_count() != result.clean_size) {
    return "clean size does not match the clean allocation";
  }
  if (auto problem = FindDecompositionViolation(instance, result.decomposition)) {
    return problem;
  }
  if (result.trace.size() != instance.num_chores() - result.clean_size) {
    return "trace length differs from the number of supplementary chores";
  }
  return std::nullopt;
}

}  // namespace chorealloc
