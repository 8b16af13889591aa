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

#ifndef CHOREALLOC_YANKEE_SWAP_HPP_
#define CHOREALLOC_YANKEE_SWAP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chorealloc/core_model.hpp"
#include "chorealloc/scalar.hpp"

namespace chorealloc {

using GainVector = std::vector<Scalar>;

// Score of handing one more unit-cost chore to `agent`. Larger (in
// lexicographic order) is better. Gains see only the utility vector and the
// weights, never the allocation itself.
class GainFunction {
 public:
  virtual ~GainFunction() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual GainVector Evaluate(std::span<const std::int64_t> utilities,
                              std::span<const Rational> weights,
                              std::size_t agent) const = 0;
};

// ((u_i - 1) / w_i, -u_i / w_i): the weighted utility the agent would have
// after taking the chore, ties broken toward the agent whose current weighted
// utility is lower. This is the gain the solver uses for weighted leximin.
class WeightedLeximinGain final : public GainFunction {
 public:
  std::string name() const override { return "weighted_leximin"; }
  std::size_t dimension() const override { return 2; }
  GainVector Evaluate(std::span<const std::int64_t> utilities,
                      std::span<const Rational> weights,
                      std::size_t agent) const override;
};

// (u_i / w_i, w_i): ranks agents by current weighted utility, heavier agent
// first on ties. Equivalent to WeightedLeximinGain when all weights are
// equal; with unequal weights it can hand a chore to a light agent whose
// weighted utility then drops below everyone else's, so it does not satisfy
// G1 for weighted leximin (see the verifier tests).
class WeightedUtilityGain final : public GainFunction {
 public:
  std::string name() const override { return "weighted_utility"; }
  std::size_t dimension() const override { return 2; }
  GainVector Evaluate(std::span<const std::int64_t> utilities,
                      std::span<const Rational> weights,
                      std::size_t agent) const override;
};

// w_i * (c_i^p - (c_i + 1)^p) with c_i = -u_i. Exact for integral p, double
// otherwise. Throws Error(kDomain) for p < 1 or non-finite p.
class PMeanMalfareGain final : public GainFunction {
 public:
  explicit PMeanMalfareGain(double p);

  double p() const { return p_; }
  bool exact() const { return integral_exponent_.has_value(); }

  std::string name() const override { return "p_mean_malfare"; }
  std::size_t dimension() const override { return 1; }
  GainVector Evaluate(std::span<const std::int64_t> utilities,
                      std::span<const Rational> weights,
                      std::size_t agent) const override;

 private:
  double p_;
  std::optional<unsigned> integral_exponent_;
};

// Always 0: every agent ties, so the highest index wins each round.
class ConstantGain final : public GainFunction {
 public:
  std::string name() const override { return "constant"; }
  std::size_t dimension() const override { return 1; }
  GainVector Evaluate(std::span<const std::int64_t> utilities,
                      std::span<const Rational> weights,
                      std::size_t agent) const override;
};

// Largest index among the lexicographic maxima. Throws
// Error(kContractViolation) on an empty list or mismatched dimensions.
std::size_t SelectAgent(std::span<const GainVector> gains);

using CriterionValue = std::vector<Scalar>;

// Total preorder over utility vectors of one instance.
class JusticeCriterion {
 public:
  virtual ~JusticeCriterion() = default;

  virtual std::string name() const = 0;

  // Scalar summary used for reporting and for exact equality checks.
  virtual CriterionValue Value(std::span<const std::int64_t> utilities,
                               std::span<const Rational> weights) const = 0;

  // greater means x is strictly better than y. Always the lexicographic
  // order of Value(), reversed when !maximizes().
  std::weak_ordering Compare(std::span<const std::int64_t> x,
                                     std::span<const std::int64_t> y,
                                     std::span<const Rational> weights) const;

  // Whether larger Value() is better (false for malfare).
  virtual bool maximizes() const { return true; }
};

// Sum of utilities.
class UtilitarianCriterion final : public JusticeCriterion {
 public:
  std::string name() const override { return "usw"; }
  CriterionValue Value(std::span<const std::int64_t> utilities,
                       std::span<const Rational> weights) const override;
};

// Ascending weighted utility vector, compared lexicographically.
class WeightedLeximinCriterion final : public JusticeCriterion {
 public:
  std::string name() const override { return "leximin"; }
  CriterionValue Value(std::span<const std::int64_t> utilities,
                       std::span<const Rational> weights) const override;
};

// sum_i w_i c_i^p, smaller is better.
class WeightedPMalfareCriterion final : public JusticeCriterion {
 public:
  explicit WeightedPMalfareCriterion(double p);

  double p() const { return p_; }
  bool exact() const { return integral_exponent_.has_value(); }

  std::string name() const override { return "malfare"; }
  CriterionValue Value(std::span<const std::int64_t> utilities,
                       std::span<const Rational> weights) const override;
  bool maximizes() const override { return false; }

 private:
  double p_;
  std::optional<unsigned> integral_exponent_;
};

enum class CriterionKind { kLeximin, kMalfare, kUsw };

std::optional<CriterionKind> ParseCriterionKind(std::string_view name);
const char* CriterionKindName(CriterionKind kind);

// Throws Error(kConfiguration) when malfare is requested without p, and
// Error(kDomain) when p < 1.
std::unique_ptr<JusticeCriterion> MakeCriterion(CriterionKind kind,
                                                std::optional<double> p);
// The gain the solver pairs with each criterion (usw -> ConstantGain).
std::unique_ptr<GainFunction> MakeGain(CriterionKind kind,
                                       std::optional<double> p);

// Throws Error(kContractViolation) unless both allocations are complete and
// match the instance.
std::weak_ordering CriterionCompare(const JusticeCriterion& criterion,
                                    const Instance& instance,
                                    const Allocation& x, const Allocation& y);

struct TraceStep {
  std::size_t iteration = 0;
  std::size_t agent = 0;
  std::size_t chore = 0;
  GainVector gain;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct YankeeSwapResult {
  Decomposition decomposition;
  Allocation allocation;
  std::vector<TraceStep> trace;
  std::size_t clean_size = 0;
};

// Clean phase followed by greedy assignment of the remaining chores, each to
// the agent picked by SelectAgent over the cached gains (the lowest-index
// pool chore is handed out first). Post-run invariants are checked and a
// failure raises Error(kInternal).
YankeeSwapResult RunGeneralYankeeSwap(const Instance& instance,
                                      const GainFunction& gain);

// Checks completeness and the decomposition conditions. Returns the first
// problem found, or nullopt.
std::optional<std::string> FindResultViolation(const Instance& instance,
                                               const YankeeSwapResult& result);

}  // namespace chorealloc

#endif  // CHOREALLOC_YANKEE_SWAP_HPP_
