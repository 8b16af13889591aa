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

#ifndef CHOREALLOC_IO_HPP_
#define CHOREALLOC_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chorealloc/core_model.hpp"
#include "chorealloc/oracle_verifier.hpp"
#include "chorealloc/yankee_swap.hpp"

namespace chorealloc {

inline constexpr int kDocumentVersion = 1;

// Instance documents:
//   {"version": 1, "chores": ["o1", ...],
//    "agents": [{"weight": "1/2",
//                "cost": {"family": "approval_cap", "approved": [...],
//                         "cap": 1}}, ...]}
// Other cost families: {"family": "partition_cap", "categories":
// [{"chores": [...], "cap": k}, ...]} and {"family": "explicit", "costs":
// {"": 0, "o1": 1, "o1,o2": 1, ...}} keyed by comma-joined labels sorted in
// byte order; every subset must be present.
//
// Throws Error(kParse) for malformed JSON or wrong field types and
// Error(kValidation) for semantic problems; the message names the field.
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& instance);

// Canonical key of an explicit-table subset.
std::string SubsetKey(const Instance& instance, const ChoreSet& subset);
std::string SubsetKey(std::span<const std::string> labels, std::uint32_t mask);

struct ResultDocument {
  struct AgentEntry {
    Rational weight;
    std::vector<std::string> clean;
    std::vector<std::string> supplementary;
    std::int64_t utility = 0;
    Rational weighted_utility;

    friend bool operator==(const AgentEntry&, const AgentEntry&) = default;
  };
  struct TraceEntry {
    std::size_t iteration = 0;
    std::size_t agent = 0;
    std::string chore;
    GainVector gain;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
  };

  std::string criterion;
  std::optional<double> p;
  CriterionValue value;
  std::size_t clean_size = 0;
  std::vector<AgentEntry> agents;
  std::optional<std::vector<TraceEntry>> trace;

  friend bool operator==(const ResultDocument&,
                         const ResultDocument&) = default;
};

ResultDocument MakeResultDocument(const Instance& instance,
                                  const YankeeSwapResult& result,
                                  const JusticeCriterion& criterion,
                                  std::optional<double> p, bool include_trace);
std::string SerializeResult(const ResultDocument& result);
ResultDocument ParseResult(std::string_view text);

// Re-checks a (possibly reloaded) result against its instance: every chore
// assigned once, c_i(clean_i) = 0, c_i(bundle_i) = |supplementary_i|, the
// reported utilities, and the trace length. Returns the first problem.
std::optional<std::string> CheckResultDocument(const Instance& instance,
                                               const ResultDocument& result);

std::string SerializeCounterexample(const Counterexample& counterexample);

struct GeneratorOptions {
  std::size_t num_agents = 2;
  std::size_t num_chores = 3;
  // Any of "approval_cap", "partition_cap", "explicit"; one is drawn per
  // agent.
  std::vector<std::string> families = {"approval_cap", "partition_cap"};
  // Weights are a/b with a, b uniform in [1, weight_skew].
  std::uint64_t weight_skew = 1;
  // When non-empty, weights are drawn uniformly from this list instead.
  std::vector<Rational> weight_values;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxGeneratedExplicitChores = 16;

// Deterministic for fixed options on every platform (bounded draws are taken
// straight from the mt19937_64 output). Throws Error(kValidation) for n = 0,
// unknown families or an explicit family with m > 16.
Instance GenerateInstance(const GeneratorOptions& options);

}  // namespace chorealloc

#endif  // CHOREALLOC_IO_HPP_
