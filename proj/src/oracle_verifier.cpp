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

#include "chorealloc/oracle_verifier.hpp"

#include <limits>

namespace chorealloc {
namespace {

std::string VectorToString(const UtilityVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

const char* OrderName(std::weak_ordering order) {
  if (order < 0) return "less";
  if (order > 0) return "greater";
  return "equal";
}

int Sign(std::weak_ordering order) {
  if (order < 0) return -1;
  if (order > 0) return 1;
  return 0;
}

void CheckLengths(std::size_t expected, const UtilityVector& v) {
  if (v.size() != expected) {
    Fail(ErrorKind::kContractViolation,
         "probe vector of length " + std::to_string(v.size()) + " for " +
             std::to_string(expected) + " weights");
  }
}

}  // namespace

std::uint64_t SaturatingPow(std::uint64_t base, std::uint64_t exponent) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t k = 0; k < exponent; ++k) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

BruteForceResult BruteForceOptimal(const Instance& instance,
                                   const JusticeCriterion& criterion,
                                   const EnumerationBudget& budget) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_chores();
  const std::uint64_t required = SaturatingPow(n, m);
  if (required > budget.max_allocations) {
    throw BudgetExceeded(required, budget.max_allocations);
  }
  std::vector<int> owners(m, 0);
  std::vector<ChoreSet> bundles(n, ChoreSet(m));
  UtilityVector utilities(n);
  BruteForceResult best{{}, Allocation(n, m), {}, 0};
  bool have_best = false;
  while (true) {
    for (ChoreSet& bundle : bundles) bundle.reset();
    for (std::size_t o = 0; o < m; ++o) bundles[owners[o]].set(o);
    for (std::size_t i = 0; i < n; ++i) {
      utilities[i] = -instance.oracle(i).Cost(bundles[i]);
    }
    ++best.visited;
    if (!have_best ||
        criterion.Compare(utilities, best.utilities, instance.weights()) > 0) {
      have_best = true;
      best.utilities = utilities;
      best.witness = Allocation::FromOwners(n, owners);
    }
    std::size_t digit = 0;
    while (digit < m && owners[digit] == static_cast<int>(n) - 1) {
      owners[digit++] = 0;
    }
    if (digit == m) break;
    ++owners[digit];
  }
  best.value = criterion.Value(best.utilities, instance.weights());
  return best;
}

std::size_t BruteForceMaxCleanSize(const Instance& instance,
                                   const EnumerationBudget& budget) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_chores();
  const std::uint64_t required = SaturatingPow(n + 1, m);
  if (required > budget.max_allocations) {
    throw BudgetExceeded(required, budget.max_allocations);
  }
  // digit 0 is the pool, digit a + 1 is agent a.
  std::vector<std::size_t> digits(m, 0);
  std::vector<ChoreSet> bundles(n, ChoreSet(m));
  std::size_t best = 0;
  while (true) {
    std::size_t allocated = 0;
    for (std::size_t d : digits) allocated += d != 0;
    if (allocated > best) {
      for (ChoreSet& bundle : bundles) bundle.reset();
      for (std::size_t o = 0; o < m; ++o) {
        if (digits[o] != 0) bundles[digits[o] - 1].set(o);
      }
      bool clean = true;
      for (std::size_t i = 0; i < n && clean; ++i) {
        clean = instance.oracle(i).Cost(bundles[i]) == 0;
      }
      if (clean) best = allocated;
    }
    std::size_t digit = 0;
    while (digit < m && digits[digit] == n) digits[digit++] = 0;
    if (digit == m) break;
    ++digits[digit];
  }
  return best;
}

std::optional<Counterexample> CheckC1(const JusticeCriterion& criterion,
                                      std::span<const Rational> weights,
                                      std::span<const VectorPair> pairs) {
  for (const VectorPair& pair : pairs) {
    CheckLengths(weights.size(), pair.x);
    CheckLengths(weights.size(), pair.y);
    bool x_dominates = true;
    bool y_dominates = true;
    for (std::size_t h = 0; h < weights.size(); ++h) {
      x_dominates = x_dominates && pair.x[h] >= pair.y[h];
      y_dominates = y_dominates && pair.y[h] >= pair.x[h];
    }
    if (!x_dominates && !y_dominates) continue;
    const UtilityVector& high = x_dominates ? pair.x : pair.y;
    const UtilityVector& low = x_dominates ? pair.y : pair.x;
    const std::weak_ordering order = criterion.Compare(high, low, weights);
    const bool identical = high == low;
    if (order < 0 || (order == 0) != identical) {
      Counterexample cx;
      cx.condition = "C1";
      cx.x = high;
      cx.y = low;
      cx.weights.assign(weights.begin(), weights.end());
      cx.detail = criterion.name() + " ranks dominating " +
                  VectorToString(high) + " as " + OrderName(order) +
                  " than " + VectorToString(low);
      return cx;
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> CheckG1(const GainFunction& gain,
                                      const JusticeCriterion& criterion,
                                      std::span<const Rational> weights,
                                      std::span<const AgentPairProbe> probes) {
  for (const AgentPairProbe& probe : probes) {
    CheckLengths(weights.size(), probe.x);
    if (probe.i >= weights.size() || probe.j >= weights.size()) {
      Fail(ErrorKind::kContractViolation, "probe agent out of range");
    }
    const GainVector gain_i = gain.Evaluate(probe.x, weights, probe.i);
    const GainVector gain_j = gain.Evaluate(probe.x, weights, probe.j);
    UtilityVector y = probe.x;
    UtilityVector z = probe.x;
    --y[probe.i];
    --z[probe.j];
    const std::weak_ordering gain_order = LexCompare(gain_i, gain_j);
    const std::weak_ordering psi_order = criterion.Compare(y, z, weights);
    if (Sign(gain_order) != Sign(psi_order)) {
      Counterexample cx;
      cx.condition = "G1";
      cx.x = probe.x;
      cx.y = y;
      cx.i = probe.i;
      cx.j = probe.j;
      cx.weights.assign(weights.begin(), weights.end());
      cx.gain_i = gain_i;
      cx.gain_j = gain_j;
      cx.detail = "at x=" + VectorToString(probe.x) + " gain of agent " +
                  std::to_string(probe.i) + " is " + OrderName(gain_order) +
                  " than agent " + std::to_string(probe.j) +
                  " but charging agent " + std::to_string(probe.i) + " is " +
                  OrderName(psi_order) + " under " + criterion.name();
      return cx;
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> CheckG2(
    const GainFunction& gain, std::span<const Rational> weights,
    std::span<const GainMonotonicityProbe> probes) {
  for (const GainMonotonicityProbe& probe : probes) {
    CheckLengths(weights.size(), probe.x);
    CheckLengths(weights.size(), probe.y);
    if (probe.i >= weights.size()) {
      Fail(ErrorKind::kContractViolation, "probe agent out of range");
    }
    const bool x_higher = probe.x[probe.i] >= probe.y[probe.i];
    const UtilityVector& high = x_higher ? probe.x : probe.y;
    const UtilityVector& low = x_higher ? probe.y : probe.x;
    const GainVector gain_high = gain.Evaluate(high, weights, probe.i);
    const GainVector gain_low = gain.Evaluate(low, weights, probe.i);
    const std::weak_ordering order = LexCompare(gain_high, gain_low);
    const bool tied = high[probe.i] == low[probe.i];
    if (order < 0 || (tied && order != 0)) {
      Counterexample cx;
      cx.condition = "G2";
      cx.x = high;
      cx.y = low;
      cx.i = probe.i;
      cx.j = probe.i;
      cx.weights.assign(weights.begin(), weights.end());
      cx.gain_i = gain_high;
      cx.gain_j = gain_low;
      cx.detail = "gain of agent " + std::to_string(probe.i) + " at " +
                  VectorToString(high) + " is " + OrderName(order) +
                  " than at " + VectorToString(low);
      return cx;
    }
  }
  return std::nullopt;
}

std::vector<UtilityVector> UtilityGrid(std::size_t num_agents,
                                       std::int64_t floor) {
  std::vector<UtilityVector> grid;
  UtilityVector current(num_agents, floor);
  while (true) {
    grid.push_back(current);
    std::size_t k = num_agents;
    while (k > 0 && current[k - 1] == 0) current[--k] = floor;
    if (k == 0) break;
    ++current[k - 1];
  }
  return grid;
}

std::vector<std::vector<Rational>> WeightGrid(
    std::size_t num_agents, std::span<const Rational> values) {
  std::vector<std::vector<Rational>> grid;
  if (values.empty()) return grid;
  std::vector<std::size_t> index(num_agents, 0);
  while (true) {
    std::vector<Rational> weights;
    weights.reserve(num_agents);
    for (std::size_t k : index) weights.push_back(values[k]);
    grid.push_back(std::move(weights));
    std::size_t k = num_agents;
    while (k > 0 && index[k - 1] == values.size() - 1) index[--k] = 0;
    if (k == 0) break;
    ++index[k - 1];
  }
  return grid;
}

namespace {

// The grid detects failures on cached values and replays the single probe
// through the public check to build the record; both must agree.
GridReport Replayed(GridReport report) {
  if (!report.counterexample) {
    Fail(ErrorKind::kInternal, "grid failure did not replay");
  }
  return report;
}

}  // namespace

GridReport CheckConditionsOnGrid(const GainFunction* gain,
                                 const JusticeCriterion& criterion,
                                 std::size_t max_agents, std::int64_t floor,
                                 std::span<const Rational> weight_values) {
  GridReport report;
  for (std::size_t n = 1; n <= max_agents; ++n) {
    const std::vector<UtilityVector> grid = UtilityGrid(n, floor);
    // One step below the floor as well, for the G1 charges. Index of a
    // vector v is sum_h (v_h - floor + 1) * base^(n-1-h), matching the
    // order UtilityGrid emits.
    const std::vector<UtilityVector> extended = UtilityGrid(n, floor - 1);
    const std::int64_t base = 2 - floor;
    auto index_of = [&](const UtilityVector& v) {
      std::size_t index = 0;
      for (std::int64_t entry : v) {
        index = index * base + static_cast<std::size_t>(entry - floor + 1);
      }
      return index;
    };
    for (const std::vector<Rational>& weights : WeightGrid(n, weight_values)) {
      // Criterion values and gains are pure functions of (vector, weights),
      // so each is evaluated once per weight vector.
      std::vector<CriterionValue> values;
      values.reserve(extended.size());
      for (const UtilityVector& v : extended) {
        values.push_back(criterion.Value(v, weights));
      }
      auto compare = [&](const UtilityVector& a, const UtilityVector& b) {
        const std::weak_ordering order =
            LexCompare(values[index_of(a)], values[index_of(b)]);
        return criterion.maximizes() ? order : 0 <=> order;
      };
      for (const UtilityVector& x : grid) {
        for (const UtilityVector& y : grid) {
          bool dominated = true;
          for (std::size_t h = 0; h < n && dominated; ++h) {
            dominated = y[h] <= x[h];
          }
          if (!dominated) continue;
          ++report.checks;
          const std::weak_ordering order = compare(x, y);
          if (order < 0 || (order == 0) != (x == y)) {
            const VectorPair pair{x, y};
            report.counterexample = CheckC1(criterion, weights, {&pair, 1});
            return Replayed(std::move(report));
          }
        }
      }
      if (gain == nullptr) continue;
      std::vector<std::vector<GainVector>> gains(extended.size());
      for (const UtilityVector& x : grid) {
        auto& row = gains[index_of(x)];
        for (std::size_t i = 0; i < n; ++i) {
          row.push_back(gain->Evaluate(x, weights, i));
        }
      }
      for (const UtilityVector& x : grid) {
        const auto& row = gains[index_of(x)];
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            ++report.checks;
            UtilityVector y = x;
            UtilityVector z = x;
            --y[i];
            --z[j];
            if (Sign(LexCompare(row[i], row[j])) != Sign(compare(y, z))) {
              const AgentPairProbe probe{x, i, j};
              report.counterexample =
                  CheckG1(*gain, criterion, weights, {&probe, 1});
              return Replayed(std::move(report));
            }
          }
          // y agrees with x only at i (or not even there), so locality is
          // exercised together with monotonicity.
          for (std::int64_t v = floor; v <= 0; ++v) {
            UtilityVector y = x;
            for (std::size_t h = 0; h < n; ++h) y[h] = floor - x[h];
            y[i] = v;
            ++report.checks;
            const bool x_higher = x[i] >= v;
            const GainVector& high = x_higher ? row[i] : gains[index_of(y)][i];
            const GainVector& low = x_higher ? gains[index_of(y)][i] : row[i];
            const std::weak_ordering order = LexCompare(high, low);
            if (order < 0 || (x[i] == v && order != 0)) {
              const GainMonotonicityProbe probe{x, y, i};
              report.counterexample = CheckG2(*gain, weights, {&probe, 1});
              return Replayed(std::move(report));
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace chorealloc
