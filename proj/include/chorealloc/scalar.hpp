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

#ifndef CHOREALLOC_SCALAR_HPP_
#define CHOREALLOC_SCALAR_HPP_

#include <compare>
#include <string>
#include <variant>

#include "chorealloc/rational.hpp"

namespace chorealloc {

// Absolute tolerance used whenever at least one operand is floating point.
inline constexpr double kApproxTolerance = 1e-12;

// A gain or criterion entry: exact rational when the producing formula allows
// it, floating point otherwise (non-integer malfare exponents). Two exact
// values compare exactly; any comparison involving a double is approximate.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT
  Scalar(double value) : value_(value) {}               // NOLINT
  Scalar(int value) : value_(Rational(value)) {}        // NOLINT

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  // Precondition: is_exact().
  const Rational& exact() const { return std::get<Rational>(value_); }
  double ToDouble() const;

  // "num/den" for exact values, shortest round-trip decimal otherwise.
  std::string ToString() const;

  friend std::weak_ordering operator<=>(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return (a <=> b) == 0;
  }

 private:
  std::variant<Rational, double> value_;
};

}  // namespace chorealloc

#endif  // CHOREALLOC_SCALAR_HPP_
