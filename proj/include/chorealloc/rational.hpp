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

#ifndef CHOREALLOC_RATIONAL_HPP_
#define CHOREALLOC_RATIONAL_HPP_

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chorealloc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "num/den" or a bare integer. Whitespace is not accepted.
// Throws Error(kParse) on malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical "num/den" form with den > 0 and gcd(num, den) = 1.
std::string FormatRational(const Rational& value);

inline std::strong_ordering Compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace chorealloc

#endif  // CHOREALLOC_RATIONAL_HPP_
