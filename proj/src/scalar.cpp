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

#include "chorealloc/scalar.hpp"

#include <charconv>
#include <cmath>

namespace chorealloc {

double Scalar::ToDouble() const {
  if (is_exact()) return exact().convert_to<double>();
  return std::get<double>(value_);
}

std::string Scalar::ToString() const {
  if (is_exact()) return FormatRational(exact());
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer),
                                 std::get<double>(value_));
  return std::string(buffer, end);
}

std::weak_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Compare(a.exact(), b.exact());
  const double x = a.ToDouble();
  const double y = b.ToDouble();
  if (std::fabs(x - y) <= kApproxTolerance) {
    return std::weak_ordering::equivalent;
  }
  return x < y ? std::weak_ordering::less : std::weak_ordering::greater;
}

}  // namespace chorealloc
