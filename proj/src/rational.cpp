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

#include "chorealloc/rational.hpp"

#include <cctype>

#include "chorealloc/errors.hpp"

namespace chorealloc {
namespace {

BigInt ParseInteger(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    Fail(ErrorKind::kParse, "invalid rational \"" + std::string(whole) + "\"");
  }
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      Fail(ErrorKind::kParse,
           "invalid rational \"" + std::string(whole) + "\"");
    }
  }
  BigInt value(std::string(text.substr(pos)));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text, text));
  }
  BigInt num = ParseInteger(text.substr(0, slash), text);
  BigInt den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) {
    Fail(ErrorKind::kParse,
         "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string FormatRational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace chorealloc
