// Copyright 2026 The dualmod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualmod/rational.h"

#include <cctype>

#include "dualmod/error.h"

namespace dualmod {
namespace {

bool IsInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos
                                   ? std::string_view("1")
                                   : text.substr(slash + 1);
  if (!IsInteger(num) || !IsInteger(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kSchema,
                "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kSchema,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string ToString(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<double> ToDoubles(std::span<const Rational> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(v.get_d());
  return out;
}

Rational Sum(std::span<const Rational> values) {
  Rational s = 0;
  for (const Rational& v : values) s += v;
  return s;
}

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema:
      return "SchemaError";
    case ErrorCode::kIo:
      return "IoError";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kGroundSetTooLarge:
      return "GroundSetTooLarge";
    case ErrorCode::kNegativeEta:
      return "NegativeEta";
    case ErrorCode::kNotStrictlyMonotone:
      return "NotStrictlyMonotone";
    case ErrorCode::kZeroTotal:
      return "ZeroTotal";
    case ErrorCode::kZeroCostCoordinate:
      return "ZeroCostCoordinate";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kInfiniteDensity:
      return "InfiniteDensity";
    case ErrorCode::kEmptyResidual:
      return "EmptyResidual";
    case ErrorCode::kWeightSumMismatch:
      return "WeightSumMismatch";
    case ErrorCode::kAlphaOutOfRange:
      return "AlphaOutOfRange";
    case ErrorCode::kNotLinearCost:
      return "NotLinearCost";
    case ErrorCode::kStructure:
      return "StructureError";
  }
  return "Error";
}

}  // namespace dualmod
