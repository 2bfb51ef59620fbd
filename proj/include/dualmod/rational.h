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

#ifndef DUALMOD_RATIONAL_H_
#define DUALMOD_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dualmod {

// Arbitrary-precision rational in lowest terms with a positive denominator.
using Rational = mpq_class;

// Accepts "p/q", "p", and optional leading '-'. Throws Error(kSchema) on
// malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form, always with an explicit denominator ("2/1").
std::string ToString(const Rational& q);

inline double ToDouble(const Rational& q) { return q.get_d(); }

std::vector<double> ToDoubles(std::span<const Rational> values);

Rational Sum(std::span<const Rational> values);

}  // namespace dualmod

#endif  // DUALMOD_RATIONAL_H_
