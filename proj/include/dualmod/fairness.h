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

#ifndef DUALMOD_FAIRNESS_H_
#define DUALMOD_FAIRNESS_H_

#include <optional>
#include <span>
#include <vector>

#include "dualmod/decomposition.h"
#include "dualmod/instance.h"
#include "dualmod/permutation.h"
#include "dualmod/rational.h"

namespace dualmod {

struct DensityThreshold {
  Rational density;
  Mask level_set = 0;     // elements with induced density >= density
  Rational reward_slack;  // x(S) - f(S)
  Rational cost_slack;    // g(S) - y(S)
  bool tight() const { return sgn(reward_slack) == 0 && sgn(cost_slack) == 0; }
};

struct MaximinReport {
  bool is_locally_maximin = true;
  std::vector<DensityThreshold> thresholds;  // strictly decreasing densities
  std::optional<int> first_violation;        // index into thresholds
};

MaximinReport IsLocallyMaximin(const DualModularInstance& inst,
                               const Allocation& a);

enum class LexOrder { kBetter, kEqual, kWorse };

// Compares density vectors sorted non-increasingly; smaller is better.
LexOrder LexCompare(std::span<const Rational> a, std::span<const Rational> b);

struct EquivalenceReport {
  bool densities_match = false;  // induced densities equal rho* exactly
  bool locally_maximin = false;
  bool agree = false;  // the two conditions above coincide
  LexOrder versus_optimum = LexOrder::kEqual;
  // Lex order is consistent: equal when densities match, worse otherwise.
  bool lex_consistent = false;
  MaximinReport maximin;
};

EquivalenceReport CheckEquivalence(const DualModularInstance& inst,
                                   const Allocation& a,
                                   const DensityDecomposition& dec);

}  // namespace dualmod

#endif  // DUALMOD_FAIRNESS_H_
