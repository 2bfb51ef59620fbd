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

#include "dualmod/fairness.h"

#include <algorithm>
#include <functional>

#include "dualmod/error.h"

namespace dualmod {

MaximinReport IsLocallyMaximin(const DualModularInstance& inst,
                               const Allocation& a) {
  const std::vector<Rational> rho = InducedDensities(a);
  const int n = inst.size();
  if (static_cast<int>(rho.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "allocation length does not match the ground set");
  }
  const Permutation order = SortByDensity(rho);
  MaximinReport report;
  Mask level = 0;
  Rational x_sum = 0, y_sum = 0;
  for (int i = 0; i < n; ++i) {
    const int u = order.order()[i];
    level |= Bit(u);
    x_sum += a.x[u];
    y_sum += a.y[u];
    // A threshold closes once the next element has strictly smaller density.
    if (i + 1 < n && rho[order.order()[i + 1]] == rho[u]) continue;
    DensityThreshold t;
    t.density = rho[u];
    t.level_set = level;
    t.reward_slack = x_sum - inst.f().Evaluate(level);
    t.cost_slack = inst.g().Evaluate(level) - y_sum;
    if (!t.tight() && !report.first_violation) {
      report.is_locally_maximin = false;
      report.first_violation = static_cast<int>(report.thresholds.size());
    }
    report.thresholds.push_back(std::move(t));
  }
  return report;
}

LexOrder LexCompare(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "density vectors have different lengths");
  }
  std::vector<Rational> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] < sb[i]) return LexOrder::kBetter;
    if (sa[i] > sb[i]) return LexOrder::kWorse;
  }
  return LexOrder::kEqual;
}

EquivalenceReport CheckEquivalence(const DualModularInstance& inst,
                                   const Allocation& a,
                                   const DensityDecomposition& dec) {
  EquivalenceReport r;
  const std::vector<Rational> rho = InducedDensities(a);
  r.densities_match = rho == dec.density_vector;
  r.maximin = IsLocallyMaximin(inst, a);
  r.locally_maximin = r.maximin.is_locally_maximin;
  r.agree = r.densities_match == r.locally_maximin;
  r.versus_optimum = LexCompare(rho, dec.density_vector);
  r.lex_consistent = r.densities_match ? r.versus_optimum == LexOrder::kEqual
                                       : r.versus_optimum == LexOrder::kWorse;
  return r;
}

}  // namespace dualmod
