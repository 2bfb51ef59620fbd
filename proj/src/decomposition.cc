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

#include "dualmod/decomposition.h"

#include "dualmod/error.h"

namespace dualmod {
namespace {

void CheckLimit(int n, int max_n) {
  if (n > max_n) {
    throw Error(
        ErrorCode::kGroundSetTooLarge,
        "exact decomposition enumerates 2^n subsets; n = " + std::to_string(n) +
            " exceeds limit " + std::to_string(max_n));
  }
}

DensestSubset ScanLevel(const std::vector<Rational>& f,
                        const std::vector<Rational>& g, Mask residual,
                        Mask prefix, Exec exec) {
  const DensestScan scan = ScanDensest(f, g, residual, prefix, exec);
  if (scan.infinite) {
    throw Error(ErrorCode::kInfiniteDensity,
                "subset with zero cost and positive reward has infinite "
                "density; perturb g to make it strictly monotone",
                std::nullopt, *scan.infinite);
  }
  if (!scan.found) {
    throw Error(ErrorCode::kDomainError,
                "no nonempty subset has positive cost");
  }
  // The union of densest subsets is itself densest.
  const Rational fu = f[scan.union_mask | prefix] - f[prefix];
  const Rational gu = g[scan.union_mask | prefix] - g[prefix];
  if (sgn(gu) <= 0 || fu != scan.density * gu) {
    throw Error(ErrorCode::kStructure,
                "union of densest subsets is not densest; f or g is not "
                "dual-modular");
  }
  return {scan.union_mask, scan.density};
}

}  // namespace

DensestSubset MaximalDensestSubset(const DualModularInstance& inst, int max_n,
                                   Exec exec) {
  CheckLimit(inst.size(), max_n);
  const std::vector<Rational> f = Tabulate(inst.f(), max_n);
  const std::vector<Rational> g = Tabulate(inst.g(), max_n);
  return ScanLevel(f, g, inst.ground().Full(), 0, exec);
}

DualModularInstance ResidualInstance(const DualModularInstance& inst, Mask s) {
  if (!inst.ground().IsValid(s)) {
    throw Error(ErrorCode::kInvalidArgument, "subset outside the ground set");
  }
  if (s == inst.ground().Full()) {
    throw Error(ErrorCode::kEmptyResidual, "residual of the full set is empty");
  }
  if (s == 0) return inst;
  std::vector<int> elements;
  std::vector<std::string> labels;
  for (int u = 0; u < inst.size(); ++u) {
    if (s & Bit(u)) continue;
    elements.push_back(u);
    labels.push_back(inst.ground().label(u));
  }
  return DualModularInstance(GroundSet(std::move(labels)),
                             SetFunction::Residual(inst.f(), s, elements),
                             SetFunction::Residual(inst.g(), s, elements));
}

Mask DensityDecomposition::Prefix(int i) const {
  Mask m = 0;
  for (int j = 0; j < i; ++j) m |= parts[j];
  return m;
}

DensityDecomposition DecomposeDensity(const DualModularInstance& inst,
                                      int max_n, Exec exec) {
  const int n = inst.size();
  CheckLimit(n, max_n);
  const std::vector<Rational> f = Tabulate(inst.f(), max_n);
  const std::vector<Rational> g = Tabulate(inst.g(), max_n);
  DensityDecomposition dec;
  dec.density_vector.resize(n);
  Mask prefix = 0;
  const Mask full = inst.ground().Full();
  while (prefix != full) {
    const DensestSubset level = ScanLevel(f, g, full & ~prefix, prefix, exec);
    if (!dec.densities.empty() && !(level.density < dec.densities.back())) {
      throw Error(ErrorCode::kStructure,
                  "decomposition densities are not strictly decreasing");
    }
    dec.parts.push_back(level.subset);
    dec.densities.push_back(level.density);
    for (int u : Elements(level.subset)) dec.density_vector[u] = level.density;
    prefix |= level.subset;
  }
  return dec;
}

Value OptimalObjective(const DensityDecomposition& dec,
                       const DualModularInstance& inst,
                       const DivergenceKind& kind) {
  Rational exact = 0;
  double approx = 0;
  Mask before = 0;
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const Rational cost = inst.g().Marginal(dec.parts[i], before);
    const Value t = kind.Theta(dec.densities[i]);
    if (t.is_exact()) {
      exact += cost * t.exact();
    } else {
      approx += cost.get_d() * t.approx();
    }
    before |= dec.parts[i];
  }
  if (kind.is_exact()) return Value(exact);
  return Value(approx + exact.get_d());
}

}  // namespace dualmod
