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

#ifndef DUALMOD_DECOMPOSITION_H_
#define DUALMOD_DECOMPOSITION_H_

#include <vector>

#include "dualmod/divergence.h"
#include "dualmod/instance.h"
#include "dualmod/kernels.h"
#include "dualmod/rational.h"

namespace dualmod {

inline constexpr int kDefaultDecompositionLimit = 18;

struct DensestSubset {
  Mask subset = 0;
  Rational density = 0;
};

// Union of all maximizers of f(S)/g(S) over nonempty S, found by exhaustive
// enumeration. Throws InfiniteDensity when some g(S) = 0 < f(S).
DensestSubset MaximalDensestSubset(const DualModularInstance& inst,
                                   int max_n = kDefaultDecompositionLimit,
                                   Exec exec = Exec::kParallel);

// The instance on V \ S with marginal functions f(. | S), g(. | S).
DualModularInstance ResidualInstance(const DualModularInstance& inst, Mask s);

struct DensityDecomposition {
  std::vector<Mask> parts;               // S_1, ..., S_k
  std::vector<Rational> densities;       // rho_1 > ... > rho_k
  std::vector<Rational> density_vector;  // rho*_u, indexed by element

  // S_1 u ... u S_i (i parts, 0 <= i <= k).
  Mask Prefix(int i) const;
};

DensityDecomposition DecomposeDensity(const DualModularInstance& inst,
                                      int max_n = kDefaultDecompositionLimit,
                                      Exec exec = Exec::kParallel);

// sum_i g(S_i | S_<i) * theta(rho_i): the optimum of the convex program.
Value OptimalObjective(const DensityDecomposition& dec,
                       const DualModularInstance& inst,
                       const DivergenceKind& kind);

}  // namespace dualmod

#endif  // DUALMOD_DECOMPOSITION_H_
