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

#ifndef DUALMOD_TESTS_SUPPORT_ORACLES_H_
#define DUALMOD_TESTS_SUPPORT_ORACLES_H_

#include <span>
#include <vector>

#include "dualmod/decomposition.h"
#include "dualmod/instance.h"
#include "dualmod/permutation.h"
#include "dualmod/rational.h"

// Reference implementations used only to cross-check the library. They
// evaluate set functions directly, without tables or the enumeration kernels.
namespace dualmod::testing {

// Repeatedly peels the union of all densest subsets of the residual.
DensityDecomposition NaiveDecomposition(const DualModularInstance& inst);

// An exact allocation with x_u = rho*_u y_u. On each part S_i, y lies in
// P(g_i) and in P(h#), where h = f_i / rho_i and h#(D) = h(S_i) - h(S_i \ D).
// That intersection is the polymatroid {y >= 0 : y(B) <= k(B)} with
// k(B) = min_{C in B} g_i(C) + h#(B \ C). For each u in S_i an exact simplex
// finds a point of P(k) maximizing y(S_i) first and y_u second; y is their
// average, so each coordinate is positive when f is strictly monotone.
Allocation ExactLocallyMaximinAllocation(const DualModularInstance& inst,
                                         const DensityDecomposition& dec,
                                         const Permutation& order);

// Sign of sum_v c_v log(b_v) for positive rationals b_v, computed exactly by
// comparing prod b_v^(L c_v) against 1 with L the common denominator.
int SignOfLogSum(std::span<const Rational> base,
                 std::span<const Rational> coeff);

// x(S) - gamma y(S) maximized over all S by enumeration.
Rational HockeyStickBrute(std::span<const Rational> x,
                          std::span<const Rational> y, const Rational& gamma);

// Number of subsets attaining max_S alpha f(S) - g(S).
int CountBestResponses(const DualModularInstance& inst, const Rational& alpha);

// Prefix S_1 u ... u S_i for the largest i with rho_i >= gamma.
Mask PrefixAtLeast(const DensityDecomposition& dec, const Rational& gamma);

// Maps a subset of the residual ground set V \ removed (elements renumbered
// in increasing order) back to a subset of V, |V| = n.
Mask LiftResidualMask(Mask s, Mask removed, int n);

}  // namespace dualmod::testing

#endif  // DUALMOD_TESTS_SUPPORT_ORACLES_H_
