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

#ifndef DUALMOD_TESTS_SUPPORT_GENERATORS_H_
#define DUALMOD_TESTS_SUPPORT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "dualmod/instance.h"
#include "dualmod/permutation.h"
#include "dualmod/rational.h"

namespace dualmod::testing {

using Rng = std::mt19937_64;

// p/q in lowest terms.
Rational Q(long p, long q = 1);

// Uniform p/q with 0 <= p <= max_num, 1 <= q <= max_den.
Rational RandomRational(Rng& rng, int max_num, int max_den);
int RandomInt(Rng& rng, int lo, int hi);

struct RandomInstanceOptions {
  // Positive linear lift on f; makes f strictly monotone.
  bool strict_f = true;
  // Add a nonnegative linear term to g (still submodular).
  bool linear_in_g = false;
};

// f = EdgesInside(random weighted graph) + Linear, g = Perturbed(concave of
// cardinality, eta > 0). Always dual-modular.
DualModularInstance RandomInstance(Rng& rng, int n,
                                   const RandomInstanceOptions& opts = {});

// The three-element example with labels a, w, b.
DualModularInstance Sec32Instance();
// Path 1-2-3 with f = EdgesInside, g = cardinality.
DualModularInstance P3Instance();
// Triangle {1,2,3} plus isolated 4; f = 3 EdgesInside, g = cardinality.
DualModularInstance TriIsoInstance();
// f = 2 n1 [S1 in T] + 10 n1 n2 [V in T]; g linear, 1 on S1 and 10 n1 on S2.
DualModularInstance HardnessInstance(int n1, int n2);

Permutation RandomPermutation(Rng& rng, int n);
std::vector<Permutation> AllPermutations(int n);

// Convex combination of `count` random vertices on each side.
Allocation RandomFeasibleAllocation(Rng& rng, const DualModularInstance& inst,
                                    int count);

}  // namespace dualmod::testing

#endif  // DUALMOD_TESTS_SUPPORT_GENERATORS_H_
