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

#ifndef DUALMOD_INSTANCE_H_
#define DUALMOD_INSTANCE_H_

#include <optional>
#include <string>
#include <vector>

#include "dualmod/kernels.h"
#include "dualmod/rational.h"
#include "dualmod/set_function.h"

namespace dualmod {

inline constexpr int kDefaultVerifyLimit = 12;

// A ground set with a supermodular reward f and a submodular cost g. The
// constructor checks only the cheap invariants (sizes, f(V) >= 0, g(V) > 0,
// the normalized flag); the modularity properties are the job of
// VerifyDualModularity.
class DualModularInstance {
 public:
  DualModularInstance(GroundSet ground, SetFunction f, SetFunction g,
                      bool normalized = false);

  const GroundSet& ground() const { return ground_; }
  const SetFunction& f() const { return f_; }
  const SetFunction& g() const { return g_; }
  bool normalized() const { return normalized_; }
  int size() const { return ground_.size(); }

 private:
  GroundSet ground_;
  SetFunction f_;
  SetFunction g_;
  bool normalized_;
};

Rational Evaluate(const SetFunction& h, Mask s);
Rational Marginal(const SetFunction& h, Mask s, Mask a);

// One structural property; on failure `witness` holds the offending pair:
// (A, B) for the modularity checks and (A, A + u) for monotonicity.
struct PropertyCheck {
  bool holds = true;
  std::optional<MaskPair> witness;
};

struct StructureReport {
  PropertyCheck f_supermodular;
  PropertyCheck f_monotone;
  PropertyCheck f_strictly_monotone;
  PropertyCheck g_submodular;
  PropertyCheck g_monotone;
  PropertyCheck g_strictly_monotone;

  // Monotone supermodular f with strictly monotone submodular g.
  bool IsDualModular() const {
    return f_supermodular.holds && f_monotone.holds && g_submodular.holds &&
           g_strictly_monotone.holds;
  }
};

// Exhaustive check over all subset pairs: O(4^n) table lookups.
StructureReport VerifyDualModularity(const DualModularInstance& inst,
                                     int max_n = kDefaultVerifyLimit,
                                     Exec exec = Exec::kParallel);

SetFunction PerturbStrict(const SetFunction& g, const Rational& eta);

// (V; g-bar, f-bar) with g-bar(S) = g(V) - g(V \ S) as the reward and
// f-bar(S) = f(V) - f(V \ S) as the cost. Requires f strictly monotone.
DualModularInstance ComplementInstance(const DualModularInstance& inst,
                                       int max_n = kDefaultVerifyLimit);

DualModularInstance Normalize(const DualModularInstance& inst);

struct Extremes {
  Rational f_min, f_max, g_min, g_max;
  bool cross_checked = false;  // permutation brute force ran (n <= 7)
};

// Extremal permutation marginals. For supermodular f they sit at the empty
// and full prefixes: f_min = min f({u}), f_max = max f({u} | V - u); the
// submodular g is the mirror image.
Extremes ComputeExtremes(const DualModularInstance& inst);

}  // namespace dualmod

#endif  // DUALMOD_INSTANCE_H_
