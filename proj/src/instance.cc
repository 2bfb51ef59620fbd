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

#include "dualmod/instance.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "dualmod/error.h"

namespace dualmod {

DualModularInstance::DualModularInstance(GroundSet ground, SetFunction f,
                                         SetFunction g, bool normalized)
    : ground_(std::move(ground)),
      f_(std::move(f)),
      g_(std::move(g)),
      normalized_(normalized) {
  const int n = ground_.size();
  if (f_.ground_size() != n || g_.ground_size() != n) {
    throw Error(ErrorCode::kSchema,
                "f and g must be defined on the instance ground set of size " +
                    std::to_string(n));
  }
  const Rational fv = f_.Evaluate(ground_.Full());
  const Rational gv = g_.Evaluate(ground_.Full());
  if (sgn(fv) < 0) throw Error(ErrorCode::kSchema, "f(V) must be >= 0");
  if (sgn(gv) <= 0) throw Error(ErrorCode::kSchema, "g(V) must be > 0");
  if (normalized_ && (fv != 1 || gv != 1)) {
    throw Error(ErrorCode::kSchema,
                "normalized instance needs f(V) = g(V) = 1, got f(V) = " +
                    ToString(fv) + ", g(V) = " + ToString(gv));
  }
}

Rational Evaluate(const SetFunction& h, Mask s) { return h.Evaluate(s); }

Rational Marginal(const SetFunction& h, Mask s, Mask a) {
  return h.Marginal(s, a);
}

namespace {

PropertyCheck FromWitness(std::optional<MaskPair> w) {
  return PropertyCheck{!w.has_value(), w};
}

}  // namespace

StructureReport VerifyDualModularity(const DualModularInstance& inst, int max_n,
                                     Exec exec) {
  const int n = inst.size();
  if (n > max_n) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "verification enumerates 4^n pairs; n = " + std::to_string(n) +
                    " exceeds limit " + std::to_string(max_n));
  }
  const std::vector<Rational> f = Tabulate(inst.f(), max_n);
  const std::vector<Rational> g = Tabulate(inst.g(), max_n);
  StructureReport r;
  r.f_supermodular = FromWitness(
      FindModularityViolation(f, n, Modularity::kSupermodular, exec));
  r.f_monotone = FromWitness(FindMonotonicityViolation(f, n, false, exec));
  r.f_strictly_monotone =
      FromWitness(FindMonotonicityViolation(f, n, true, exec));
  r.g_submodular =
      FromWitness(FindModularityViolation(g, n, Modularity::kSubmodular, exec));
  r.g_monotone = FromWitness(FindMonotonicityViolation(g, n, false, exec));
  r.g_strictly_monotone =
      FromWitness(FindMonotonicityViolation(g, n, true, exec));
  return r;
}

SetFunction PerturbStrict(const SetFunction& g, const Rational& eta) {
  return SetFunction::Perturbed(g, eta);
}

DualModularInstance ComplementInstance(const DualModularInstance& inst,
                                       int max_n) {
  const StructureReport report = VerifyDualModularity(inst, max_n);
  if (!report.f_strictly_monotone.holds || !report.g_strictly_monotone.holds) {
    throw Error(ErrorCode::kNotStrictlyMonotone,
                "complement requires strictly monotone f and g");
  }
  if (!report.IsDualModular()) {
    throw Error(ErrorCode::kStructure,
                "complement requires a dual-modular instance");
  }
  return DualModularInstance(inst.ground(), SetFunction::ComplementOf(inst.g()),
                             SetFunction::ComplementOf(inst.f()),
                             inst.normalized());
}

DualModularInstance Normalize(const DualModularInstance& inst) {
  const Rational fv = inst.f().Evaluate(inst.ground().Full());
  const Rational gv = inst.g().Evaluate(inst.ground().Full());
  if (sgn(fv) <= 0 || sgn(gv) <= 0) {
    throw Error(ErrorCode::kZeroTotal, "normalization needs f(V), g(V) > 0");
  }
  if (fv == 1 && gv == 1) {
    return DualModularInstance(inst.ground(), inst.f(), inst.g(), true);
  }
  return DualModularInstance(inst.ground(),
                             SetFunction::Scaled(inst.f(), 1 / fv),
                             SetFunction::Scaled(inst.g(), 1 / gv), true);
}

Extremes ComputeExtremes(const DualModularInstance& inst) {
  const int n = inst.size();
  const Mask full = inst.ground().Full();
  Extremes e;
  for (int u = 0; u < n; ++u) {
    const Rational f_first = inst.f().Evaluate(Bit(u));
    const Rational f_last = inst.f().Marginal(Bit(u), full & ~Bit(u));
    const Rational g_first = inst.g().Evaluate(Bit(u));
    const Rational g_last = inst.g().Marginal(Bit(u), full & ~Bit(u));
    if (u == 0 || f_first < e.f_min) e.f_min = f_first;
    if (u == 0 || f_last > e.f_max) e.f_max = f_last;
    if (u == 0 || g_last < e.g_min) e.g_min = g_last;
    if (u == 0 || g_first > e.g_max) e.g_max = g_first;
  }
  if (n <= 7) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rational f_lo = e.f_min, f_hi = e.f_max, g_lo = e.g_min, g_hi = e.g_max;
    do {
      Mask prefix = 0;
      for (int u : order) {
        const Rational fm = inst.f().Marginal(Bit(u), prefix);
        const Rational gm = inst.g().Marginal(Bit(u), prefix);
        f_lo = std::min(f_lo, fm);
        f_hi = std::max(f_hi, fm);
        g_lo = std::min(g_lo, gm);
        g_hi = std::max(g_hi, gm);
        prefix |= Bit(u);
      }
    } while (std::next_permutation(order.begin(), order.end()));
    if (f_lo != e.f_min || f_hi != e.f_max || g_lo != e.g_min ||
        g_hi != e.g_max) {
      throw Error(ErrorCode::kStructure,
                  "permutation extremes disagree with the closed forms; the "
                  "instance is not dual-modular");
    }
    e.cross_checked = true;
  }
  return e;
}

}  // namespace dualmod
