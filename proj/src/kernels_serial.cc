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

#include "dualmod/kernels.h"

namespace dualmod {

Mask DepositBits(Mask index, Mask within) {
  Mask out = 0;
  while (index != 0 && within != 0) {
    const Mask low = within & (~within + 1);
    if (index & 1) out |= low;
    index >>= 1;
    within &= within - 1;
  }
  return out;
}

namespace serial {

std::optional<MaskPair> FindModularityViolation(std::span<const Rational> table,
                                                int n, Modularity kind) {
  const Mask count = Mask{1} << n;
  Rational lhs, rhs;
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = a + 1; b < count; ++b) {
      const Mask meet = a & b;
      if (meet == a || meet == b) continue;
      lhs = table[a] + table[b];
      rhs = table[meet] + table[a | b];
      const bool bad =
          kind == Modularity::kSupermodular ? lhs > rhs : lhs < rhs;
      if (bad) return MaskPair{a, b};
    }
  }
  return std::nullopt;
}

std::optional<MaskPair> FindMonotonicityViolation(
    std::span<const Rational> table, int n, bool strict) {
  const Mask count = Mask{1} << n;
  for (Mask a = 0; a < count; ++a) {
    for (int u = 0; u < n; ++u) {
      if (a & Bit(u)) continue;
      const int c = cmp(table[a | Bit(u)], table[a]);
      if (c < 0 || (strict && c == 0)) return MaskPair{a, a | Bit(u)};
    }
  }
  return std::nullopt;
}

DensestScan ScanDensest(std::span<const Rational> f,
                        std::span<const Rational> g, Mask residual,
                        Mask prefix) {
  DensestScan out;
  Rational best_f, best_g, fv, gv;
  Mask s = 0;
  while (true) {
    s = ((s | ~residual) + 1) & residual;
    if (s == 0) break;
    fv = f[s | prefix] - f[prefix];
    gv = g[s | prefix] - g[prefix];
    if (sgn(gv) <= 0) {
      if (sgn(fv) > 0 && !out.infinite) out.infinite = s;
      continue;
    }
    if (!out.found) {
      out.found = true;
      best_f = fv;
      best_g = gv;
      out.union_mask = s;
      continue;
    }
    const int c = cmp(fv * best_g, best_f * gv);
    if (c > 0) {
      best_f = fv;
      best_g = gv;
      out.union_mask = s;
    } else if (c == 0) {
      out.union_mask |= s;
    }
  }
  if (out.found) out.density = best_f / best_g;
  return out;
}

std::optional<Mask> FindBoundViolation(std::span<const Rational> table,
                                       std::span<const Rational> vec, int n,
                                       BoundSide side) {
  const Mask count = Mask{1} << n;
  Rational sum;
  for (Mask s = 0; s < count; ++s) {
    sum = 0;
    for (int u = 0; u < n; ++u) {
      if (s & Bit(u)) sum += vec[u];
    }
    const int c = cmp(sum, table[s]);
    if ((side == BoundSide::kAtLeast && c < 0) ||
        (side == BoundSide::kAtMost && c > 0)) {
      return s;
    }
  }
  return std::nullopt;
}

std::optional<Mask> FindBoundViolation(std::span<const Rational> table,
                                       std::span<const double> vec, int n,
                                       BoundSide side, double slack) {
  const Mask count = Mask{1} << n;
  for (Mask s = 0; s < count; ++s) {
    double sum = 0;
    for (int u = 0; u < n; ++u) {
      if (s & Bit(u)) sum += vec[u];
    }
    const double h = table[s].get_d();
    if ((side == BoundSide::kAtLeast && sum < h - slack) ||
        (side == BoundSide::kAtMost && sum > h + slack)) {
      return s;
    }
  }
  return std::nullopt;
}

SubsetValue MaxWeightSubset(std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  const Mask count = Mask{1} << n;
  SubsetValue best;  // empty set, value 0
  Rational sum;
  for (Mask s = 1; s < count; ++s) {
    sum = 0;
    for (int u = 0; u < n; ++u) {
      if (s & Bit(u)) sum += weights[u];
    }
    if (sum > best.value) best = {s, sum};
  }
  return best;
}

SubsetValue BestResponse(std::span<const Rational> f,
                         std::span<const Rational> g, int n,
                         const Rational& alpha) {
  const Mask count = Mask{1} << n;
  Rational best_value = -g[0], best_f = f[0], v;
  for (Mask s = 0; s < count; ++s) {
    v = alpha * f[s] - g[s];
    const int c = cmp(v, best_value);
    if (c > 0 || (c == 0 && f[s] > best_f)) {
      best_value = v;
      best_f = f[s];
    }
  }
  Mask tied_union = 0;
  std::optional<Mask> lowest;
  for (Mask s = 0; s < count; ++s) {
    if (f[s] == best_f && alpha * f[s] - g[s] == best_value) {
      tied_union |= s;
      if (!lowest) lowest = s;
    }
  }
  if (f[tied_union] == best_f &&
      alpha * f[tied_union] - g[tied_union] == best_value) {
    return {tied_union, best_value};
  }
  return {*lowest, best_value};
}

}  // namespace serial
}  // namespace dualmod
