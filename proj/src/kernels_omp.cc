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

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>

#include "dualmod/kernels.h"

namespace dualmod::parallel {
namespace {

constexpr std::int64_t kBlock = 1024;

bool Before(const MaskPair& a, const MaskPair& b) {
  return a.first < b.first || (a.first == b.first && a.second < b.second);
}

}  // namespace

std::optional<MaskPair> FindModularityViolation(std::span<const Rational> table,
                                                int n, Modularity kind) {
  const std::int64_t count = std::int64_t{1} << n;
  std::atomic<std::int64_t> first_row{count};
  std::optional<MaskPair> result;
#pragma omp parallel
  {
    Rational lhs, rhs;
    std::optional<MaskPair> local;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ai = 0; ai < count; ++ai) {
      if (ai > first_row.load(std::memory_order_relaxed)) continue;
      const Mask a = static_cast<Mask>(ai);
      for (Mask b = a + 1; b < static_cast<Mask>(count); ++b) {
        const Mask meet = a & b;
        if (meet == a || meet == b) continue;
        lhs = table[a] + table[b];
        rhs = table[meet] + table[a | b];
        const bool bad =
            kind == Modularity::kSupermodular ? lhs > rhs : lhs < rhs;
        if (bad) {
          if (!local || Before({a, b}, *local)) local = MaskPair{a, b};
          std::int64_t seen = first_row.load();
          while (ai < seen && !first_row.compare_exchange_weak(seen, ai)) {
          }
          break;
        }
      }
    }
#pragma omp critical(dualmod_modularity)
    if (local && (!result || Before(*local, *result))) result = local;
  }
  return result;
}

std::optional<MaskPair> FindMonotonicityViolation(
    std::span<const Rational> table, int n, bool strict) {
  const std::int64_t count = std::int64_t{1} << n;
  std::optional<MaskPair> result;
#pragma omp parallel
  {
    std::optional<MaskPair> local;
#pragma omp for schedule(static)
    for (std::int64_t ai = 0; ai < count; ++ai) {
      if (local) continue;
      const Mask a = static_cast<Mask>(ai);
      for (int u = 0; u < n; ++u) {
        if (a & Bit(u)) continue;
        const int c = cmp(table[a | Bit(u)], table[a]);
        if (c < 0 || (strict && c == 0)) {
          local = MaskPair{a, a | Bit(u)};
          break;
        }
      }
    }
#pragma omp critical(dualmod_monotone)
    if (local && (!result || Before(*local, *result))) result = local;
  }
  return result;
}

DensestScan ScanDensest(std::span<const Rational> f,
                        std::span<const Rational> g, Mask residual,
                        Mask prefix) {
  const std::int64_t total = std::int64_t{1} << std::popcount(residual);
  const std::int64_t blocks = (total + kBlock - 1) / kBlock;
  DensestScan out;
  Rational best_f, best_g;
#pragma omp parallel
  {
    DensestScan local;
    Rational lf, lg, fv, gv;
#pragma omp for schedule(static)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
      const std::int64_t lo = std::max<std::int64_t>(1, blk * kBlock);
      const std::int64_t hi = std::min(total, (blk + 1) * kBlock);
      Mask s = DepositBits(static_cast<Mask>(lo), residual);
      for (std::int64_t idx = lo; idx < hi; ++idx) {
        fv = f[s | prefix] - f[prefix];
        gv = g[s | prefix] - g[prefix];
        if (sgn(gv) <= 0) {
          if (sgn(fv) > 0 && (!local.infinite || s < *local.infinite)) {
            local.infinite = s;
          }
        } else if (!local.found) {
          local.found = true;
          lf = fv;
          lg = gv;
          local.union_mask = s;
        } else {
          const int c = cmp(fv * lg, lf * gv);
          if (c > 0) {
            lf = fv;
            lg = gv;
            local.union_mask = s;
          } else if (c == 0) {
            local.union_mask |= s;
          }
        }
        s = ((s | ~residual) + 1) & residual;
      }
    }
#pragma omp critical(dualmod_densest)
    {
      if (local.infinite &&
          (!out.infinite || *local.infinite < *out.infinite)) {
        out.infinite = local.infinite;
      }
      if (local.found) {
        if (!out.found) {
          out.found = true;
          best_f = lf;
          best_g = lg;
          out.union_mask = local.union_mask;
        } else {
          const int c = cmp(lf * best_g, best_f * lg);
          if (c > 0) {
            best_f = lf;
            best_g = lg;
            out.union_mask = local.union_mask;
          } else if (c == 0) {
            out.union_mask |= local.union_mask;
          }
        }
      }
    }
  }
  if (out.found) out.density = best_f / best_g;
  return out;
}

std::optional<Mask> FindBoundViolation(std::span<const Rational> table,
                                       std::span<const Rational> vec, int n,
                                       BoundSide side) {
  const std::int64_t count = std::int64_t{1} << n;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
  {
    Rational sum;
#pragma omp for schedule(static) reduction(min : first)
    for (std::int64_t si = 0; si < count; ++si) {
      const Mask s = static_cast<Mask>(si);
      if (s > first) continue;
      sum = 0;
      for (int u = 0; u < n; ++u) {
        if (s & Bit(u)) sum += vec[u];
      }
      const int c = cmp(sum, table[s]);
      if ((side == BoundSide::kAtLeast && c < 0) ||
          (side == BoundSide::kAtMost && c > 0)) {
        first = std::min<std::uint64_t>(first, s);
      }
    }
  }
  if (first == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<Mask>(first);
}

std::optional<Mask> FindBoundViolation(std::span<const Rational> table,
                                       std::span<const double> vec, int n,
                                       BoundSide side, double slack) {
  const std::int64_t count = std::int64_t{1} << n;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t si = 0; si < count; ++si) {
    const Mask s = static_cast<Mask>(si);
    double sum = 0;
    for (int u = 0; u < n; ++u) {
      if (s & Bit(u)) sum += vec[u];
    }
    const double h = table[s].get_d();
    if ((side == BoundSide::kAtLeast && sum < h - slack) ||
        (side == BoundSide::kAtMost && sum > h + slack)) {
      first = std::min<std::uint64_t>(first, s);
    }
  }
  if (first == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<Mask>(first);
}

SubsetValue MaxWeightSubset(std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  const std::int64_t count = std::int64_t{1} << n;
  SubsetValue best;
#pragma omp parallel
  {
    SubsetValue local;
    Rational sum;
#pragma omp for schedule(static)
    for (std::int64_t si = 1; si < count; ++si) {
      const Mask s = static_cast<Mask>(si);
      sum = 0;
      for (int u = 0; u < n; ++u) {
        if (s & Bit(u)) sum += weights[u];
      }
      if (sum > local.value ||
          (sum == local.value && local.subset != 0 && s < local.subset)) {
        local = {s, sum};
      }
    }
#pragma omp critical(dualmod_maxweight)
    {
      const int c = cmp(local.value, best.value);
      if (c > 0 || (c == 0 && local.subset < best.subset)) best = local;
    }
  }
  return best;
}

SubsetValue BestResponse(std::span<const Rational> f,
                         std::span<const Rational> g, int n,
                         const Rational& alpha) {
  const std::int64_t count = std::int64_t{1} << n;
  Rational best_value = -g[0], best_f = f[0];
#pragma omp parallel
  {
    Rational lv = -g[0], lf = f[0], v;
#pragma omp for schedule(static)
    for (std::int64_t si = 0; si < count; ++si) {
      v = alpha * f[si] - g[si];
      const int c = cmp(v, lv);
      if (c > 0 || (c == 0 && f[si] > lf)) {
        lv = v;
        lf = f[si];
      }
    }
#pragma omp critical(dualmod_best_response)
    {
      const int c = cmp(lv, best_value);
      if (c > 0 || (c == 0 && lf > best_f)) {
        best_value = lv;
        best_f = lf;
      }
    }
  }
  std::uint64_t tied_union = 0;
  std::uint64_t lowest = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
  {
    Rational v;
#pragma omp for schedule(static) reduction(| : tied_union) \
    reduction(min : lowest)
    for (std::int64_t si = 0; si < count; ++si) {
      if (f[si] != best_f) continue;
      v = alpha * f[si] - g[si];
      if (v == best_value) {
        tied_union |= static_cast<std::uint64_t>(si);
        lowest = std::min<std::uint64_t>(lowest, si);
      }
    }
  }
  if (f[tied_union] == best_f &&
      alpha * f[tied_union] - g[tied_union] == best_value) {
    return {static_cast<Mask>(tied_union), best_value};
  }
  return {static_cast<Mask>(lowest), best_value};
}

}  // namespace dualmod::parallel
