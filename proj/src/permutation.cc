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

#include "dualmod/permutation.h"

#include <algorithm>
#include <numeric>

#include "dualmod/error.h"

namespace dualmod {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (int u : order_) {
    if (u < 0 || u >= static_cast<int>(order_.size()) || seen[u]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "permutation must be a bijection on 0..n-1");
    }
    seen[u] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

Permutation Permutation::Reversed() const {
  return Permutation(std::vector<int>(order_.rbegin(), order_.rend()));
}

AllocationF ToDoubles(const Allocation& a) {
  return {ToDoubles(std::span<const Rational>(a.x)),
          ToDoubles(std::span<const Rational>(a.y))};
}

std::vector<Rational> Vertex(const SetFunction& h, const Permutation& sigma) {
  if (sigma.size() != h.ground_size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "permutation size does not match the ground set");
  }
  std::vector<Rational> out(sigma.size());
  Mask prefix = 0;
  Rational before = 0;
  for (int u : sigma.order()) {
    prefix |= Bit(u);
    Rational now = h.Evaluate(prefix);
    out[u] = now - before;
    before = std::move(now);
  }
  return out;
}

namespace {

std::vector<Rational> Mix(const SetFunction& h,
                          const WeightedPermutationList& list,
                          const char* name) {
  if (list.empty()) {
    throw Error(ErrorCode::kWeightSumMismatch,
                std::string(name) + " distribution is empty");
  }
  Rational total = 0;
  std::vector<Rational> out(h.ground_size());
  for (const WeightedPermutation& wp : list) {
    if (sgn(wp.weight) < 0) {
      throw Error(ErrorCode::kWeightSumMismatch,
                  std::string(name) + " distribution has a negative weight");
    }
    total += wp.weight;
    const std::vector<Rational> v = Vertex(h, wp.sigma);
    for (std::size_t u = 0; u < v.size(); ++u) out[u] += wp.weight * v[u];
  }
  if (total != 1) {
    throw Error(ErrorCode::kWeightSumMismatch,
                std::string(name) + " weights sum to " + ToString(total) +
                    ", expected 1");
  }
  return out;
}

void CheckLimit(int n, int max_n) {
  if (n > max_n) {
    throw Error(
        ErrorCode::kGroundSetTooLarge,
        "membership check enumerates 2^n subsets; n = " + std::to_string(n) +
            " exceeds limit " + std::to_string(max_n));
  }
}

}  // namespace

Allocation AllocationFromMixture(const DualModularInstance& inst,
                                 const WeightedPermutationList& p,
                                 const WeightedPermutationList& q) {
  return {Mix(inst.f(), p, "reward"), Mix(inst.g(), q, "cost")};
}

MembershipReport CheckBaseMembership(const DualModularInstance& inst,
                                     const Allocation& a, int max_n,
                                     Exec exec) {
  const int n = inst.size();
  CheckLimit(n, max_n);
  if (static_cast<int>(a.x.size()) != n || static_cast<int>(a.y.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "allocation size mismatch");
  }
  const std::vector<Rational> f = Tabulate(inst.f(), max_n);
  const std::vector<Rational> g = Tabulate(inst.g(), max_n);
  MembershipReport r;
  const Mask full = inst.ground().Full();
  auto scan = [&](const std::vector<Rational>& table,
                  const std::vector<Rational>& vec, BoundSide side) {
    std::optional<Mask> w =
        exec == Exec::kSerial
            ? serial::FindBoundViolation(table, vec, n, side)
            : parallel::FindBoundViolation(table, vec, n, side);
    if (!w && Sum(vec) != table[full]) w = full;
    return w;
  };
  r.x_witness = scan(f, a.x, BoundSide::kAtLeast);
  r.y_witness = scan(g, a.y, BoundSide::kAtMost);
  r.x_member = !r.x_witness;
  r.y_member = !r.y_witness;
  return r;
}

MembershipReport CheckBaseMembership(const DualModularInstance& inst,
                                     const AllocationF& a, double slack,
                                     int max_n, Exec exec) {
  const int n = inst.size();
  CheckLimit(n, max_n);
  if (static_cast<int>(a.x.size()) != n || static_cast<int>(a.y.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "allocation size mismatch");
  }
  const std::vector<Rational> f = Tabulate(inst.f(), max_n);
  const std::vector<Rational> g = Tabulate(inst.g(), max_n);
  const Mask full = inst.ground().Full();
  auto scan = [&](const std::vector<Rational>& table,
                  const std::vector<double>& vec, BoundSide side) {
    std::optional<Mask> w =
        exec == Exec::kSerial
            ? serial::FindBoundViolation(table, vec, n, side, slack)
            : parallel::FindBoundViolation(table, vec, n, side, slack);
    double total = 0;
    for (double v : vec) total += v;
    if (!w && std::abs(total - table[full].get_d()) > slack) w = full;
    return w;
  };
  MembershipReport r;
  r.x_witness = scan(f, a.x, BoundSide::kAtLeast);
  r.y_witness = scan(g, a.y, BoundSide::kAtMost);
  r.x_member = !r.x_witness;
  r.y_member = !r.y_witness;
  return r;
}

std::vector<Rational> InducedDensities(const Allocation& a) {
  std::vector<Rational> rho(a.x.size());
  for (std::size_t u = 0; u < a.x.size(); ++u) {
    if (sgn(a.y[u]) == 0) {
      throw Error(ErrorCode::kZeroCostCoordinate,
                  "zero cost coordinate at element " + std::to_string(u) +
                      "; its induced density is undefined",
                  static_cast<int>(u));
    }
    rho[u] = a.x[u] / a.y[u];
  }
  return rho;
}

std::vector<double> InducedDensities(const AllocationF& a) {
  std::vector<double> rho(a.x.size());
  for (std::size_t u = 0; u < a.x.size(); ++u) {
    if (a.y[u] == 0.0) {
      throw Error(ErrorCode::kZeroCostCoordinate,
                  "zero cost coordinate at element " + std::to_string(u) +
                      "; its induced density is undefined",
                  static_cast<int>(u));
    }
    rho[u] = a.x[u] / a.y[u];
  }
  return rho;
}

namespace {

template <typename T>
Permutation SortImpl(std::span<const T> rho, TieBreak ties) {
  std::vector<int> order(rho.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (rho[a] != rho[b]) return rho[a] > rho[b];
    return ties == TieBreak::kAscendingIndex ? a < b : a > b;
  });
  return Permutation(std::move(order));
}

}  // namespace

Permutation SortByDensity(std::span<const Rational> rho, TieBreak ties) {
  return SortImpl(rho, ties);
}

Permutation SortByDensity(std::span<const double> rho, TieBreak ties) {
  return SortImpl(rho, ties);
}

}  // namespace dualmod
