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

#ifndef DUALMOD_PERMUTATION_H_
#define DUALMOD_PERMUTATION_H_

#include <optional>
#include <span>
#include <vector>

#include "dualmod/instance.h"
#include "dualmod/kernels.h"
#include "dualmod/rational.h"
#include "dualmod/set_function.h"

namespace dualmod {

inline constexpr int kDefaultMembershipLimit = 20;

// An arrival order; order()[0] arrives first.
class Permutation {
 public:
  explicit Permutation(std::vector<int> order);
  static Permutation Identity(int n);

  const std::vector<int>& order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  Permutation Reversed() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> order_;
};

template <typename T>
struct BasicAllocation {
  std::vector<T> x;  // reward shares
  std::vector<T> y;  // cost shares
  bool operator==(const BasicAllocation&) const = default;
};

using Allocation = BasicAllocation<Rational>;
using AllocationF = BasicAllocation<double>;

AllocationF ToDoubles(const Allocation& a);

struct WeightedPermutation {
  Permutation sigma;
  Rational weight;
};

// Sparse permutation distribution; weights are >= 0 and sum to 1.
using WeightedPermutationList = std::vector<WeightedPermutation>;

// h^sigma(u) = h({u} | predecessors of u in sigma).
std::vector<Rational> Vertex(const SetFunction& h, const Permutation& sigma);

Allocation AllocationFromMixture(const DualModularInstance& inst,
                                 const WeightedPermutationList& p,
                                 const WeightedPermutationList& q);

struct MembershipReport {
  bool x_member = false;
  bool y_member = false;
  std::optional<Mask> x_witness;
  std::optional<Mask> y_witness;
  bool both() const { return x_member && y_member; }
};

MembershipReport CheckBaseMembership(const DualModularInstance& inst,
                                     const Allocation& a,
                                     int max_n = kDefaultMembershipLimit,
                                     Exec exec = Exec::kParallel);
// Floating-point variant: every inequality gets `slack`.
MembershipReport CheckBaseMembership(const DualModularInstance& inst,
                                     const AllocationF& a, double slack,
                                     int max_n = kDefaultMembershipLimit,
                                     Exec exec = Exec::kParallel);

// x_u / y_u; throws ZeroCostCoordinate(u) for the first y_u == 0.
std::vector<Rational> InducedDensities(const Allocation& a);
std::vector<double> InducedDensities(const AllocationF& a);

enum class TieBreak { kAscendingIndex, kDescendingIndex };

// Non-increasing density order; equal densities ordered by index.
Permutation SortByDensity(std::span<const Rational> rho,
                          TieBreak ties = TieBreak::kAscendingIndex);
Permutation SortByDensity(std::span<const double> rho,
                          TieBreak ties = TieBreak::kAscendingIndex);

}  // namespace dualmod

#endif  // DUALMOD_PERMUTATION_H_
