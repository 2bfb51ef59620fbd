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

#include <gtest/gtest.h>

#include "support/error_matchers.h"
#include "support/generators.h"

namespace dualmod {
namespace {

using testing::Q;

std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_DUALMOD_ERROR(Permutation({0, 0}), ErrorCode::kInvalidArgument);
  EXPECT_DUALMOD_ERROR(Permutation({1, 2}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(Permutation({2, 0, 1}).Reversed(), Permutation({1, 0, 2}));
}

TEST(VertexTest, WorkedExampleColumns) {
  const auto inst = testing::Sec32Instance();
  // a, w, b = 0, 1, 2.
  EXPECT_EQ(Vertex(inst.f(), Permutation({0, 1, 2})), R({1, 0, 1}));
  // sigma = (b, w, a): g^sigma listed per element a, w, b.
  EXPECT_EQ(Vertex(inst.g(), Permutation({2, 1, 0})), R({0, 1, 2}));
}

TEST(VertexTest, CoordinatesTelescopeToTotal) {
  testing::Rng rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testing::RandomInt(rng, 1, 8);
    const auto inst = testing::RandomInstance(rng, n);
    const Permutation sigma = testing::RandomPermutation(rng, n);
    EXPECT_EQ(Sum(Vertex(inst.f(), sigma)), inst.f().Evaluate(FullMask(n)));
    EXPECT_EQ(Sum(Vertex(inst.g(), sigma)), inst.g().Evaluate(FullMask(n)));
  }
}

TEST(VertexTest, LaterPositionNeverLowersRewardShare) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::RandomInt(rng, 2, 7);
    const auto inst = testing::RandomInstance(rng, n);
    const Permutation sigma = testing::RandomPermutation(rng, n);
    const auto fs = Vertex(inst.f(), sigma);
    const auto gs = Vertex(inst.g(), sigma);
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> order = sigma.order();
      std::swap(order[i], order[i + 1]);
      const int moved = sigma.order()[i];  // now one position later
      const Permutation tau(order);
      EXPECT_GE(Vertex(inst.f(), tau)[moved], fs[moved]);
      EXPECT_LE(Vertex(inst.g(), tau)[moved], gs[moved]);
    }
  }
}

TEST(MixtureTest, SinglePermutationGivesVertexPair) {
  const auto inst = testing::Sec32Instance();
  const Permutation s0({0, 1, 2});
  const Allocation a = AllocationFromMixture(inst, {{s0, 1}}, {{s0, 1}});
  EXPECT_EQ(a.x, R({1, 0, 1}));
  EXPECT_EQ(a.y, R({1, 0, 2}));
}

TEST(MixtureTest, PathHalfAndHalf) {
  const auto inst = testing::P3Instance();
  const WeightedPermutationList p = {{Permutation({0, 1, 2}), Q(1, 2)},
                                     {Permutation({2, 1, 0}), Q(1, 2)}};
  const Allocation a = AllocationFromMixture(inst, p, p);
  EXPECT_EQ(a.x, R({Q(1, 2), 1, Q(1, 2)}));
}

TEST(MixtureTest, UniformMixtureOfSymmetricInstanceIsUniform) {
  const DualModularInstance inst(
      GroundSet::Indexed(3),
      SetFunction::EdgesInside(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}),
      SetFunction::ConcaveOfCardinality({0, 3, 5, 6}));
  WeightedPermutationList all;
  for (const Permutation& s : testing::AllPermutations(3)) {
    all.push_back({s, Q(1, 6)});
  }
  const Allocation a = AllocationFromMixture(inst, all, all);
  EXPECT_EQ(a.x, R({1, 1, 1}));
  EXPECT_EQ(a.y, R({2, 2, 2}));
}

TEST(MixtureTest, WeightsMustSumToOne) {
  const auto inst = testing::P3Instance();
  const WeightedPermutationList bad = {{Permutation({0, 1, 2}), Q(1, 2)}};
  const WeightedPermutationList good = {{Permutation({0, 1, 2}), 1}};
  EXPECT_DUALMOD_ERROR(AllocationFromMixture(inst, bad, good),
                       ErrorCode::kWeightSumMismatch);
  const WeightedPermutationList negative = {{Permutation({0, 1, 2}), 2},
                                            {Permutation({1, 0, 2}), -1}};
  EXPECT_DUALMOD_ERROR(AllocationFromMixture(inst, good, negative),
                       ErrorCode::kWeightSumMismatch);
}

TEST(MembershipTest, WorkedExampleOptimumIsFeasible) {
  const auto inst = testing::Sec32Instance();
  const Allocation a{R({1, 0, 1}), R({1, 0, 2})};
  const MembershipReport r = CheckBaseMembership(inst, a);
  EXPECT_TRUE(r.both());
}

TEST(MembershipTest, RewardBelowSingletonValueIsRejected) {
  const auto inst = testing::Sec32Instance();
  const Allocation a{R({0, 0, 2}), R({1, 0, 2})};
  const MembershipReport r = CheckBaseMembership(inst, a);
  EXPECT_FALSE(r.x_member);
  EXPECT_EQ(r.x_witness, Mask{1});
  EXPECT_TRUE(r.y_member);
}

TEST(MembershipTest, TotalMismatchReportsFullSet) {
  const auto inst = testing::P3Instance();
  const Allocation a{R({1, 1, 1}), R({1, 1, 1})};
  const MembershipReport r = CheckBaseMembership(inst, a);
  EXPECT_FALSE(r.x_member);
  EXPECT_EQ(r.x_witness, Mask{7});
}

TEST(MembershipTest, RandomMixturesAreFeasible) {
  testing::Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::RandomInt(rng, 1, 10);
    const auto inst = testing::RandomInstance(rng, n);
    const Allocation a = testing::RandomFeasibleAllocation(rng, inst, 3);
    EXPECT_TRUE(CheckBaseMembership(inst, a).both());
    EXPECT_TRUE(CheckBaseMembership(inst, ToDoubles(a), 1e-9).both());
    EXPECT_TRUE(CheckBaseMembership(inst, a, 20, Exec::kSerial).both());
  }
}

TEST(MembershipTest, RespectsSizeLimit) {
  testing::Rng rng(71);
  const auto inst = testing::RandomInstance(rng, 6);
  const Allocation a = testing::RandomFeasibleAllocation(rng, inst, 1);
  EXPECT_DUALMOD_ERROR(CheckBaseMembership(inst, a, 5),
                       ErrorCode::kGroundSetTooLarge);
}

TEST(DensityTest, InducedDensities) {
  EXPECT_EQ(InducedDensities(Allocation{R({2, 3}), R({2, 3})}), R({1, 1}));
  const Allocation p3{R({Q(2, 3), Q(2, 3), Q(2, 3)}), R({1, 1, 1})};
  EXPECT_EQ(InducedDensities(p3), R({Q(2, 3), Q(2, 3), Q(2, 3)}));
}

TEST(DensityTest, ZeroCostCoordinateNamesElement) {
  const Allocation a{R({1, 0, 1}), R({1, 0, 2})};
  try {
    InducedDensities(a);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroCostCoordinate);
    EXPECT_EQ(e.element(), 1);
  }
}

TEST(SortTest, NonIncreasingWithIndexTieBreak) {
  EXPECT_EQ(SortByDensity(R({2, 1, 3})), Permutation({2, 0, 1}));
  EXPECT_EQ(SortByDensity(R({5, 5, 5})), Permutation::Identity(3));
  EXPECT_EQ(SortByDensity(R({1, 1, Q(1, 2)})), Permutation({0, 1, 2}));
  EXPECT_EQ(SortByDensity(R({1, 1, Q(1, 2)}), TieBreak::kDescendingIndex),
            Permutation({1, 0, 2}));
  const std::vector<double> d = {0.5, 2.0, 0.5};
  EXPECT_EQ(SortByDensity(d), Permutation({1, 0, 2}));
}

}  // namespace
}  // namespace dualmod
