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

#include <gtest/gtest.h>

#include "support/error_matchers.h"
#include "support/generators.h"

namespace dualmod {
namespace {

using testing::Q;

constexpr Mask kA = 1, kW = 2, kB = 4;

TEST(VerifyTest, WorkedExampleCostIsNotStrictlyMonotone) {
  const StructureReport r = VerifyDualModularity(testing::Sec32Instance());
  EXPECT_TRUE(r.f_supermodular.holds);
  EXPECT_TRUE(r.f_monotone.holds);
  EXPECT_TRUE(r.g_submodular.holds);
  EXPECT_TRUE(r.g_monotone.holds);
  EXPECT_FALSE(r.g_strictly_monotone.holds);
  ASSERT_TRUE(r.g_strictly_monotone.witness.has_value());
  EXPECT_EQ(*r.g_strictly_monotone.witness, (MaskPair{kA, kA | kW}));
  EXPECT_FALSE(r.IsDualModular());
}

TEST(VerifyTest, PerturbedWorkedExampleBecomesStrict) {
  const auto base = testing::Sec32Instance();
  const DualModularInstance inst(base.ground(), base.f(),
                                 PerturbStrict(base.g(), Q(1, 100)));
  const StructureReport r = VerifyDualModularity(inst);
  EXPECT_TRUE(r.g_strictly_monotone.holds);
  EXPECT_TRUE(r.IsDualModular());
}

TEST(VerifyTest, LinearPairPassesEverything) {
  const DualModularInstance inst(GroundSet::Indexed(3),
                                 SetFunction::Linear({1, 2, 3}),
                                 SetFunction::Linear({3, 1, 1}));
  const StructureReport r = VerifyDualModularity(inst);
  EXPECT_TRUE(r.f_supermodular.holds && r.f_monotone.holds &&
              r.f_strictly_monotone.holds);
  EXPECT_TRUE(r.g_submodular.holds && r.g_strictly_monotone.holds);
}

TEST(VerifyTest, TriangleEdgesAreSupermodularAndMonotone) {
  const DualModularInstance inst(
      GroundSet::Indexed(3),
      SetFunction::EdgesInside(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}),
      SetFunction::Linear({1, 1, 1}));
  const StructureReport r = VerifyDualModularity(inst);
  EXPECT_TRUE(r.f_supermodular.holds);
  EXPECT_TRUE(r.f_monotone.holds);
}

TEST(VerifyTest, DetectsNonSupermodularReward) {
  // Concave reward is submodular, not supermodular.
  const DualModularInstance inst(GroundSet::Indexed(2),
                                 SetFunction::ConcaveOfCardinality({0, 2, 3}),
                                 SetFunction::Linear({1, 1}));
  const StructureReport r = VerifyDualModularity(inst);
  EXPECT_FALSE(r.f_supermodular.holds);
  EXPECT_EQ(*r.f_supermodular.witness, (MaskPair{1, 2}));
}

TEST(VerifyTest, SerialAndParallelReportsAgree) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::RandomInstance(rng, 6, {.strict_f = false});
    const StructureReport a = VerifyDualModularity(inst, 12, Exec::kSerial);
    const StructureReport b = VerifyDualModularity(inst, 12, Exec::kParallel);
    EXPECT_EQ(a.f_strictly_monotone.witness, b.f_strictly_monotone.witness);
    EXPECT_TRUE(a.IsDualModular());
    EXPECT_TRUE(b.IsDualModular());
  }
}

TEST(VerifyTest, RespectsSizeLimit) {
  testing::Rng rng(1);
  const auto inst = testing::RandomInstance(rng, 6);
  EXPECT_DUALMOD_ERROR(VerifyDualModularity(inst, 5),
                       ErrorCode::kGroundSetTooLarge);
}

TEST(VerifyTest, MarginalsIncreaseForRewardAndDecreaseForCost) {
  testing::Rng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 6;
    const auto inst = testing::RandomInstance(rng, n);
    const Mask full = FullMask(n);
    for (Mask b = 0; b <= full; ++b) {
      for (Mask a = b;; a = (a - 1) & b) {
        for (int u = 0; u < n; ++u) {
          if (b & Bit(u)) continue;
          ASSERT_LE(inst.f().Marginal(Bit(u), a), inst.f().Marginal(Bit(u), b));
          ASSERT_GE(inst.g().Marginal(Bit(u), a), inst.g().Marginal(Bit(u), b));
        }
        if (a == 0) break;
      }
    }
  }
}

TEST(PerturbTest, NegativeEtaIsRejected) {
  EXPECT_DUALMOD_ERROR(PerturbStrict(SetFunction::Linear({1}), Q(-1, 2)),
                       ErrorCode::kNegativeEta);
}

TEST(ComplementTest, LinearPairSwapsRoles) {
  const DualModularInstance inst(GroundSet::Indexed(2),
                                 SetFunction::Linear({2, 1}),
                                 SetFunction::Linear({1, 1}));
  const DualModularInstance c = ComplementInstance(inst);
  for (Mask s = 0; s < 4; ++s) {
    EXPECT_EQ(c.f().Evaluate(s), SetFunction::Linear({1, 1}).Evaluate(s));
    EXPECT_EQ(c.g().Evaluate(s), SetFunction::Linear({2, 1}).Evaluate(s));
  }
}

TEST(ComplementTest, RewardTotalIsCostTotal) {
  testing::Rng rng(23);
  const auto inst = testing::RandomInstance(rng, 5);
  const DualModularInstance c = ComplementInstance(inst);
  EXPECT_EQ(c.f().Evaluate(31), inst.g().Evaluate(31));
  EXPECT_EQ(c.g().Evaluate(31), inst.f().Evaluate(31));
}

TEST(ComplementTest, ComplementOfComplementRestoresValues) {
  testing::Rng rng(29);
  const auto inst = testing::RandomInstance(rng, 5);
  const DualModularInstance cc = ComplementInstance(ComplementInstance(inst));
  for (Mask s = 0; s < 32; ++s) {
    EXPECT_EQ(cc.f().Evaluate(s), inst.f().Evaluate(s));
    EXPECT_EQ(cc.g().Evaluate(s), inst.g().Evaluate(s));
  }
}

TEST(ComplementTest, ComplementIsDualModular) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst =
        testing::RandomInstance(rng, testing::RandomInt(rng, 1, 8));
    const StructureReport r = VerifyDualModularity(ComplementInstance(inst));
    EXPECT_TRUE(r.f_supermodular.holds);
    EXPECT_TRUE(r.g_submodular.holds);
    EXPECT_TRUE(r.IsDualModular());
  }
}

TEST(ComplementTest, RequiresStrictlyMonotoneReward) {
  EXPECT_DUALMOD_ERROR(ComplementInstance(testing::P3Instance()),
                       ErrorCode::kNotStrictlyMonotone);
}

TEST(NormalizeTest, WorkedExampleScalesToUnitTotals) {
  const auto inst = testing::Sec32Instance();
  const DualModularInstance norm = Normalize(inst);
  EXPECT_TRUE(norm.normalized());
  EXPECT_EQ(norm.f().Evaluate(7), 1);
  EXPECT_EQ(norm.g().Evaluate(7), 1);
  EXPECT_EQ(norm.f().Evaluate(kA), Q(1, 2));
  EXPECT_EQ(norm.g().Evaluate(kB), Q(2, 3));
}

TEST(NormalizeTest, IdempotentOnNormalizedInstances) {
  const DualModularInstance once = Normalize(testing::P3Instance());
  const DualModularInstance twice = Normalize(once);
  for (Mask s = 0; s < 8; ++s) {
    EXPECT_EQ(once.f().Evaluate(s), twice.f().Evaluate(s));
    EXPECT_EQ(once.g().Evaluate(s), twice.g().Evaluate(s));
  }
}

TEST(NormalizeTest, ZeroRewardTotalIsRejected) {
  const DualModularInstance inst(GroundSet::Indexed(2),
                                 SetFunction::Linear({0, 0}),
                                 SetFunction::Linear({1, 1}));
  EXPECT_DUALMOD_ERROR(Normalize(inst), ErrorCode::kZeroTotal);
}

TEST(InstanceTest, NormalizedFlagRequiresUnitTotals) {
  EXPECT_DUALMOD_ERROR(
      DualModularInstance(GroundSet::Indexed(1), SetFunction::Linear({2}),
                          SetFunction::Linear({1}), true),
      ErrorCode::kSchema);
  EXPECT_DUALMOD_ERROR(
      DualModularInstance(GroundSet::Indexed(1), SetFunction::Linear({2}),
                          SetFunction::Linear({0})),
      ErrorCode::kSchema);
}

TEST(ExtremesTest, WorkedExampleHasZeroMinima) {
  const Extremes e = ComputeExtremes(testing::Sec32Instance());
  EXPECT_EQ(e.f_min, 0);
  EXPECT_EQ(e.g_min, 0);
  EXPECT_EQ(e.f_max, 1);
  EXPECT_EQ(e.g_max, 2);
  EXPECT_TRUE(e.cross_checked);
}

TEST(ExtremesTest, LinearCostUsesWeights) {
  const DualModularInstance inst(GroundSet::Indexed(3),
                                 SetFunction::Linear({1, 1, 1}),
                                 SetFunction::Linear({Q(1, 2), 3, 2}));
  const Extremes e = ComputeExtremes(inst);
  EXPECT_EQ(e.g_min, Q(1, 2));
  EXPECT_EQ(e.g_max, 3);
}

TEST(ExtremesTest, TriangleRewardHasZeroMinimum) {
  EXPECT_EQ(ComputeExtremes(testing::TriIsoInstance()).f_min, 0);
}

TEST(ExtremesTest, ClosedFormsMatchPermutationSearch) {
  testing::Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst =
        testing::RandomInstance(rng, testing::RandomInt(rng, 1, 7));
    EXPECT_TRUE(ComputeExtremes(inst).cross_checked);
  }
}

}  // namespace
}  // namespace dualmod
