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

#ifndef DUALMOD_SOLVER_H_
#define DUALMOD_SOLVER_H_

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dualmod/divergence.h"
#include "dualmod/instance.h"
#include "dualmod/permutation.h"
#include "dualmod/rational.h"

namespace dualmod {

enum class SolverVariant { kFrankWolfe, kGreedyPlusPlus };
enum class Arithmetic { kRational, kBinary64 };

struct SolverConfig {
  SolverVariant variant = SolverVariant::kFrankWolfe;
  int iterations = 100;
  // Reporting only; the iterates do not depend on it.
  DivergenceKind kind = DivergenceKind::Quadratic();
  std::optional<Permutation> initial;  // identity when unset
  Arithmetic arithmetic = Arithmetic::kBinary64;
  int stride = 10;  // density snapshot period
  TieBreak ties = TieBreak::kAscendingIndex;
};

struct IterationRecord {
  int k = 0;
  // Phi at (x^(k), y^(k)); NaN where the divergence is undefined.
  double phi_quadratic = 0;
  double phi_kl = 0;
  double phi_eg = 0;
  double phi_kind = 0;
  std::vector<double> density;  // empty between snapshots
  // Vertex chosen at step k (moving to iterate k + 1); empty at k = T.
  std::vector<int> sigma;
};

struct SolverTrace {
  std::vector<IterationRecord> records;  // k = 0..T
  AllocationF final_allocation;
  std::vector<double> final_density;
  std::optional<Allocation> exact_final_allocation;  // rational mode only
};

// Receives every iterate (x^(k), y^(k)), k = 0..T, of the matching mode.
struct IterateObserver {
  std::function<void(int, const Allocation&)> exact;
  std::function<void(int, const AllocationF&)> approx;
};

// Sorting by induced density solves the linear subproblem for every convex
// theta at once.
Permutation GradientOracle(std::span<const Rational> rho,
                           TieBreak ties = TieBreak::kAscendingIndex);
Permutation GradientOracle(std::span<const double> rho,
                           TieBreak ties = TieBreak::kAscendingIndex);

// d Phi / d p_sigma = sum_v f^sigma_v theta'(rho_v)
//                   + sum_v g^sigma_v (theta(rho_v) - rho_v theta'(rho_v)).
// Exact for Quadratic and HockeyStick.
Value PartialDerivative(const DualModularInstance& inst,
                        std::span<const Rational> rho, const Permutation& sigma,
                        const DivergenceKind& kind);
double PartialDerivative(const DualModularInstance& inst,
                         std::span<const double> rho, const Permutation& sigma,
                         const DivergenceKind& kind);

SolverTrace FrankWolfe(const DualModularInstance& inst, const SolverConfig& cfg,
                       const IterateObserver& observer = {});

// Requires a Linear cost function (NotLinearCost otherwise). Elements are
// peeled by (1 - gamma) x(u) + gamma f(u | W - u) per unit of cost.
SolverTrace GreedyPlusPlus(const DualModularInstance& inst,
                           const SolverConfig& cfg,
                           const IterateObserver& observer = {});

// Dispatches on cfg.variant.
SolverTrace Solve(const DualModularInstance& inst, const SolverConfig& cfg,
                  const IterateObserver& observer = {});

struct ErrorBounds {
  double hessian_upper = 0;
  double curvature_upper = 0;
  double objective_gap_upper = 0;
  double absolute_density_upper = 0;
  std::optional<double> multiplicative_density_upper;
  // Power of g_min in the absolute bound, when it is a pure power.
  std::optional<double> g_min_exponent;
  double iteration_exponent = -0.5;
  std::vector<std::string> warnings;
};

// A-priori bounds for a normalized instance after T iterations of the given
// variant. Requires a strictly convex kind.
ErrorBounds ComputeErrorBounds(
    const DualModularInstance& inst, const DivergenceKind& kind, int iterations,
    SolverVariant variant = SolverVariant::kFrankWolfe);

// CSV with columns k,phi_quadratic,phi_kl,phi_eg and, when `densities` is
// set, one rho_<label> column per element (blank between snapshots).
void WriteTraceCsv(std::ostream& out, const SolverTrace& trace,
                   const GroundSet& ground, bool densities);

}  // namespace dualmod

#endif  // DUALMOD_SOLVER_H_
