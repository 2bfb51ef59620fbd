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

#ifndef DUALMOD_CONTRACTS_H_
#define DUALMOD_CONTRACTS_H_

#include <vector>

#include "dualmod/decomposition.h"
#include "dualmod/instance.h"
#include "dualmod/kernels.h"
#include "dualmod/permutation.h"
#include "dualmod/rational.h"

namespace dualmod {

inline constexpr int kDefaultContractLimit = 20;

// The agent's best response to the linear contract alpha in [0, 1]: the
// largest prefix S_1 u ... u S_i with rho_i >= 1 / alpha (empty if none).
Mask AgentBestResponse(const DualModularInstance& inst,
                       const DensityDecomposition& dec, const Rational& alpha);

// Exhaustive argmax of alpha f(S) - g(S). Among ties prefers larger f(S),
// then the union of the tied sets if it ties as well, then the lowest mask.
SubsetValue AgentBestResponseBruteforce(const DualModularInstance& inst,
                                        const Rational& alpha,
                                        int max_n = kDefaultContractLimit,
                                        Exec exec = Exec::kParallel);

// {1 / rho_i : rho_i > 0} intersected with [0, 1], ascending.
std::vector<Rational> CriticalValues(const DensityDecomposition& dec);

struct ContractRow {
  Rational alpha;
  Mask response = 0;
  Rational agent_utility;      // alpha f(S) - g(S)
  Rational principal_utility;  // (1 - alpha) f(S)
};

ContractRow EvaluateContract(const DualModularInstance& inst,
                             const Rational& alpha, Mask response);

// Best (alpha, S, principal utility) over the critical values; ties go to
// the smaller alpha. (0, {}, 0) when there are no critical values.
ContractRow OptimalContract(const DualModularInstance& inst,
                            const DensityDecomposition& dec);

// HS_gamma(x || y) - (f(S) - gamma g(S)), exact; nonnegative for feasible a.
Rational DualityGap(const DualModularInstance& inst, Mask s,
                    const Allocation& a, const Rational& gamma);

struct ContractAnalysis {
  std::vector<Rational> critical_values;
  std::vector<ContractRow> rows;  // one per critical value
  ContractRow optimal;
};

ContractAnalysis AnalyzeContracts(const DualModularInstance& inst,
                                  const DensityDecomposition& dec);

}  // namespace dualmod

#endif  // DUALMOD_CONTRACTS_H_
