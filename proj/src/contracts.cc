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

#include "dualmod/contracts.h"

#include <algorithm>

#include "dualmod/divergence.h"
#include "dualmod/error.h"

namespace dualmod {
namespace {

void CheckAlpha(const Rational& alpha) {
  if (sgn(alpha) < 0 || alpha > 1) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "contract alpha " + ToString(alpha) + " is outside [0, 1]");
  }
}

}  // namespace

ContractRow EvaluateContract(const DualModularInstance& inst,
                             const Rational& alpha, Mask response) {
  const Rational f = inst.f().Evaluate(response);
  ContractRow row;
  row.alpha = alpha;
  row.response = response;
  row.agent_utility = alpha * f - inst.g().Evaluate(response);
  row.principal_utility = (1 - alpha) * f;
  return row;
}

Mask AgentBestResponse(const DualModularInstance& inst,
                       const DensityDecomposition& dec, const Rational& alpha) {
  CheckAlpha(alpha);
  if (!inst.ground().IsValid(dec.Prefix(static_cast<int>(dec.parts.size())))) {
    throw Error(ErrorCode::kInvalidArgument,
                "decomposition does not match the instance");
  }
  if (sgn(alpha) == 0) return 0;
  const Rational gamma = 1 / alpha;
  int i = 0;
  while (i < static_cast<int>(dec.densities.size()) &&
         dec.densities[i] >= gamma) {
    ++i;
  }
  return dec.Prefix(i);
}

SubsetValue AgentBestResponseBruteforce(const DualModularInstance& inst,
                                        const Rational& alpha, int max_n,
                                        Exec exec) {
  CheckAlpha(alpha);
  const std::vector<Rational> f = Tabulate(inst.f(), max_n);
  const std::vector<Rational> g = Tabulate(inst.g(), max_n);
  return BestResponse(f, g, inst.size(), alpha, exec);
}

std::vector<Rational> CriticalValues(const DensityDecomposition& dec) {
  std::vector<Rational> out;
  for (const Rational& rho : dec.densities) {
    if (rho >= 1) out.push_back(1 / rho);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ContractRow OptimalContract(const DualModularInstance& inst,
                            const DensityDecomposition& dec) {
  ContractRow best = EvaluateContract(inst, 0, 0);
  bool found = false;
  for (const Rational& alpha : CriticalValues(dec)) {
    ContractRow row =
        EvaluateContract(inst, alpha, AgentBestResponse(inst, dec, alpha));
    if (!found || row.principal_utility > best.principal_utility) {
      best = std::move(row);
      found = true;
    }
  }
  return best;
}

Rational DualityGap(const DualModularInstance& inst, Mask s,
                    const Allocation& a, const Rational& gamma) {
  if (!inst.ground().IsValid(s)) {
    throw Error(ErrorCode::kInvalidArgument, "subset outside the ground set");
  }
  const Value hs = Divergence(DivergenceKind::HockeyStick(gamma), a.x, a.y);
  return hs.exact() - (inst.f().Evaluate(s) - gamma * inst.g().Evaluate(s));
}

ContractAnalysis AnalyzeContracts(const DualModularInstance& inst,
                                  const DensityDecomposition& dec) {
  ContractAnalysis out;
  out.critical_values = CriticalValues(dec);
  for (const Rational& alpha : out.critical_values) {
    out.rows.push_back(
        EvaluateContract(inst, alpha, AgentBestResponse(inst, dec, alpha)));
  }
  out.optimal = OptimalContract(inst, dec);
  return out;
}

}  // namespace dualmod
