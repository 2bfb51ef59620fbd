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

#ifndef DUALMOD_IO_H_
#define DUALMOD_IO_H_

#include <string>

#include "dualmod/contracts.h"
#include "dualmod/decomposition.h"
#include "dualmod/instance.h"
#include "dualmod/solver.h"
#include "json.hpp"

namespace dualmod {

using Json = nlohmann::ordered_json;

// Set-function specs are tagged unions: {"kind": "table" | "edges_inside" |
// "linear" | "concave_cardinality" | "scaled" | "perturbed" | "complement" |
// "sum" | "residual", ...payload}. Rationals are "p/q" strings or integers.
// Edge endpoints may be element indices or, at top level, labels.
SetFunction SetFunctionFromJson(const Json& j, int n, const GroundSet* labels,
                                const std::string& path);
Json SetFunctionToJson(const SetFunction& h);

DualModularInstance InstanceFromJson(const Json& j);
Json InstanceToJson(const DualModularInstance& inst);
DualModularInstance LoadInstance(const std::string& path);

Json RationalToJson(const Rational& q);
Json SubsetToJson(const GroundSet& ground, Mask s);

Json StructureReportToJson(const StructureReport& r, const GroundSet& ground);
Json DecompositionToJson(const DensityDecomposition& dec,
                         const GroundSet& ground);
Json ErrorBoundsToJson(const ErrorBounds& b);
Json TraceToJson(const SolverTrace& trace, const GroundSet& ground);
Json ContractRowToJson(const ContractRow& row, const GroundSet& ground);
Json ContractAnalysisToJson(const ContractAnalysis& a, const GroundSet& ground);

}  // namespace dualmod

#endif  // DUALMOD_IO_H_
