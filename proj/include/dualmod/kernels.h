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

#ifndef DUALMOD_KERNELS_H_
#define DUALMOD_KERNELS_H_

// Exhaustive subset-enumeration kernels. Each kernel has a plain serial
// reference (namespace serial) and an OpenMP version (namespace parallel)
// that must return identical results; `Run*` dispatchers pick one by Exec.
// Tables are indexed by mask and hold 2^n entries.

#include <optional>
#include <span>
#include <utility>

#include "dualmod/rational.h"
#include "dualmod/set_function.h"

namespace dualmod {

enum class Exec { kSerial, kParallel };

// Which inequality a pair scan looks for.
enum class Modularity {
  kSupermodular,  // h(A) + h(B) <= h(A n B) + h(A u B)
  kSubmodular,    // h(A) + h(B) >= h(A n B) + h(A u B)
};

// Which side a membership scan enforces.
enum class BoundSide {
  kAtLeast,  // vec(S) >= h(S)  (base contrapolymatroid)
  kAtMost,   // vec(S) <= h(S)  (base polymatroid)
};

struct MaskPair {
  Mask first = 0;
  Mask second = 0;
  bool operator==(const MaskPair&) const = default;
};

struct DensestScan {
  bool found = false;            // some nonempty subset had positive cost
  Mask union_mask = 0;           // union of all maximizers (residual-relative)
  Rational density = 0;          // common maximum density
  std::optional<Mask> infinite;  // smallest S with cost 0 < reward
  bool operator==(const DensestScan&) const = default;
};

struct SubsetValue {
  Mask subset = 0;
  Rational value = 0;
  bool operator==(const SubsetValue&) const = default;
};

// Maps the bits of `index` onto the set bits of `within`, lowest first.
Mask DepositBits(Mask index, Mask within);

namespace serial {

// First violating pair (A, B), A < B, in row-major mask order.
std::optional<MaskPair> FindModularityViolation(std::span<const Rational> table,
                                                int n, Modularity kind);
// First (A, A + u) with h(A + u) < h(A) (or <= when strict), A ascending then
// u ascending.
std::optional<MaskPair> FindMonotonicityViolation(
    std::span<const Rational> table, int n, bool strict);
// Maximum of f(A|P)/g(A|P) over nonempty A within `residual`, where P is
// `prefix`; tables are over the full ground set.
DensestScan ScanDensest(std::span<const Rational> f,
                        std::span<const Rational> g, Mask residual,
                        Mask prefix);
// Smallest mask S violating the bound (vec(S) compared to h(S) +- slack).
std::optional<Mask> FindBoundViolation(std::span<const Rational> table,
                                       std::span<const Rational> vec, int n,
                                       BoundSide side);
std::optional<Mask> FindBoundViolation(std::span<const Rational> table,
                                       std::span<const double> vec, int n,
                                       BoundSide side, double slack);
// max_S sum_{u in S} weight_u, smallest maximizing mask.
SubsetValue MaxWeightSubset(std::span<const Rational> weights);
// Agent best response: maximize alpha f(S) - g(S); among ties prefer larger
// f(S), then the union of the tied sets when it ties too, then lowest mask.
SubsetValue BestResponse(std::span<const Rational> f,
                         std::span<const Rational> g, int n,
                         const Rational& alpha);

}  // namespace serial

namespace parallel {

std::optional<MaskPair> FindModularityViolation(std::span<const Rational> table,
                                                int n, Modularity kind);
std::optional<MaskPair> FindMonotonicityViolation(
    std::span<const Rational> table, int n, bool strict);
DensestScan ScanDensest(std::span<const Rational> f,
                        std::span<const Rational> g, Mask residual,
                        Mask prefix);
std::optional<Mask> FindBoundViolation(std::span<const Rational> table,
                                       std::span<const Rational> vec, int n,
                                       BoundSide side);
std::optional<Mask> FindBoundViolation(std::span<const Rational> table,
                                       std::span<const double> vec, int n,
                                       BoundSide side, double slack);
SubsetValue MaxWeightSubset(std::span<const Rational> weights);
SubsetValue BestResponse(std::span<const Rational> f,
                         std::span<const Rational> g, int n,
                         const Rational& alpha);

}  // namespace parallel

inline std::optional<MaskPair> FindModularityViolation(
    std::span<const Rational> table, int n, Modularity kind, Exec exec) {
  return exec == Exec::kSerial
             ? serial::FindModularityViolation(table, n, kind)
             : parallel::FindModularityViolation(table, n, kind);
}
inline std::optional<MaskPair> FindMonotonicityViolation(
    std::span<const Rational> table, int n, bool strict, Exec exec) {
  return exec == Exec::kSerial
             ? serial::FindMonotonicityViolation(table, n, strict)
             : parallel::FindMonotonicityViolation(table, n, strict);
}
inline DensestScan ScanDensest(std::span<const Rational> f,
                               std::span<const Rational> g, Mask residual,
                               Mask prefix, Exec exec) {
  return exec == Exec::kSerial ? serial::ScanDensest(f, g, residual, prefix)
                               : parallel::ScanDensest(f, g, residual, prefix);
}
inline SubsetValue MaxWeightSubset(std::span<const Rational> weights,
                                   Exec exec) {
  return exec == Exec::kSerial ? serial::MaxWeightSubset(weights)
                               : parallel::MaxWeightSubset(weights);
}
inline SubsetValue BestResponse(std::span<const Rational> f,
                                std::span<const Rational> g, int n,
                                const Rational& alpha, Exec exec) {
  return exec == Exec::kSerial ? serial::BestResponse(f, g, n, alpha)
                               : parallel::BestResponse(f, g, n, alpha);
}

}  // namespace dualmod

#endif  // DUALMOD_KERNELS_H_
