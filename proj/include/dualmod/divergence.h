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

#ifndef DUALMOD_DIVERGENCE_H_
#define DUALMOD_DIVERGENCE_H_

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "dualmod/instance.h"
#include "dualmod/kernels.h"
#include "dualmod/permutation.h"
#include "dualmod/rational.h"

namespace dualmod {

// Either an exact rational or a binary64 approximation.
class Value {
 public:
  explicit Value(Rational q) : v_(std::move(q)) {}
  explicit Value(double d) : v_(d) {}

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& exact() const { return std::get<Rational>(v_); }
  double approx() const {
    return is_exact() ? exact().get_d() : std::get<double>(v_);
  }
  // "p/q" when exact, shortest round-trip decimal otherwise.
  std::string ToString() const;

 private:
  std::variant<Rational, double> v_;
};

enum class DivergenceTag {
  kQuadratic,
  kEntropyKL,
  kEisenbergGale,
  kHockeyStick
};

class DivergenceKind {
 public:
  static DivergenceKind Quadratic() { return {DivergenceTag::kQuadratic, 0}; }
  static DivergenceKind EntropyKL() { return {DivergenceTag::kEntropyKL, 0}; }
  static DivergenceKind EisenbergGale() {
    return {DivergenceTag::kEisenbergGale, 0};
  }
  static DivergenceKind HockeyStick(Rational gamma);

  DivergenceTag tag() const { return tag_; }
  const Rational& gamma() const { return gamma_; }
  // "quadratic", "kl", "eg" or "hs:<gamma>".
  std::string Name() const;
  bool strictly_convex() const { return tag_ != DivergenceTag::kHockeyStick; }
  // Values are exact rationals (no logarithms involved).
  bool is_exact() const {
    return tag_ == DivergenceTag::kQuadratic ||
           tag_ == DivergenceTag::kHockeyStick;
  }

  // theta(t). KL uses 0 log 0 = 0; EG at t = 0 throws DomainError.
  Value Theta(const Rational& t) const;
  double Theta(double t) const;
  // theta'(t); the hockey stick uses the right derivative [t > gamma].
  double ThetaPrime(double t) const;

 private:
  DivergenceKind(DivergenceTag tag, Rational gamma)
      : tag_(tag), gamma_(std::move(gamma)) {}

  DivergenceTag tag_;
  Rational gamma_;
};

DivergenceKind ParseDivergenceKind(std::string_view text);

// sum_u y_u theta(x_u / y_u). Requires y_u > 0 (ZeroCostCoordinate).
Value Divergence(const DivergenceKind& kind, std::span<const Rational> x,
                 std::span<const Rational> y);
double Divergence(const DivergenceKind& kind, std::span<const double> x,
                  std::span<const double> y);

// Spectral norm of the Hessian of Phi(x, y) at an interior point. Phi is
// separable and each 2x2 block has rank one, so this is the largest block
// trace. Requires a strictly convex kind and x, y > 0.
double HessianSpectralNorm(const DivergenceKind& kind,
                           std::span<const double> x,
                           std::span<const double> y);

inline constexpr int kDefaultHockeyStickLimit = 20;

// max over S of x(S) - gamma y(S) by enumeration; the empty set gives 0.
SubsetValue HockeyStickSupForm(std::span<const Rational> x,
                               std::span<const Rational> y,
                               const Rational& gamma,
                               int max_n = kDefaultHockeyStickLimit,
                               Exec exec = Exec::kParallel);

// Phi at an allocation; membership is the caller's responsibility.
Value Objective(const DualModularInstance& inst, const Allocation& a,
                const DivergenceKind& kind);
double Objective(const DualModularInstance& inst, const AllocationF& a,
                 const DivergenceKind& kind);

}  // namespace dualmod

#endif  // DUALMOD_DIVERGENCE_H_
