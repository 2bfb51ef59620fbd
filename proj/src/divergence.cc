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

#include "dualmod/divergence.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "dualmod/error.h"

namespace dualmod {
namespace {

void CheckLengths(std::size_t x, std::size_t y) {
  if (x != y) {
    throw Error(ErrorCode::kInvalidArgument, "x and y have different lengths");
  }
}

[[noreturn]] void ZeroCost(int u) {
  throw Error(ErrorCode::kZeroCostCoordinate,
              "cost coordinate " + std::to_string(u) +
                  " is zero; the induced density is undefined",
              u);
}

}  // namespace

std::string Value::ToString() const {
  if (is_exact()) return dualmod::ToString(exact());
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(v_));
  return std::string(buf, end);
}

DivergenceKind DivergenceKind::HockeyStick(Rational gamma) {
  if (sgn(gamma) < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "hockey-stick gamma must be nonnegative");
  }
  return {DivergenceTag::kHockeyStick, std::move(gamma)};
}

std::string DivergenceKind::Name() const {
  switch (tag_) {
    case DivergenceTag::kQuadratic:
      return "quadratic";
    case DivergenceTag::kEntropyKL:
      return "kl";
    case DivergenceTag::kEisenbergGale:
      return "eg";
    case DivergenceTag::kHockeyStick:
      return "hs:" + dualmod::ToString(gamma_);
  }
  return "";
}

Value DivergenceKind::Theta(const Rational& t) const {
  switch (tag_) {
    case DivergenceTag::kQuadratic:
      return Value(Rational(t * t));
    case DivergenceTag::kHockeyStick:
      return Value(t > gamma_ ? Rational(t - gamma_) : Rational(0));
    default:
      if (sgn(t) == 0 && tag_ == DivergenceTag::kEisenbergGale) {
        throw Error(ErrorCode::kDomainError, "-log t is undefined at t = 0");
      }
      return Value(Theta(t.get_d()));
  }
}

double DivergenceKind::Theta(double t) const {
  switch (tag_) {
    case DivergenceTag::kQuadratic:
      return t * t;
    case DivergenceTag::kEntropyKL:
      return t == 0 ? 0.0 : t * std::log(t);
    case DivergenceTag::kEisenbergGale:
      return -std::log(t);
    case DivergenceTag::kHockeyStick:
      return std::max(t - gamma_.get_d(), 0.0);
  }
  return 0;
}

double DivergenceKind::ThetaPrime(double t) const {
  switch (tag_) {
    case DivergenceTag::kQuadratic:
      return 2 * t;
    case DivergenceTag::kEntropyKL:
      return std::log(t) + 1;
    case DivergenceTag::kEisenbergGale:
      return -1 / t;
    case DivergenceTag::kHockeyStick:
      return t > gamma_.get_d() ? 1.0 : 0.0;
  }
  return 0;
}

DivergenceKind ParseDivergenceKind(std::string_view text) {
  if (text == "quadratic") return DivergenceKind::Quadratic();
  if (text == "kl") return DivergenceKind::EntropyKL();
  if (text == "eg") return DivergenceKind::EisenbergGale();
  if (text.starts_with("hs:")) {
    return DivergenceKind::HockeyStick(ParseRational(text.substr(3)));
  }
  throw Error(ErrorCode::kSchema,
              "unknown divergence kind '" + std::string(text) +
                  "' (expected quadratic, kl, eg or hs:<gamma>)");
}

Value Divergence(const DivergenceKind& kind, std::span<const Rational> x,
                 std::span<const Rational> y) {
  CheckLengths(x.size(), y.size());
  for (std::size_t u = 0; u < y.size(); ++u) {
    if (sgn(y[u]) <= 0) ZeroCost(static_cast<int>(u));
  }
  if (kind.is_exact()) {
    Rational total = 0;
    for (std::size_t u = 0; u < x.size(); ++u) {
      total += y[u] * kind.Theta(Rational(x[u] / y[u])).exact();
    }
    return Value(total);
  }
  double total = 0;
  for (std::size_t u = 0; u < x.size(); ++u) {
    total += y[u].get_d() * kind.Theta(Rational(x[u] / y[u])).approx();
  }
  return Value(total);
}

double Divergence(const DivergenceKind& kind, std::span<const double> x,
                  std::span<const double> y) {
  CheckLengths(x.size(), y.size());
  double total = 0;
  for (std::size_t u = 0; u < x.size(); ++u) {
    if (!(y[u] > 0)) ZeroCost(static_cast<int>(u));
    if (kind.tag() == DivergenceTag::kEisenbergGale && !(x[u] > 0)) {
      throw Error(
          ErrorCode::kDomainError,
          "-log t is undefined at t = 0 (element " + std::to_string(u) + ")",
          static_cast<int>(u));
    }
    total += y[u] * kind.Theta(x[u] / y[u]);
  }
  return total;
}

double HessianSpectralNorm(const DivergenceKind& kind,
                           std::span<const double> x,
                           std::span<const double> y) {
  CheckLengths(x.size(), y.size());
  if (!kind.strictly_convex()) {
    throw Error(ErrorCode::kInvalidArgument,
                kind.Name() + " has no Hessian: theta is not strictly convex");
  }
  double norm = 0;
  for (std::size_t u = 0; u < x.size(); ++u) {
    const double a = x[u], b = y[u];
    if (!(a > 0 && b > 0)) {
      throw Error(ErrorCode::kDomainError,
                  "Hessian needs an interior point; coordinate " +
                      std::to_string(u) + " is on the boundary");
    }
    double trace = 0;
    switch (kind.tag()) {
      case DivergenceTag::kQuadratic:
        trace = 2 * (a * a + b * b) / (b * b * b);
        break;
      case DivergenceTag::kEntropyKL:
        trace = 1 / a + a / (b * b);
        break;
      case DivergenceTag::kEisenbergGale:
        trace = 1 / b + b / (a * a);
        break;
      case DivergenceTag::kHockeyStick:
        break;
    }
    norm = std::max(norm, trace);
  }
  return norm;
}

SubsetValue HockeyStickSupForm(std::span<const Rational> x,
                               std::span<const Rational> y,
                               const Rational& gamma, int max_n, Exec exec) {
  CheckLengths(x.size(), y.size());
  const int n = static_cast<int>(x.size());
  if (n > max_n) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "hockey-stick enumeration over 2^" + std::to_string(n) +
                    " subsets exceeds limit " + std::to_string(max_n));
  }
  std::vector<Rational> w(n);
  for (int u = 0; u < n; ++u) w[u] = x[u] - gamma * y[u];
  return MaxWeightSubset(w, exec);
}

Value Objective(const DualModularInstance& inst, const Allocation& a,
                const DivergenceKind& kind) {
  if (static_cast<int>(a.x.size()) != inst.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "allocation length does not match the ground set");
  }
  return Divergence(kind, a.x, a.y);
}

double Objective(const DualModularInstance& inst, const AllocationF& a,
                 const DivergenceKind& kind) {
  if (static_cast<int>(a.x.size()) != inst.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "allocation length does not match the ground set");
  }
  return Divergence(kind, a.x, a.y);
}

}  // namespace dualmod
