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

#include "dualmod/solver.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <type_traits>

#include "dualmod/error.h"

namespace dualmod {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename T>
std::vector<T> Convert(const std::vector<Rational>& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return v;
  } else {
    return ToDoubles(v);
  }
}

template <typename T>
T FromRational(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else {
    return q.get_d();
  }
}

template <typename T>
T StepSize(SolverVariant variant, int k) {
  if (variant == SolverVariant::kFrankWolfe) return T(2) / T(k + 2);
  return T(1) / T(k + 1);
}

double SafeDivergence(const DivergenceKind& kind, const AllocationF& a) {
  try {
    return Divergence(kind, a.x, a.y);
  } catch (const Error&) {
    return kNaN;
  }
}

AllocationF AsDoubles(const Allocation& a) { return ToDoubles(a); }
const AllocationF& AsDoubles(const AllocationF& a) { return a; }

template <typename T, typename Chooser>
SolverTrace Run(const DualModularInstance& inst, const SolverConfig& cfg,
                const IterateObserver& observer, Chooser choose) {
  const int n = inst.size();
  if (cfg.iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "iterations must be at least 1");
  }
  if (cfg.stride < 1) {
    throw Error(ErrorCode::kInvalidArgument, "stride must be at least 1");
  }
  const Permutation init = cfg.initial.value_or(Permutation::Identity(n));
  if (init.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "initial permutation has the wrong length");
  }
  BasicAllocation<T> cur{Convert<T>(Vertex(inst.f(), init)),
                         Convert<T>(Vertex(inst.g(), init))};
  const DivergenceKind quadratic = DivergenceKind::Quadratic();
  const DivergenceKind kl = DivergenceKind::EntropyKL();
  const DivergenceKind eg = DivergenceKind::EisenbergGale();

  SolverTrace trace;
  trace.records.reserve(cfg.iterations + 1);
  for (int k = 0;; ++k) {
    if constexpr (std::is_same_v<T, Rational>) {
      if (observer.exact) observer.exact(k, cur);
    } else {
      if (observer.approx) observer.approx(k, cur);
    }
    const AllocationF approx = AsDoubles(cur);
    IterationRecord rec;
    rec.k = k;
    rec.phi_quadratic = SafeDivergence(quadratic, approx);
    rec.phi_kl = SafeDivergence(kl, approx);
    rec.phi_eg = SafeDivergence(eg, approx);
    rec.phi_kind = SafeDivergence(cfg.kind, approx);
    if (k % cfg.stride == 0 || k == cfg.iterations) {
      rec.density = InducedDensities(approx);
    }
    if (k == cfg.iterations) {
      trace.records.push_back(std::move(rec));
      break;
    }
    const Permutation sigma = choose(k, cur);
    rec.sigma = sigma.order();
    trace.records.push_back(std::move(rec));

    const std::vector<T> c = Convert<T>(Vertex(inst.f(), sigma));
    const std::vector<T> d = Convert<T>(Vertex(inst.g(), sigma));
    const T gamma = StepSize<T>(cfg.variant, k);
    const T keep = T(1) - gamma;
    for (int u = 0; u < n; ++u) {
      cur.x[u] = keep * cur.x[u] + gamma * c[u];
      cur.y[u] = keep * cur.y[u] + gamma * d[u];
    }
  }
  trace.final_allocation = AsDoubles(cur);
  trace.final_density = trace.records.back().density;
  if constexpr (std::is_same_v<T, Rational>) {
    trace.exact_final_allocation = cur;
  }
  return trace;
}

template <typename T>
Permutation PeelOrder(const DualModularInstance& inst,
                      const std::vector<Rational>& w, const T& gamma,
                      const std::vector<T>& x) {
  const int n = inst.size();
  std::vector<int> order(n);
  Mask remaining = inst.ground().Full();
  for (int pos = n - 1; pos >= 0; --pos) {
    int best = -1;
    T best_score{};
    for (int u : Elements(remaining)) {
      const T gain =
          FromRational<T>(inst.f().Marginal(Bit(u), remaining & ~Bit(u)));
      T score = ((T(1) - gamma) * x[u] + gamma * gain) / FromRational<T>(w[u]);
      if (best < 0 || score < best_score) {
        best = u;
        best_score = score;
      }
    }
    order[pos] = best;
    remaining &= ~Bit(best);
  }
  return Permutation(std::move(order));
}

template <typename T>
SolverTrace RunFrankWolfe(const DualModularInstance& inst,
                          const SolverConfig& cfg,
                          const IterateObserver& observer) {
  return Run<T>(inst, cfg, observer, [&](int, const BasicAllocation<T>& cur) {
    return GradientOracle(InducedDensities(cur), cfg.ties);
  });
}

template <typename T>
SolverTrace RunGreedyPlusPlus(const DualModularInstance& inst,
                              const SolverConfig& cfg,
                              const IterateObserver& observer) {
  const std::vector<Rational>& w = inst.g().weights();
  for (int u = 0; u < inst.size(); ++u) {
    if (sgn(w[u]) <= 0) {
      throw Error(ErrorCode::kZeroCostCoordinate,
                  "linear cost weight of element " + std::to_string(u) +
                      " is not positive",
                  u);
    }
  }
  return Run<T>(inst, cfg, observer, [&](int k, const BasicAllocation<T>& cur) {
    return PeelOrder<T>(inst, w, StepSize<T>(cfg.variant, k), cur.x);
  });
}

double Harmonic(int t) {
  double h = 0;
  for (int j = 1; j <= t; ++j) h += 1.0 / j;
  return h;
}

}  // namespace

Permutation GradientOracle(std::span<const Rational> rho, TieBreak ties) {
  return SortByDensity(rho, ties);
}

Permutation GradientOracle(std::span<const double> rho, TieBreak ties) {
  return SortByDensity(rho, ties);
}

Value PartialDerivative(const DualModularInstance& inst,
                        std::span<const Rational> rho, const Permutation& sigma,
                        const DivergenceKind& kind) {
  const int n = inst.size();
  if (static_cast<int>(rho.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "density vector length does not match the ground set");
  }
  const std::vector<Rational> fs = Vertex(inst.f(), sigma);
  const std::vector<Rational> gs = Vertex(inst.g(), sigma);
  if (kind.is_exact()) {
    Rational total = 0;
    for (int v = 0; v < n; ++v) {
      if (kind.tag() == DivergenceTag::kQuadratic) {
        // theta' = 2t, theta - t theta' = -t^2.
        total += fs[v] * 2 * rho[v] - gs[v] * rho[v] * rho[v];
      } else if (rho[v] > kind.gamma()) {
        // theta' = 1, theta - t theta' = -gamma.
        total += fs[v] - gs[v] * kind.gamma();
      }
    }
    return Value(total);
  }
  return Value(PartialDerivative(inst, ToDoubles(rho), sigma, kind));
}

double PartialDerivative(const DualModularInstance& inst,
                         std::span<const double> rho, const Permutation& sigma,
                         const DivergenceKind& kind) {
  const int n = inst.size();
  if (static_cast<int>(rho.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "density vector length does not match the ground set");
  }
  const std::vector<double> fs = ToDoubles(Vertex(inst.f(), sigma));
  const std::vector<double> gs = ToDoubles(Vertex(inst.g(), sigma));
  double total = 0;
  for (int v = 0; v < n; ++v) {
    if (kind.tag() != DivergenceTag::kQuadratic &&
        kind.tag() != DivergenceTag::kHockeyStick && !(rho[v] > 0)) {
      throw Error(ErrorCode::kDomainError,
                  "logarithmic divergence needs positive densities (element " +
                      std::to_string(v) + ")",
                  v);
    }
    const double d = kind.ThetaPrime(rho[v]);
    total += fs[v] * d + gs[v] * (kind.Theta(rho[v]) - rho[v] * d);
  }
  return total;
}

SolverTrace FrankWolfe(const DualModularInstance& inst, const SolverConfig& cfg,
                       const IterateObserver& observer) {
  SolverConfig c = cfg;
  c.variant = SolverVariant::kFrankWolfe;
  return c.arithmetic == Arithmetic::kRational
             ? RunFrankWolfe<Rational>(inst, c, observer)
             : RunFrankWolfe<double>(inst, c, observer);
}

SolverTrace GreedyPlusPlus(const DualModularInstance& inst,
                           const SolverConfig& cfg,
                           const IterateObserver& observer) {
  if (inst.g().kind() != SetFunctionKind::kLinear) {
    throw Error(ErrorCode::kNotLinearCost,
                "Greedy++ requires a linear cost function");
  }
  SolverConfig c = cfg;
  c.variant = SolverVariant::kGreedyPlusPlus;
  return c.arithmetic == Arithmetic::kRational
             ? RunGreedyPlusPlus<Rational>(inst, c, observer)
             : RunGreedyPlusPlus<double>(inst, c, observer);
}

SolverTrace Solve(const DualModularInstance& inst, const SolverConfig& cfg,
                  const IterateObserver& observer) {
  return cfg.variant == SolverVariant::kFrankWolfe
             ? FrankWolfe(inst, cfg, observer)
             : GreedyPlusPlus(inst, cfg, observer);
}

ErrorBounds ComputeErrorBounds(const DualModularInstance& inst,
                               const DivergenceKind& kind, int iterations,
                               SolverVariant variant) {
  if (!kind.strictly_convex()) {
    throw Error(ErrorCode::kInvalidArgument,
                "error bounds need a strictly convex divergence");
  }
  if (iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "iterations must be at least 1");
  }
  const Mask full = inst.ground().Full();
  if (inst.f().Evaluate(full) != 1 || inst.g().Evaluate(full) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "error bounds assume f(V) = g(V) = 1; normalize the instance");
  }
  const Extremes e = ComputeExtremes(inst);
  if (sgn(e.g_min) <= 0) {
    throw Error(ErrorCode::kDomainError,
                "g_min = 0: the cost function is not strictly monotone");
  }
  const double f_min = e.f_min.get_d(), f_max = e.f_max.get_d();
  const double g_min = e.g_min.get_d(), g_max = e.g_max.get_d();
  auto inv = [](double v) { return v > 0 ? 1 / v : kInf; };

  ErrorBounds b;
  // Hessian spectral norm bounds, and strong-convexity constants of the
  // objective as a function of the density vector (absolute and relative).
  double l_abs = 0, l_mult = 0;
  switch (kind.tag()) {
    case DivergenceTag::kQuadratic:
      b.hessian_upper = 4 / (g_min * g_min * g_min);
      l_abs = 2 * g_min * g_min / g_max;
      l_mult = 2 * f_min * f_min * g_min * g_min / (g_max * g_max * g_max);
      b.g_min_exponent = -2.5;
      break;
    case DivergenceTag::kEntropyKL:
      b.hessian_upper = inv(g_min * g_min) + inv(f_min);
      l_abs = f_min * g_min * g_min;
      l_mult = f_min * f_min * f_min * g_min * g_min / (g_max * g_max);
      break;
    case DivergenceTag::kEisenbergGale:
      b.hessian_upper = inv(g_min) + inv(f_min * f_min);
      l_abs = g_min * g_min * g_min / (f_max * f_max);
      l_mult = f_min * f_min * g_min * g_min * g_min /
               (f_max * f_max * g_max * g_max);
      break;
    case DivergenceTag::kHockeyStick:
      break;
  }
  // Squared diameter of the product of the two bases is at most 4.
  b.curvature_upper = 4 * b.hessian_upper;
  const double t = iterations;
  b.objective_gap_upper =
      variant == SolverVariant::kFrankWolfe
          ? 2 * b.curvature_upper / (t + 2)
          : b.curvature_upper * Harmonic(iterations) / (2 * t);
  b.absolute_density_upper =
      l_abs > 0 ? std::sqrt(2 * b.objective_gap_upper / l_abs) : kInf;
  if (sgn(e.f_min) == 0) {
    b.warnings.push_back(
        "f_min = 0: some density may be 0, multiplicative bound suppressed");
    if (kind.tag() != DivergenceTag::kQuadratic) {
      b.warnings.push_back(
          "f_min = 0: curvature bound is infinite for this divergence");
    }
  } else {
    b.multiplicative_density_upper =
        std::sqrt(2 * b.objective_gap_upper / l_mult);
  }
  return b;
}

void WriteTraceCsv(std::ostream& out, const SolverTrace& trace,
                   const GroundSet& ground, bool densities) {
  auto num = [&](double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, end - buf);
  };
  out << "k,phi_quadratic,phi_kl,phi_eg";
  if (densities) {
    for (const std::string& label : ground.labels()) out << ",rho_" << label;
  }
  out << '\n';
  for (const IterationRecord& r : trace.records) {
    out << r.k << ',';
    num(r.phi_quadratic);
    out << ',';
    num(r.phi_kl);
    out << ',';
    num(r.phi_eg);
    if (densities) {
      for (int u = 0; u < ground.size(); ++u) {
        out << ',';
        if (!r.density.empty()) num(r.density[u]);
      }
    }
    out << '\n';
  }
}

}  // namespace dualmod
