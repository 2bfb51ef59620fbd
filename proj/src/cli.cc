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

#include "dualmod/cli.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dualmod/contracts.h"
#include "dualmod/decomposition.h"
#include "dualmod/divergence.h"
#include "dualmod/error.h"
#include "dualmod/instance.h"
#include "dualmod/io.h"
#include "dualmod/solver.h"

namespace dualmod {
namespace {

struct Limits {
  int verify = kDefaultVerifyLimit;
  int decompose = kDefaultDecompositionLimit;
  int enumerate = kDefaultContractLimit;
};

Limits ReadLimits() {
  Limits limits;
  if (const char* env = std::getenv("DUALMOD_BRUTE_LIMIT")) {
    int v = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v < 1 ||
        v > kMaxGroundSize) {
      throw Error(ErrorCode::kInvalidArgument,
                  "DUALMOD_BRUTE_LIMIT must be an integer in [1, 63]");
    }
    limits = {v, v, v};
  }
  return limits;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema:
    case ErrorCode::kIo:
    case ErrorCode::kInvalidArgument:
      return kExitInput;
    case ErrorCode::kStructure:
    case ErrorCode::kNotStrictlyMonotone:
    case ErrorCode::kInfiniteDensity:
    case ErrorCode::kNotLinearCost:
      return kExitStructure;
    default:
      return kExitDomain;
  }
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::vector<Rational> ParseVector(const std::string& text,
                                  const std::string& flag) {
  std::vector<Rational> out;
  for (const std::string& part : SplitCommas(text)) {
    try {
      out.push_back(ParseRational(part));
    } catch (const Error& e) {
      throw Error(ErrorCode::kSchema, flag + ": " + e.what());
    }
  }
  return out;
}

Permutation ParsePermutation(const std::string& text, const GroundSet& ground) {
  std::vector<int> order;
  for (const std::string& label : SplitCommas(text)) {
    std::optional<int> u = ground.IndexOf(label);
    if (!u) {
      throw Error(ErrorCode::kSchema,
                  "--initial: unknown label '" + label + "'");
    }
    order.push_back(*u);
  }
  try {
    return Permutation(std::move(order));
  } catch (const Error& e) {
    throw Error(ErrorCode::kSchema, std::string("--initial: ") + e.what());
  }
}

Json ValueToJson(const Value& v) {
  if (v.is_exact()) return RationalToJson(v.exact());
  return std::isfinite(v.approx()) ? Json(v.approx()) : Json();
}

Json DensityMap(const GroundSet& ground, const std::vector<double>& rho) {
  Json out = Json::object();
  for (int u = 0; u < ground.size(); ++u) out[ground.label(u)] = rho[u];
  return out;
}

struct SolveFlags {
  std::string kind = "quadratic";
  int iterations = 100;
  std::string variant = "fw";
  std::string arithmetic = "binary64";
  std::string trace_path;
  bool trace_densities = false;
  int stride = 10;
  std::string initial;
};

int RunSolve(const DualModularInstance& inst, const SolveFlags& flags,
             std::ostream& out, std::ostream& err) {
  SolverConfig cfg;
  cfg.kind = ParseDivergenceKind(flags.kind);
  cfg.iterations = flags.iterations;
  cfg.variant = flags.variant == "fw" ? SolverVariant::kFrankWolfe
                                      : SolverVariant::kGreedyPlusPlus;
  cfg.arithmetic = flags.arithmetic == "rational" ? Arithmetic::kRational
                                                  : Arithmetic::kBinary64;
  cfg.stride = flags.stride;
  if (!flags.initial.empty()) {
    cfg.initial = ParsePermutation(flags.initial, inst.ground());
  }
  const SolverTrace trace = Solve(inst, cfg);

  if (!flags.trace_path.empty()) {
    std::ofstream file(flags.trace_path);
    if (!file) {
      throw Error(ErrorCode::kIo,
                  "cannot write trace file " + flags.trace_path);
    }
    if (flags.trace_path.ends_with(".json")) {
      file << TraceToJson(trace, inst.ground()).dump(2) << '\n';
    } else {
      WriteTraceCsv(file, trace, inst.ground(), flags.trace_densities);
    }
  }

  const IterationRecord& last = trace.records.back();
  Json report;
  report["variant"] = flags.variant;
  report["kind"] = cfg.kind.Name();
  report["iterations"] = cfg.iterations;
  report["arithmetic"] = flags.arithmetic;
  report["final_density"] = DensityMap(inst.ground(), trace.final_density);
  Json phi;
  phi["quadratic"] = ValueToJson(Value(last.phi_quadratic));
  phi["kl"] = ValueToJson(Value(last.phi_kl));
  phi["eg"] = ValueToJson(Value(last.phi_eg));
  phi[cfg.kind.Name()] = ValueToJson(Value(last.phi_kind));
  report["phi"] = std::move(phi);
  // Bounds are stated for the normalized instance.
  Json bounds;
  if (cfg.kind.strictly_convex()) {
    try {
      bounds = ErrorBoundsToJson(ComputeErrorBounds(
          Normalize(inst), cfg.kind, cfg.iterations, cfg.variant));
    } catch (const Error& e) {
      err << "warning: error bounds unavailable: " << e.what() << '\n';
    }
  }
  report["error_bounds"] = std::move(bounds);
  Emit(out, report);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Dual-modular density decomposition toolkit", "dualmod"};
  app.require_subcommand(1);
  std::string instance_path;

  CLI::App* verify = app.add_subcommand(
      "verify", "Check supermodularity, submodularity and monotonicity");
  verify->add_option("instance", instance_path, "Instance JSON")->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "Exact density decomposition");
  decompose->add_option("instance", instance_path, "Instance JSON")->required();

  SolveFlags solve_flags;
  CLI::App* solve =
      app.add_subcommand("solve", "Frank-Wolfe or Greedy++ iterations");
  solve->add_option("instance", instance_path, "Instance JSON")->required();
  solve->add_option("--kind", solve_flags.kind,
                    "quadratic | kl | eg | hs:<gamma>");
  solve->add_option("--T", solve_flags.iterations, "Number of iterations")
      ->check(CLI::PositiveNumber);
  solve->add_option("--variant", solve_flags.variant, "fw | greedypp")
      ->check(CLI::IsMember({"fw", "greedypp"}));
  solve
      ->add_option("--arithmetic", solve_flags.arithmetic,
                   "binary64 | rational")
      ->check(CLI::IsMember({"binary64", "rational"}));
  solve->add_option("--trace", solve_flags.trace_path,
                    "Write the per-iteration trace (CSV, or JSON for *.json)");
  solve->add_flag("--densities", solve_flags.trace_densities,
                  "Add per-element density columns to the CSV trace");
  solve->add_option("--stride", solve_flags.stride, "Density snapshot period")
      ->check(CLI::PositiveNumber);
  solve->add_option("--initial", solve_flags.initial,
                    "Initial permutation as comma-separated labels");

  std::string alpha_text;
  CLI::App* contracts =
      app.add_subcommand("contracts", "Critical values and optimal contract");
  contracts->add_option("instance", instance_path, "Instance JSON")->required();
  contracts->add_option("--alpha", alpha_text, "Single contract query (p/q)");

  std::string output_path;
  CLI::App* complement = app.add_subcommand(
      "complement", "Write the complementary instance (reward/cost swapped)");
  complement->add_option("instance", instance_path, "Instance JSON")
      ->required();
  complement->add_option("-o,--output", output_path,
                         "Output file (default: stdout)");

  std::string x_text, y_text, kind_text = "quadratic";
  bool sup = false;
  CLI::App* divergence =
      app.add_subcommand("divergence", "Evaluate D(x || y) for one kind");
  divergence->add_option("instance", instance_path,
                         "Instance JSON (labels for --sup)");
  divergence->add_option("--x", x_text, "Comma-separated rationals")
      ->required();
  divergence->add_option("--y", y_text, "Comma-separated rationals")
      ->required();
  divergence->add_option("--kind", kind_text,
                         "quadratic | kl | eg | hs:<gamma>");
  divergence->add_flag("--sup", sup,
                       "Hockey stick: also report a maximizing subset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Limits limits = ReadLimits();
    if (divergence->parsed()) {
      const DivergenceKind kind = ParseDivergenceKind(kind_text);
      const std::vector<Rational> x = ParseVector(x_text, "--x");
      const std::vector<Rational> y = ParseVector(y_text, "--y");
      std::optional<GroundSet> ground;
      if (!instance_path.empty()) {
        ground = LoadInstance(instance_path).ground();
        if (ground->size() != static_cast<int>(x.size())) {
          throw Error(ErrorCode::kSchema,
                      "--x: length does not match the instance");
        }
      } else {
        ground = GroundSet::Indexed(static_cast<int>(x.size()));
      }
      Json report;
      report["kind"] = kind.Name();
      report["value"] = ValueToJson(Divergence(kind, x, y));
      if (sup) {
        if (kind.tag() != DivergenceTag::kHockeyStick) {
          throw Error(ErrorCode::kInvalidArgument,
                      "--sup applies to the hockey-stick kind only");
        }
        const SubsetValue best =
            HockeyStickSupForm(x, y, kind.gamma(), limits.enumerate);
        report["sup_value"] = RationalToJson(best.value);
        report["argmax"] = SubsetToJson(*ground, best.subset);
      }
      Emit(out, report);
      return kExitOk;
    }

    const DualModularInstance inst = LoadInstance(instance_path);
    if (verify->parsed()) {
      const StructureReport report = VerifyDualModularity(inst, limits.verify);
      Emit(out, StructureReportToJson(report, inst.ground()));
      return report.IsDualModular() ? kExitOk : kExitStructure;
    }
    if (decompose->parsed()) {
      Emit(out, DecompositionToJson(DecomposeDensity(inst, limits.decompose),
                                    inst.ground()));
      return kExitOk;
    }
    if (solve->parsed()) return RunSolve(inst, solve_flags, out, err);
    if (contracts->parsed()) {
      const DensityDecomposition dec = DecomposeDensity(inst, limits.decompose);
      if (!alpha_text.empty()) {
        Rational alpha;
        try {
          alpha = ParseRational(alpha_text);
        } catch (const Error& e) {
          throw Error(ErrorCode::kSchema, std::string("--alpha: ") + e.what());
        }
        Emit(out, ContractRowToJson(
                      EvaluateContract(inst, alpha,
                                       AgentBestResponse(inst, dec, alpha)),
                      inst.ground()));
      } else {
        Emit(out, ContractAnalysisToJson(AnalyzeContracts(inst, dec),
                                         inst.ground()));
      }
      return kExitOk;
    }
    if (complement->parsed()) {
      const Json j = InstanceToJson(ComplementInstance(inst, limits.verify));
      if (output_path.empty()) {
        Emit(out, j);
      } else {
        std::ofstream file(output_path);
        if (!file) throw Error(ErrorCode::kIo, "cannot write " + output_path);
        Emit(file, j);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitInput;
}

}  // namespace dualmod
