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

#include "dualmod/io.h"

#include <cmath>
#include <fstream>

#include "dualmod/error.h"

namespace dualmod {
namespace {

[[noreturn]] void SchemaError(const std::string& path,
                              const std::string& what) {
  throw Error(ErrorCode::kSchema, path + ": " + what);
}

const Json& Field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    SchemaError(path, std::string("missing field '") + key + "'");
  return *it;
}

Rational RationalFromJson(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return ParseRational(j.get<std::string>());
    } catch (const Error& e) {
      SchemaError(path, e.what());
    }
  }
  SchemaError(path, "expected a rational as \"p/q\" or an integer");
}

std::vector<Rational> RationalArray(const Json& j, const std::string& path) {
  if (!j.is_array()) SchemaError(path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(RationalFromJson(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int IntFromJson(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) SchemaError(path, "expected an integer");
  return j.get<int>();
}

int Endpoint(const Json& j, int n, const GroundSet* labels,
             const std::string& path) {
  int u = -1;
  if (j.is_string() && labels != nullptr) {
    std::optional<int> idx = labels->IndexOf(j.get<std::string>());
    if (!idx) SchemaError(path, "unknown label '" + j.get<std::string>() + "'");
    u = *idx;
  } else {
    u = IntFromJson(j, path);
  }
  if (u < 0 || u >= n) SchemaError(path, "element index out of range");
  return u;
}

Json ArrayOf(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(RationalToJson(q));
  return out;
}

Json WitnessToJson(const PropertyCheck& c, const GroundSet& ground) {
  Json out;
  out["holds"] = c.holds;
  if (c.witness) {
    out["witness"] = Json::array({SubsetToJson(ground, c.witness->first),
                                  SubsetToJson(ground, c.witness->second)});
  }
  return out;
}

Json DoubleOrNull(double v) { return std::isfinite(v) ? Json(v) : Json(); }

}  // namespace

SetFunction SetFunctionFromJson(const Json& j, int n, const GroundSet* labels,
                                const std::string& path) {
  const Json& kind_field = Field(j, "kind", path);
  if (!kind_field.is_string()) SchemaError(path + ".kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();
  try {
    if (kind == "table") {
      const Json& values = Field(j, "values", path);
      if (!values.is_object())
        SchemaError(path + ".values", "expected an object");
      if (n > 30) SchemaError(path, "explicit tables are limited to n <= 30");
      const std::size_t count = std::size_t{1} << n;
      if (values.size() != count) {
        SchemaError(path + ".values", "expected " + std::to_string(count) +
                                          " entries keyed by mask");
      }
      std::vector<Rational> table(count);
      std::vector<bool> seen(count, false);
      for (auto it = values.begin(); it != values.end(); ++it) {
        const std::string key_path = path + ".values[\"" + it.key() + "\"]";
        std::size_t mask = 0;
        try {
          std::size_t used = 0;
          mask = std::stoull(it.key(), &used);
          if (used != it.key().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          SchemaError(key_path, "key is not a mask integer");
        }
        if (mask >= count || seen[mask]) {
          SchemaError(key_path, "mask out of range or repeated");
        }
        seen[mask] = true;
        table[mask] = RationalFromJson(it.value(), key_path);
      }
      return SetFunction::ExplicitTable(n, std::move(table));
    }
    if (kind == "edges_inside") {
      const Json& edges = Field(j, "edges", path);
      if (!edges.is_array()) SchemaError(path + ".edges", "expected an array");
      std::vector<WeightedEdge> out;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string ep = path + ".edges[" + std::to_string(i) + "]";
        const Json& e = edges[i];
        if (!e.is_array() || e.size() < 2 || e.size() > 3) {
          SchemaError(ep, "expected [u, v] or [u, v, weight]");
        }
        WeightedEdge w;
        w.u = Endpoint(e[0], n, labels, ep + "[0]");
        w.v = Endpoint(e[1], n, labels, ep + "[1]");
        if (e.size() == 3) w.weight = RationalFromJson(e[2], ep + "[2]");
        out.push_back(std::move(w));
      }
      return SetFunction::EdgesInside(n, std::move(out));
    }
    if (kind == "linear") {
      std::vector<Rational> w =
          RationalArray(Field(j, "weights", path), path + ".weights");
      if (static_cast<int>(w.size()) != n) {
        SchemaError(path + ".weights",
                    "expected " + std::to_string(n) + " weights");
      }
      return SetFunction::Linear(std::move(w));
    }
    if (kind == "concave_cardinality") {
      std::vector<Rational> phi =
          RationalArray(Field(j, "phi", path), path + ".phi");
      if (static_cast<int>(phi.size()) != n + 1) {
        SchemaError(path + ".phi",
                    "expected " + std::to_string(n + 1) + " values phi(0..n)");
      }
      return SetFunction::ConcaveOfCardinality(std::move(phi));
    }
    if (kind == "scaled") {
      return SetFunction::Scaled(
          SetFunctionFromJson(Field(j, "base", path), n, labels,
                              path + ".base"),
          RationalFromJson(Field(j, "factor", path), path + ".factor"));
    }
    if (kind == "perturbed") {
      return SetFunction::Perturbed(
          SetFunctionFromJson(Field(j, "base", path), n, labels,
                              path + ".base"),
          RationalFromJson(Field(j, "eta", path), path + ".eta"));
    }
    if (kind == "complement") {
      return SetFunction::ComplementOf(SetFunctionFromJson(
          Field(j, "base", path), n, labels, path + ".base"));
    }
    if (kind == "sum") {
      const Json& terms = Field(j, "terms", path);
      if (!terms.is_array() || terms.empty()) {
        SchemaError(path + ".terms", "expected a nonempty array");
      }
      std::vector<SetFunction> out;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        out.push_back(SetFunctionFromJson(
            terms[i], n, labels, path + ".terms[" + std::to_string(i) + "]"));
      }
      return SetFunction::Sum(std::move(out));
    }
    if (kind == "residual") {
      const int parent_n =
          IntFromJson(Field(j, "parent_size", path), path + ".parent_size");
      if (parent_n < 1 || parent_n > kMaxGroundSize) {
        SchemaError(path + ".parent_size", "out of range");
      }
      SetFunction base = SetFunctionFromJson(Field(j, "base", path), parent_n,
                                             nullptr, path + ".base");
      Mask condition = 0;
      const Json& cond = Field(j, "condition", path);
      if (!cond.is_array())
        SchemaError(path + ".condition", "expected an array");
      for (std::size_t i = 0; i < cond.size(); ++i) {
        condition |=
            Bit(Endpoint(cond[i], parent_n, nullptr,
                         path + ".condition[" + std::to_string(i) + "]"));
      }
      std::vector<int> elements;
      const Json& el = Field(j, "elements", path);
      if (!el.is_array()) SchemaError(path + ".elements", "expected an array");
      for (std::size_t i = 0; i < el.size(); ++i) {
        elements.push_back(
            Endpoint(el[i], parent_n, nullptr,
                     path + ".elements[" + std::to_string(i) + "]"));
      }
      if (static_cast<int>(elements.size()) != n) {
        SchemaError(path + ".elements",
                    "expected " + std::to_string(n) + " elements");
      }
      return SetFunction::Residual(std::move(base), condition,
                                   std::move(elements));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchema) throw;
    SchemaError(path, e.what());
  }
  SchemaError(path + ".kind", "unknown set function kind '" + kind + "'");
}

Json SetFunctionToJson(const SetFunction& h) {
  Json out;
  switch (h.kind()) {
    case SetFunctionKind::kExplicitTable: {
      out["kind"] = "table";
      Json values = Json::object();
      const std::vector<Rational>& t = h.table();
      for (std::size_t m = 0; m < t.size(); ++m) {
        values[std::to_string(m)] = RationalToJson(t[m]);
      }
      out["values"] = std::move(values);
      break;
    }
    case SetFunctionKind::kEdgesInside: {
      out["kind"] = "edges_inside";
      Json edges = Json::array();
      for (const WeightedEdge& e : h.edges()) {
        edges.push_back(Json::array({e.u, e.v, RationalToJson(e.weight)}));
      }
      out["edges"] = std::move(edges);
      break;
    }
    case SetFunctionKind::kLinear:
      out["kind"] = "linear";
      out["weights"] = ArrayOf(h.weights());
      break;
    case SetFunctionKind::kConcaveOfCardinality:
      out["kind"] = "concave_cardinality";
      out["phi"] = ArrayOf(h.phi());
      break;
    case SetFunctionKind::kScaled:
      out["kind"] = "scaled";
      out["base"] = SetFunctionToJson(h.operands().front());
      out["factor"] = RationalToJson(h.factor());
      break;
    case SetFunctionKind::kPerturbed:
      out["kind"] = "perturbed";
      out["base"] = SetFunctionToJson(h.operands().front());
      out["eta"] = RationalToJson(h.factor());
      break;
    case SetFunctionKind::kComplementOf:
      out["kind"] = "complement";
      out["base"] = SetFunctionToJson(h.operands().front());
      break;
    case SetFunctionKind::kSum: {
      out["kind"] = "sum";
      Json terms = Json::array();
      for (const SetFunction& t : h.operands())
        terms.push_back(SetFunctionToJson(t));
      out["terms"] = std::move(terms);
      break;
    }
    case SetFunctionKind::kResidual: {
      const SetFunction& base = h.operands().front();
      out["kind"] = "residual";
      out["parent_size"] = base.ground_size();
      out["base"] = SetFunctionToJson(base);
      out["condition"] = Elements(h.condition());
      out["elements"] = h.residual_elements();
      break;
    }
  }
  return out;
}

DualModularInstance InstanceFromJson(const Json& j) {
  if (!j.is_object()) SchemaError("$", "expected an object");
  const Json& labels_field = Field(j, "labels", "$");
  if (!labels_field.is_array()) SchemaError("$.labels", "expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < labels_field.size(); ++i) {
    if (!labels_field[i].is_string()) {
      SchemaError("$.labels[" + std::to_string(i) + "]", "expected a string");
    }
    labels.push_back(labels_field[i].get<std::string>());
  }
  bool normalized = false;
  if (auto it = j.find("normalized"); it != j.end()) {
    if (!it->is_boolean()) SchemaError("$.normalized", "expected a boolean");
    normalized = it->get<bool>();
  }
  try {
    GroundSet ground(std::move(labels));
    const int n = ground.size();
    SetFunction f = SetFunctionFromJson(Field(j, "f", "$"), n, &ground, "$.f");
    SetFunction g = SetFunctionFromJson(Field(j, "g", "$"), n, &ground, "$.g");
    return DualModularInstance(std::move(ground), std::move(f), std::move(g),
                               normalized);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchema) throw;
    SchemaError("$", e.what());
  }
}

Json InstanceToJson(const DualModularInstance& inst) {
  Json out;
  out["labels"] = inst.ground().labels();
  out["f"] = SetFunctionToJson(inst.f());
  out["g"] = SetFunctionToJson(inst.g());
  out["normalized"] = inst.normalized();
  return out;
}

DualModularInstance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open instance file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSchema, path + ": " + e.what());
  }
  return InstanceFromJson(j);
}

Json RationalToJson(const Rational& q) { return ToString(q); }

Json SubsetToJson(const GroundSet& ground, Mask s) {
  return ground.LabelsOf(s);
}

Json StructureReportToJson(const StructureReport& r, const GroundSet& ground) {
  Json out;
  out["f_supermodular"] = WitnessToJson(r.f_supermodular, ground);
  out["f_monotone"] = WitnessToJson(r.f_monotone, ground);
  out["f_strictly_monotone"] = WitnessToJson(r.f_strictly_monotone, ground);
  out["g_submodular"] = WitnessToJson(r.g_submodular, ground);
  out["g_monotone"] = WitnessToJson(r.g_monotone, ground);
  out["g_strictly_monotone"] = WitnessToJson(r.g_strictly_monotone, ground);
  out["dual_modular"] = r.IsDualModular();
  return out;
}

Json DecompositionToJson(const DensityDecomposition& dec,
                         const GroundSet& ground) {
  Json out;
  Json parts = Json::array();
  for (Mask p : dec.parts) parts.push_back(SubsetToJson(ground, p));
  out["parts"] = std::move(parts);
  out["densities"] = ArrayOf(dec.densities);
  Json rho = Json::object();
  for (int u = 0; u < ground.size(); ++u) {
    rho[ground.label(u)] = RationalToJson(dec.density_vector[u]);
  }
  out["density_vector"] = std::move(rho);
  return out;
}

Json ErrorBoundsToJson(const ErrorBounds& b) {
  Json out;
  out["hessian_upper"] = DoubleOrNull(b.hessian_upper);
  out["curvature_upper"] = DoubleOrNull(b.curvature_upper);
  out["objective_gap_upper"] = DoubleOrNull(b.objective_gap_upper);
  out["absolute_density_upper"] = DoubleOrNull(b.absolute_density_upper);
  out["multiplicative_density_upper"] =
      b.multiplicative_density_upper
          ? DoubleOrNull(*b.multiplicative_density_upper)
          : Json();
  out["g_min_exponent"] = b.g_min_exponent ? Json(*b.g_min_exponent) : Json();
  out["iteration_exponent"] = b.iteration_exponent;
  out["warnings"] = b.warnings;
  return out;
}

Json TraceToJson(const SolverTrace& trace, const GroundSet& ground) {
  Json rows = Json::array();
  for (const IterationRecord& r : trace.records) {
    Json row;
    row["k"] = r.k;
    row["phi_quadratic"] = DoubleOrNull(r.phi_quadratic);
    row["phi_kl"] = DoubleOrNull(r.phi_kl);
    row["phi_eg"] = DoubleOrNull(r.phi_eg);
    if (!r.density.empty()) {
      Json rho = Json::object();
      for (int u = 0; u < ground.size(); ++u) {
        rho[ground.label(u)] = DoubleOrNull(r.density[u]);
      }
      row["rho"] = std::move(rho);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ContractRowToJson(const ContractRow& row, const GroundSet& ground) {
  Json out;
  out["alpha"] = RationalToJson(row.alpha);
  out["response"] = SubsetToJson(ground, row.response);
  out["agent_utility"] = RationalToJson(row.agent_utility);
  out["principal_utility"] = RationalToJson(row.principal_utility);
  return out;
}

Json ContractAnalysisToJson(const ContractAnalysis& a,
                            const GroundSet& ground) {
  Json out;
  out["critical_values"] = ArrayOf(a.critical_values);
  Json rows = Json::array();
  for (const ContractRow& r : a.rows)
    rows.push_back(ContractRowToJson(r, ground));
  out["table"] = std::move(rows);
  out["optimal"] = ContractRowToJson(a.optimal, ground);
  return out;
}

}  // namespace dualmod
