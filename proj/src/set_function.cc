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

#include "dualmod/set_function.h"

#include <bit>
#include <set>
#include <utility>

#include "dualmod/error.h"

namespace dualmod {

int PopCount(Mask m) { return std::popcount(m); }

std::vector<int> Elements(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty() || static_cast<int>(labels_.size()) > kMaxGroundSize) {
    throw Error(ErrorCode::kSchema, "ground set size must be in [1, " +
                                        std::to_string(kMaxGroundSize) + "]");
  }
  std::set<std::string> seen;
  for (const std::string& l : labels_) {
    if (l.empty()) throw Error(ErrorCode::kSchema, "empty element label");
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::kSchema, "duplicate element label '" + l + "'");
    }
  }
}

GroundSet GroundSet::Indexed(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::IndexOf(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::string> GroundSet::LabelsOf(Mask s) const {
  std::vector<std::string> out;
  for (int u : Elements(s)) out.push_back(labels_[u]);
  return out;
}

struct SetFunction::Node {
  SetFunctionKind kind;
  int n = 0;
  std::vector<Rational> values;  // table / weights / phi
  std::vector<WeightedEdge> edges;
  Rational factor = 0;
  std::vector<SetFunction> operands;
  Mask condition = 0;
  std::vector<int> elements;
  Rational condition_value = 0;  // base(condition) for Residual
  Rational base_total = 0;       // base(V) for ComplementOf
};

SetFunction::SetFunction(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

namespace {

void CheckSize(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kSchema, "set function ground size " +
                                        std::to_string(n) + " outside [1, " +
                                        std::to_string(kMaxGroundSize) + "]");
  }
}

void CheckNonNegative(const Rational& q, const char* what) {
  if (sgn(q) < 0) {
    throw Error(
        ErrorCode::kSchema,
        std::string(what) + " must be non-negative, got " + ToString(q));
  }
}

}  // namespace

SetFunction SetFunction::ExplicitTable(int n, std::vector<Rational> values) {
  CheckSize(n);
  if (n > 30) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "explicit tables are limited to 30 elements");
  }
  if (values.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kSchema, "explicit table needs exactly 2^n = " +
                                        std::to_string(std::size_t{1} << n) +
                                        " entries, got " +
                                        std::to_string(values.size()));
  }
  if (values[0] != 0) {
    throw Error(ErrorCode::kSchema,
                "explicit table must be 0 on the empty set");
  }
  for (const Rational& v : values) CheckNonNegative(v, "table value");
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kExplicitTable;
  node->n = n;
  node->values = std::move(values);
  return SetFunction(std::move(node));
}

SetFunction SetFunction::EdgesInside(int n, std::vector<WeightedEdge> edges) {
  CheckSize(n);
  for (const WeightedEdge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kSchema, "edge endpoint out of range");
    }
    CheckNonNegative(e.weight, "edge weight");
  }
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kEdgesInside;
  node->n = n;
  node->edges = std::move(edges);
  return SetFunction(std::move(node));
}

SetFunction SetFunction::Linear(std::vector<Rational> weights) {
  CheckSize(static_cast<int>(weights.size()));
  for (const Rational& w : weights) CheckNonNegative(w, "linear weight");
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kLinear;
  node->n = static_cast<int>(weights.size());
  node->values = std::move(weights);
  return SetFunction(std::move(node));
}

SetFunction SetFunction::ConcaveOfCardinality(std::vector<Rational> phi) {
  CheckSize(static_cast<int>(phi.size()) - 1);
  if (phi[0] != 0) {
    throw Error(ErrorCode::kSchema,
                "concave sequence must start at phi(0) = 0");
  }
  for (std::size_t i = 0; i < phi.size(); ++i) {
    CheckNonNegative(phi[i], "concave sequence value");
    if (i + 2 < phi.size() && phi[i + 2] - phi[i + 1] > phi[i + 1] - phi[i]) {
      throw Error(ErrorCode::kSchema,
                  "concave sequence increments must be non-increasing (at i=" +
                      std::to_string(i) + ")");
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kConcaveOfCardinality;
  node->n = static_cast<int>(phi.size()) - 1;
  node->values = std::move(phi);
  return SetFunction(std::move(node));
}

SetFunction SetFunction::Scaled(SetFunction base, Rational factor) {
  CheckNonNegative(factor, "scale factor");
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kScaled;
  node->n = base.ground_size();
  node->factor = std::move(factor);
  node->operands.push_back(std::move(base));
  return SetFunction(std::move(node));
}

SetFunction SetFunction::Perturbed(SetFunction base, Rational eta) {
  if (sgn(eta) < 0) {
    throw Error(ErrorCode::kNegativeEta,
                "perturbation eta must be >= 0, got " + ToString(eta));
  }
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kPerturbed;
  node->n = base.ground_size();
  node->factor = std::move(eta);
  node->operands.push_back(std::move(base));
  return SetFunction(std::move(node));
}

SetFunction SetFunction::ComplementOf(SetFunction base) {
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kComplementOf;
  node->n = base.ground_size();
  node->base_total = base.Evaluate(FullMask(node->n));
  node->operands.push_back(std::move(base));
  return SetFunction(std::move(node));
}

SetFunction SetFunction::Sum(std::vector<SetFunction> terms) {
  if (terms.empty()) throw Error(ErrorCode::kSchema, "sum needs >= 1 term");
  const int n = terms.front().ground_size();
  for (const SetFunction& t : terms) {
    if (t.ground_size() != n) {
      throw Error(ErrorCode::kSchema, "sum terms have different ground sizes");
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kSum;
  node->n = n;
  node->operands = std::move(terms);
  return SetFunction(std::move(node));
}

SetFunction SetFunction::Residual(SetFunction base, Mask condition,
                                  std::vector<int> elements) {
  const int parent_n = base.ground_size();
  CheckSize(static_cast<int>(elements.size()));
  if ((condition & ~FullMask(parent_n)) != 0) {
    throw Error(ErrorCode::kSchema, "residual condition outside ground set");
  }
  Mask seen = 0;
  for (int e : elements) {
    if (e < 0 || e >= parent_n || (seen & Bit(e)) || (condition & Bit(e))) {
      throw Error(ErrorCode::kSchema, "invalid residual element list");
    }
    seen |= Bit(e);
  }
  auto node = std::make_shared<Node>();
  node->kind = SetFunctionKind::kResidual;
  node->n = static_cast<int>(elements.size());
  node->condition = condition;
  node->elements = std::move(elements);
  node->condition_value = base.Evaluate(condition);
  node->operands.push_back(std::move(base));
  return SetFunction(std::move(node));
}

SetFunctionKind SetFunction::kind() const { return node_->kind; }
int SetFunction::ground_size() const { return node_->n; }

Rational SetFunction::Evaluate(Mask s) const {
  if ((s & ~FullMask(node_->n)) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset mask has bits outside the ground set");
  }
  return EvaluateUnchecked(s);
}

Rational SetFunction::Marginal(Mask s, Mask a) const {
  return Evaluate(s | a) - Evaluate(a);
}

Rational SetFunction::EvaluateUnchecked(Mask s) const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case SetFunctionKind::kExplicitTable:
      return nd.values[s];
    case SetFunctionKind::kEdgesInside: {
      Rational total = 0;
      for (const WeightedEdge& e : nd.edges) {
        if ((s & Bit(e.u)) && (s & Bit(e.v))) total += e.weight;
      }
      return total;
    }
    case SetFunctionKind::kLinear: {
      Rational total = 0;
      for (int u : Elements(s)) total += nd.values[u];
      return total;
    }
    case SetFunctionKind::kConcaveOfCardinality:
      return nd.values[PopCount(s)];
    case SetFunctionKind::kScaled:
      return nd.factor * nd.operands[0].EvaluateUnchecked(s);
    case SetFunctionKind::kPerturbed:
      return nd.operands[0].EvaluateUnchecked(s) + nd.factor * PopCount(s);
    case SetFunctionKind::kComplementOf:
      return nd.base_total -
             nd.operands[0].EvaluateUnchecked(FullMask(nd.n) & ~s);
    case SetFunctionKind::kSum: {
      Rational total = 0;
      for (const SetFunction& t : nd.operands) total += t.EvaluateUnchecked(s);
      return total;
    }
    case SetFunctionKind::kResidual: {
      Mask parent = nd.condition;
      for (int i : Elements(s)) parent |= Bit(nd.elements[i]);
      return nd.operands[0].EvaluateUnchecked(parent) - nd.condition_value;
    }
  }
  throw Error(ErrorCode::kSchema, "unknown set function kind");
}

const std::vector<Rational>& SetFunction::table() const {
  return node_->values;
}
const std::vector<WeightedEdge>& SetFunction::edges() const {
  return node_->edges;
}
const std::vector<Rational>& SetFunction::weights() const {
  return node_->values;
}
const std::vector<Rational>& SetFunction::phi() const { return node_->values; }
const Rational& SetFunction::factor() const { return node_->factor; }
const std::vector<SetFunction>& SetFunction::operands() const {
  return node_->operands;
}
Mask SetFunction::condition() const { return node_->condition; }
const std::vector<int>& SetFunction::residual_elements() const {
  return node_->elements;
}

std::vector<Rational> Tabulate(const SetFunction& h, int max_n) {
  const int n = h.ground_size();
  if (n > max_n) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "ground set of size " + std::to_string(n) +
                    " exceeds brute-force limit " + std::to_string(max_n));
  }
  if (h.kind() == SetFunctionKind::kExplicitTable) return h.table();
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<Rational> out(count);
#pragma omp parallel for schedule(static) if (count > 4096)
  for (std::int64_t s = 0; s < count; ++s) {
    out[s] = h.EvaluateUnchecked(static_cast<Mask>(s));
  }
  return out;
}

}  // namespace dualmod
