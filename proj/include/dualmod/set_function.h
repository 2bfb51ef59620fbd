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

#ifndef DUALMOD_SET_FUNCTION_H_
#define DUALMOD_SET_FUNCTION_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualmod/rational.h"

namespace dualmod {

// Subsets of the ground set are bit masks; bit i is element i.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 63;

inline Mask FullMask(int n) { return (Mask{1} << n) - 1; }
inline Mask Bit(int u) { return Mask{1} << u; }
int PopCount(Mask m);
std::vector<int> Elements(Mask m);

class GroundSet {
 public:
  // Labels must be distinct and nonempty; 1 <= size <= kMaxGroundSize.
  explicit GroundSet(std::vector<std::string> labels);
  // Labels "0".."n-1".
  static GroundSet Indexed(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> IndexOf(std::string_view label) const;
  Mask Full() const { return FullMask(size()); }
  bool IsValid(Mask s) const { return (s & ~Full()) == 0; }
  std::vector<std::string> LabelsOf(Mask s) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

enum class SetFunctionKind {
  kExplicitTable,
  kEdgesInside,
  kLinear,
  kConcaveOfCardinality,
  kScaled,
  kPerturbed,
  kComplementOf,
  kSum,
  kResidual,
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Rational weight = 1;
};

// Immutable set function h : 2^V -> Q>=0 with h(empty) = 0. Composite kinds
// (Scaled, Perturbed, ComplementOf, Sum, Residual) share their operands, so
// copies are cheap and safe to use from several threads.
class SetFunction {
 public:
  // `values` has 2^n entries indexed by mask, values[0] == 0, all >= 0.
  static SetFunction ExplicitTable(int n, std::vector<Rational> values);
  // Sum of weights of edges with both endpoints in S. Loops {u,u} are allowed
  // and behave like a linear term on u.
  static SetFunction EdgesInside(int n, std::vector<WeightedEdge> edges);
  static SetFunction Linear(std::vector<Rational> weights);
  // S -> phi(|S|); phi has n+1 entries, phi(0) = 0, non-increasing increments.
  static SetFunction ConcaveOfCardinality(std::vector<Rational> phi);
  static SetFunction Scaled(SetFunction base, Rational factor);
  // S -> base(S) + eta * |S|.
  static SetFunction Perturbed(SetFunction base, Rational eta);
  // S -> base(V) - base(V \ S).
  static SetFunction ComplementOf(SetFunction base);
  static SetFunction Sum(std::vector<SetFunction> terms);
  // Marginal function A -> base(A' | condition) on the elements listed in
  // `elements` (parent indices, disjoint from condition); bit i of A maps to
  // parent element elements[i].
  static SetFunction Residual(SetFunction base, Mask condition,
                              std::vector<int> elements);

  SetFunctionKind kind() const;
  int ground_size() const;

  Rational Evaluate(Mask s) const;
  // h(S | A) = h(S u A) - h(A).
  Rational Marginal(Mask s, Mask a) const;

  // Payload access, meaningful only for the matching kind.
  const std::vector<Rational>& table() const;
  const std::vector<WeightedEdge>& edges() const;
  const std::vector<Rational>& weights() const;
  const std::vector<Rational>& phi() const;
  const Rational& factor() const;  // Scaled factor or Perturbed eta.
  const std::vector<SetFunction>& operands() const;
  Mask condition() const;
  const std::vector<int>& residual_elements() const;

 private:
  friend std::vector<Rational> Tabulate(const SetFunction& h, int max_n);
  struct Node;
  explicit SetFunction(std::shared_ptr<const Node> node);
  Rational EvaluateUnchecked(Mask s) const;

  std::shared_ptr<const Node> node_;
};

// All 2^n values, indexed by mask. Throws kGroundSetTooLarge if n > max_n.
std::vector<Rational> Tabulate(const SetFunction& h, int max_n);

}  // namespace dualmod

#endif  // DUALMOD_SET_FUNCTION_H_
