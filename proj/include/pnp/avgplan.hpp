// Copyright 2026 The pnpsubdiv Authors.
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

#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pnp/error.hpp"
#include "pnp/geom.hpp"

namespace pnp {

struct StencilTerm {
  std::int32_t index = 0;
  double weight = 0;

  friend bool operator==(const StencilTerm&, const StencilTerm&) = default;
};

/// Affine combination of indexed elements. Weights must be nonzero, indices
/// distinct, and the weights must sum to one.
struct Stencil {
  static constexpr double kAffineTolerance = 1e-12;

  std::vector<StencilTerm> terms;

  /// Single term with weight one.
  static Stencil identity(std::int32_t index) { return {{{index, 1.0}}}; }

  /// Merges duplicate indices, drops zero weights and sorts by index.
  /// Scheme stencils are assembled by accumulation and normalized here.
  static Stencil merged(std::vector<StencilTerm> terms);

  /// Throws WeightsNotAffine, ZeroWeight or InvalidArgument.
  void validate() const;

  double weight_sum() const;
};

struct AvgStep {
  std::int32_t index = 0;  // right operand; the left is the running result
  double w = 0;            // binary weight on the right operand

  friend bool operator==(const AvgStep&, const AvgStep&) = default;
};

/// A k-term stencil as a chain of k - 1 weighted binary averages: start from
/// `first`, then fold each step as acc = avg(acc, elements[step.index], w).
struct AvgPlan {
  std::int32_t first = 0;
  std::vector<AvgStep> steps;

  friend bool operator==(const AvgPlan&, const AvgPlan&) = default;
};

/// Reorders positive weights first (descending magnitude, ties by index),
/// then negatives the same way, and peels off one binary average per term.
/// Every partial weight sum is strictly positive in the result.
AvgPlan compile(const Stencil& stencil);

/// Same recursion over a caller-chosen order. The order must list each
/// stencil term once; partial sums are checked to be positive.
AvgPlan compile_in_order(const Stencil& stencil, std::span<const std::int32_t> order);

template <typename Op, typename T>
concept BinaryAverage = requires(Op op, const T& a, const T& b, double w) {
  { op(a, b, w) } -> std::convertible_to<T>;
};

template <typename T, BinaryAverage<T> Op>
T evaluate(const AvgPlan& plan, std::span<const T> elements, Op&& binop) {
  const auto check = [&](std::int32_t i) {
    if (i < 0 || static_cast<std::size_t>(i) >= elements.size()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "plan references element " + std::to_string(i) + " of " +
                      std::to_string(elements.size()));
    }
  };
  check(plan.first);
  T acc = elements[static_cast<std::size_t>(plan.first)];
  for (const AvgStep& step : plan.steps) {
    check(step.index);
    acc = binop(acc, elements[static_cast<std::size_t>(step.index)], step.w);
  }
  return acc;
}

/// The affine binary average (1 - w) a + w b on points.
struct AffineAverage {
  Vec3 operator()(const Vec3& a, const Vec3& b, double w) const {
    return (1.0 - w) * a + w * b;
  }
};

/// Direct weighted sum of a stencil over points.
Vec3 weighted_sum(const Stencil& stencil, std::span<const Vec3> points);

}  // namespace pnp
