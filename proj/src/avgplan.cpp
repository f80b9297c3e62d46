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

#include "pnp/avgplan.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace pnp {

Stencil Stencil::merged(std::vector<StencilTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const StencilTerm& a, const StencilTerm& b) { return a.index < b.index; });
  Stencil out;
  for (const StencilTerm& t : terms) {
    if (!out.terms.empty() && out.terms.back().index == t.index) {
      out.terms.back().weight += t.weight;
    } else {
      out.terms.push_back(t);
    }
  }
  // Cancelled taps (e.g. coinciding butterfly wings) leave rounding dust.
  std::erase_if(out.terms, [](const StencilTerm& t) { return std::abs(t.weight) < 1e-15; });
  return out;
}

double Stencil::weight_sum() const {
  double sum = 0;
  for (const StencilTerm& t : terms) sum += t.weight;
  return sum;
}

void Stencil::validate() const {
  if (terms.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty stencil");
  }
  std::unordered_set<std::int32_t> seen;
  for (const StencilTerm& t : terms) {
    if (t.weight == 0.0) {
      throw Error(ErrorKind::ZeroWeight,
                  "zero weight on element " + std::to_string(t.index));
    }
    if (t.index < 0) {
      throw Error(ErrorKind::IndexOutOfRange, "negative element index");
    }
    if (!seen.insert(t.index).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate element " + std::to_string(t.index) + " in stencil");
    }
  }
  const double sum = weight_sum();
  if (!(std::abs(sum - 1.0) <= kAffineTolerance)) {
    throw Error(ErrorKind::WeightsNotAffine,
                "stencil weights sum to " + std::to_string(sum));
  }
}

AvgPlan compile(const Stencil& stencil) {
  stencil.validate();
  std::vector<StencilTerm> sorted = stencil.terms;
  std::sort(sorted.begin(), sorted.end(), [](const StencilTerm& a, const StencilTerm& b) {
    const bool pa = a.weight > 0, pb = b.weight > 0;
    if (pa != pb) return pa;
    const double ma = std::abs(a.weight), mb = std::abs(b.weight);
    if (ma != mb) return ma > mb;
    return a.index < b.index;
  });
  std::vector<std::int32_t> order;
  order.reserve(sorted.size());
  for (const StencilTerm& t : sorted) order.push_back(t.index);
  return compile_in_order(stencil, order);
}

AvgPlan compile_in_order(const Stencil& stencil, std::span<const std::int32_t> order) {
  stencil.validate();
  if (order.size() != stencil.terms.size()) {
    throw Error(ErrorKind::InvalidArgument, "order does not match stencil size");
  }
  const auto weight_of = [&](std::int32_t index) {
    for (const StencilTerm& t : stencil.terms) {
      if (t.index == index) return t.weight;
    }
    throw Error(ErrorKind::InvalidArgument,
                "order names element " + std::to_string(index) + " outside the stencil");
  };

  std::vector<std::int32_t> seen(order.begin(), order.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorKind::InvalidArgument, "order lists an element twice");
  }

  AvgPlan plan;
  plan.first = order[0];
  plan.steps.reserve(order.size() - 1);
  double partial = weight_of(order[0]);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const double alpha = weight_of(order[i]);
    const double next = partial + alpha;
    if (!(partial > 0) || !(next > 0)) {
      throw Error(ErrorKind::InvalidArgument,
                  "non-positive partial weight sum; negative weights must follow positive ones");
    }
    plan.steps.push_back({order[i], alpha / next});
    partial = next;
  }
  return plan;
}

Vec3 weighted_sum(const Stencil& stencil, std::span<const Vec3> points) {
  Vec3 sum;
  for (const StencilTerm& t : stencil.terms) {
    if (t.index < 0 || static_cast<std::size_t>(t.index) >= points.size()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "stencil references element " + std::to_string(t.index));
    }
    sum += t.weight * points[static_cast<std::size_t>(t.index)];
  }
  return sum;
}

}  // namespace pnp
