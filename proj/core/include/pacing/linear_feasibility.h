// Copyright 2026 The Pacing Authors
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

#ifndef PACING_LINEAR_FEASIBILITY_H_
#define PACING_LINEAR_FEASIBILITY_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pacing/rational.h"

namespace pacing {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<std::pair<std::size_t, Rational>> terms;  // (variable, coeff)
  Relation relation = Relation::kEqual;
  Rational rhs;
};

// A system of linear constraints over nonnegative variables x >= 0.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_variables)
      : num_variables_(num_variables) {}

  std::size_t num_variables() const { return num_variables_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }

  // Throws std::out_of_range for an unknown variable.
  void Add(LinearConstraint constraint);

  // True iff `point` has the right size, is nonnegative and meets every
  // constraint exactly.
  bool IsSatisfiedBy(const std::vector<Rational>& point) const;

 private:
  std::size_t num_variables_;
  std::vector<LinearConstraint> constraints_;
};

// Exact phase-one simplex (dense tableau, Bland's rule, so it terminates on
// degenerate systems). Returns a basic feasible point, or nullopt when the
// system is infeasible. The point is a deterministic function of the
// constraint order.
std::optional<std::vector<Rational>> FindFeasiblePoint(
    const LinearSystem& system);

}  // namespace pacing

#endif  // PACING_LINEAR_FEASIBILITY_H_
