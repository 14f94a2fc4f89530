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

#ifndef PACING_VERIFY_H_
#define PACING_VERIFY_H_

#include <optional>
#include <string>
#include <vector>

#include "pacing/game.h"
#include "pacing/rational.h"

namespace pacing {

enum class Condition {
  kWinnerBid,          // (a) x_ij > 0 only for (near-)highest bidders
  kFullAllocation,     // (b) goods with a positive bid are fully sold
  kBudget,             // (c) spend <= budget
  kUnnecessaryPacing,  // (d) under-spenders are (almost) unpaced
  kRange,              // alpha_i or x_ij outside [0, 1]
  kMass,               // sum_i x_ij > 1
};

// Short tag used in reports: "a", "b", "c", "d", "range", "mass".
std::string ConditionTag(Condition condition);

struct Violation {
  Condition condition;
  std::optional<BuyerIndex> buyer;
  std::optional<GoodIndex> good;
  // Quantities that exhibit the violation, in the order named by `detail`.
  std::vector<Rational> witnesses;
  std::string detail;
};

struct VerificationReport {
  EquilibriumNotion notion = EquilibriumNotion::kExact;
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool Has(Condition condition) const;
  std::string ToString() const;
};

// Checks (alpha, x) against the equilibrium notion selected by `params`,
// collecting every violated condition rather than stopping at the first.
// Throws std::invalid_argument on dimension mismatch.
VerificationReport Verify(const PacingGame& game,
                          const MultiplierProfile& alpha, const Allocation& x,
                          const ApproxParams& params);

}  // namespace pacing

#endif  // PACING_VERIFY_H_
