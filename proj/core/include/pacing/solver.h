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

#ifndef PACING_SOLVER_H_
#define PACING_SOLVER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacing/circuit.h"
#include "pacing/game.h"
#include "pacing/rational.h"
#include "pacing/reduction.h"

namespace pacing {

struct Equilibrium {
  MultiplierProfile alpha;
  Allocation x;

  friend bool operator==(const Equilibrium&, const Equilibrium&) = default;
};

class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct SearchConfig {
  // Candidate multipliers for every buyer that is not pinned.
  std::vector<Rational> grid;
  // When set, every free buyer ranges over q / D for q = 0..D instead.
  std::optional<std::size_t> generic_denominator;
  // Buyers held at alpha = 1.
  std::vector<BuyerIndex> pinned;
  // Artifact overload only: pin every auxiliary buyer c_v.
  bool pin_aux = true;
  // Maximum number of grid profiles; larger grids throw LimitExceeded.
  std::size_t limit = std::size_t{1} << 22;
};

// {kappa, 1}; with `refine` also 1/2 + delta/2 and (kappa + 1)/2.
std::vector<Rational> MainGrid(const ReductionParams& params,
                               bool refine = false);
// {1/10, 1/9, 19/20, 1}. 1/9 is where b_v ties c_v on every weak gadget
// good; at 1/10 b_v is never within 19/20 of c_v's bid.
std::vector<Rational> WeakGrid();

// Exhaustive search over the product grid, returning every profile for which
// AllocationFeasible succeeds together with its witness allocation, in
// lexicographic grid order (buyer 0 most significant). Partial profiles are
// pruned with a per-buyer budget bound that is necessary for feasibility, so
// the output equals that of plain enumeration. Every emitted pair is
// re-verified. An empty result means none on this grid, not that no
// equilibrium exists.
std::vector<Equilibrium> GridSearch(const PacingGame& game,
                                    const ApproxParams& params,
                                    const SearchConfig& config);

// As above, additionally pinning the auxiliary buyers when config.pin_aux.
std::vector<Equilibrium> GridSearch(const ReductionArtifact& artifact,
                                    const ApproxParams& params,
                                    const SearchConfig& config);

// Builds alpha_{b_v} = kappa for Zero and 1 for One, alpha_c = 1, and asks
// for an exact-equilibrium allocation. Main artifacts only; throws
// std::invalid_argument for Bot entries or a size mismatch.
std::optional<Equilibrium> CandidateFromAssignment(
    const ReductionArtifact& artifact, const Assignment& assignment);

struct LemmaFailure {
  std::string lemma;
  std::size_t equilibrium = 0;
  std::string detail;
};

struct LemmaReport {
  std::size_t checks = 0;
  std::vector<LemmaFailure> failures;

  bool passed() const { return failures.empty(); }
  bool Has(std::string_view lemma) const;
  std::string ToString() const;
};

// Instantiates the reduction's correctness lemmas on each equilibrium:
// "equilibrium" (it verifies under TargetParams), "general-range",
// "winning-goods" (b_v buys all of g_(u,v) at price alpha_{b_u}), and the
// per-gate implications "not-gate", "nor-gate", "npurify-gate".
LemmaReport LemmaSuite(const ReductionArtifact& artifact,
                       std::span<const Equilibrium> equilibria);

}  // namespace pacing

#endif  // PACING_SOLVER_H_
