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

#ifndef PACING_ALLOCATION_H_
#define PACING_ALLOCATION_H_

#include <optional>

#include "pacing/game.h"

namespace pacing {

// For a fixed multiplier profile, finds an allocation x that makes
// (alpha, x) an equilibrium under `params`, or returns nullopt when none
// exists.
//
// With alpha fixed every condition is linear in x: eligible pairs carry the
// whole unit of each positively bid good, ineligible pairs and goods nobody
// bids on get nothing, every spend stays within budget, and buyers paced
// below 1 - tau must spend at least (1 - gamma) of their budget. Goods with a
// single eligible buyer are assigned directly; buyers coupled through tied
// goods are solved together with the exact simplex, one independent block at
// a time. The result is canonical for a given game and profile.
std::optional<Allocation> AllocationFeasible(const PacingGame& game,
                                             const MultiplierProfile& alpha,
                                             const ApproxParams& params);

}  // namespace pacing

#endif  // PACING_ALLOCATION_H_
