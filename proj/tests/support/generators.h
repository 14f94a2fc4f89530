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

// Random games, profiles and allocations with small denominators.

#ifndef PACING_TESTS_SUPPORT_GENERATORS_H_
#define PACING_TESTS_SUPPORT_GENERATORS_H_

#include <cstddef>
#include <random>

#include "pacing/game.h"

namespace pacing::testing {

// p / q with 1 <= q <= max_den and lo <= p / q <= hi.
Rational RandomRational(std::mt19937_64& rng, const Rational& lo,
                        const Rational& hi, long max_den);

// 1..max_buyers buyers, 1..max_goods goods, positive values in (0, 3] and
// budgets in (0, 4], each with denominator <= max_den. Meets the
// PacingGame preconditions.
PacingGame RandomGame(std::mt19937_64& rng, std::size_t max_buyers,
                      std::size_t max_goods, long max_den);

MultiplierProfile RandomProfile(std::mt19937_64& rng, std::size_t n,
                                long max_den);

// Entries on the positive-value pairs with per-good mass <= 1.
Allocation RandomAllocation(std::mt19937_64& rng, const PacingGame& game,
                            long max_den);

}  // namespace pacing::testing

#endif  // PACING_TESTS_SUPPORT_GENERATORS_H_
