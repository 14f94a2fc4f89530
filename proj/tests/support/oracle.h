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

// Independent oracles for tiny games: a direct transcription of the
// equilibrium conditions in int64 fractions and a dense search over
// allocations whose entries lie on a 1/D grid.

#ifndef PACING_TESTS_SUPPORT_ORACLE_H_
#define PACING_TESTS_SUPPORT_ORACLE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "frac.h"
#include "pacing/game.h"

namespace pacing::testing {

struct TinyGame {
  std::vector<std::vector<Frac>> v;  // v[i][j]
  std::vector<Frac> budget;

  std::size_t n() const { return budget.size(); }
  std::size_t m() const { return v.empty() ? 0 : v[0].size(); }
};

struct TinyParams {
  Frac sigma = 0;
  Frac gamma = 0;
  Frac tau = 0;
};

using TinyAllocation = std::vector<std::vector<Frac>>;  // x[i][j]

Frac ToFrac(const Rational& value);
TinyGame ToTiny(const PacingGame& game);
std::vector<Frac> ToTiny(const MultiplierProfile& alpha);
TinyParams ToTiny(const ApproxParams& params);
TinyAllocation ToTiny(const PacingGame& game, const Allocation& x);

bool OracleValid(const TinyGame& game, const std::vector<Frac>& alpha,
                 const TinyAllocation& x, const TinyParams& params);

// Searches every x with x_ij in {0, 1/D, ..., 1} and per-good mass <= 1.
// Per-good conditions are filtered column by column, then the budget
// conditions are checked on the product. Returns the first valid x.
std::optional<TinyAllocation> DenseAllocationSearch(
    const TinyGame& game, const std::vector<Frac>& alpha,
    const TinyParams& params, std::size_t denominator);

}  // namespace pacing::testing

#endif  // PACING_TESTS_SUPPORT_ORACLE_H_
