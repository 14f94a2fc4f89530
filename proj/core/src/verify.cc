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

#include "pacing/verify.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pacing {

std::string ConditionTag(Condition condition) {
  switch (condition) {
    case Condition::kWinnerBid:
      return "a";
    case Condition::kFullAllocation:
      return "b";
    case Condition::kBudget:
      return "c";
    case Condition::kUnnecessaryPacing:
      return "d";
    case Condition::kRange:
      return "range";
    case Condition::kMass:
      return "mass";
  }
  return "?";
}

bool VerificationReport::Has(Condition condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

std::string VerificationReport::ToString() const {
  std::ostringstream out;
  out << NotionName(notion) << ": " << (valid() ? "valid" : "invalid");
  for (const Violation& v : violations) {
    out << "\n  (" << ConditionTag(v.condition) << ")";
    if (v.buyer) out << " buyer " << *v.buyer;
    if (v.good) out << " good " << *v.good;
    out << ": " << v.detail;
    if (!v.witnesses.empty()) {
      out << " [";
      for (std::size_t k = 0; k < v.witnesses.size(); ++k) {
        out << (k ? ", " : "") << FormatRational(v.witnesses[k]);
      }
      out << "]";
    }
  }
  return out.str();
}

VerificationReport Verify(const PacingGame& game,
                          const MultiplierProfile& alpha, const Allocation& x,
                          const ApproxParams& params) {
  const std::size_t n = game.num_buyers();
  const std::size_t m = game.num_goods();
  if (alpha.size() != n) {
    throw std::invalid_argument("multiplier profile size does not match game");
  }
  for (const auto& [key, fraction] : x.entries()) {
    if (key.first >= n || key.second >= m) {
      throw std::invalid_argument("allocation entry (" +
                                  std::to_string(key.first) + ", " +
                                  std::to_string(key.second) +
                                  ") outside the game");
    }
  }

  VerificationReport report;
  report.notion = params.notion();
  auto add = [&](Condition c, std::optional<BuyerIndex> i,
                 std::optional<GoodIndex> j, std::vector<Rational> witnesses,
                 std::string detail) {
    report.violations.push_back(
        {c, i, j, std::move(witnesses), std::move(detail)});
  };

  for (BuyerIndex i = 0; i < n; ++i) {
    if (alpha[i] < 0 || alpha[i] > 1) {
      add(Condition::kRange, i, std::nullopt, {alpha[i]},
          "multiplier outside [0, 1]");
    }
  }
  for (const auto& [key, fraction] : x.entries()) {
    if (fraction < 0 || fraction > 1) {
      add(Condition::kRange, key.first, key.second, {fraction},
          "allocation outside [0, 1]");
    }
  }

  std::vector<Rational> highest(m);
  std::vector<Rational> price(m);
  std::vector<Rational> mass(m);
  for (GoodIndex j = 0; j < m; ++j) {
    highest[j] = HighestBid(game, alpha, j);
    price[j] = SecondPrice(game, alpha, j);
  }
  std::vector<Rational> spend(n);
  for (const auto& [key, fraction] : x.entries()) {
    const auto [i, j] = key;
    mass[j] += fraction;
    spend[i] += fraction * price[j];
    if (fraction > 0) {
      const Rational bid = alpha[i] * game.value(i, j);
      const Rational threshold = (1 - params.sigma()) * highest[j];
      if (bid < threshold) {
        add(Condition::kWinnerBid, i, j, {bid, threshold},
            "allocated below the winning threshold (bid, threshold)");
      }
    }
  }

  for (GoodIndex j = 0; j < m; ++j) {
    if (mass[j] > 1) {
      add(Condition::kMass, std::nullopt, j, {mass[j]},
          "allocated mass exceeds one");
    }
    if (highest[j] > 0 && mass[j] != 1) {
      add(Condition::kFullAllocation, std::nullopt, j, {highest[j], mass[j]},
          "positively bid good not fully allocated (highest bid, mass)");
    }
  }

  for (BuyerIndex i = 0; i < n; ++i) {
    const Rational& budget = game.budget(i);
    if (spend[i] > budget) {
      add(Condition::kBudget, i, std::nullopt, {spend[i], budget},
          "spend exceeds budget (spend, budget)");
    }
    const Rational trigger = (1 - params.gamma()) * budget;
    const Rational floor = 1 - params.tau();
    if (spend[i] < trigger && alpha[i] < floor) {
      add(Condition::kUnnecessaryPacing, i, std::nullopt,
          {spend[i], trigger, alpha[i]},
          "under-spending buyer is paced (spend, trigger, alpha)");
    }
  }
  return report;
}

}  // namespace pacing
