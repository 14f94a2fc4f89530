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

#include "pacing/game.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pacing {
namespace {

void CheckTolerance(const Rational& value, const char* name) {
  if (value < 0 || value >= 1) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1), got " +
                                FormatRational(value));
  }
}

void CheckGood(const PacingGame& game, GoodIndex good) {
  if (good >= game.num_goods()) {
    throw std::out_of_range("good index " + std::to_string(good) +
                            " out of range (m = " +
                            std::to_string(game.num_goods()) + ")");
  }
}

void CheckProfile(const PacingGame& game, const MultiplierProfile& alpha) {
  if (alpha.size() != game.num_buyers()) {
    throw std::invalid_argument(
        "multiplier profile has " + std::to_string(alpha.size()) +
        " entries, game has " + std::to_string(game.num_buyers()) + " buyers");
  }
}

}  // namespace

PacingGame::PacingGame(std::size_t num_buyers, std::size_t num_goods,
                       std::vector<Rational> budgets,
                       std::vector<ValueEntry> values,
                       std::vector<std::string> buyer_labels,
                       std::vector<std::string> good_labels)
    : budgets_(std::move(budgets)),
      bidders_(num_goods),
      interests_(num_buyers),
      buyer_labels_(std::move(buyer_labels)),
      good_labels_(std::move(good_labels)) {
  if (num_buyers == 0 || num_goods == 0) {
    throw std::invalid_argument("a game needs at least one buyer and one good");
  }
  if (budgets_.size() != num_buyers) {
    throw std::invalid_argument("expected " + std::to_string(num_buyers) +
                                " budgets, got " +
                                std::to_string(budgets_.size()));
  }
  for (std::size_t i = 0; i < budgets_.size(); ++i) {
    if (budgets_[i] <= 0) {
      throw std::invalid_argument("budget of buyer " + std::to_string(i) +
                                  " must be positive");
    }
  }
  if (buyer_labels_.empty() != good_labels_.empty() ||
      (!buyer_labels_.empty() && (buyer_labels_.size() != num_buyers ||
                                  good_labels_.size() != num_goods))) {
    throw std::invalid_argument("labels must cover every buyer and every good");
  }

  std::sort(values.begin(), values.end(),
            [](const ValueEntry& a, const ValueEntry& b) {
              return std::pair(a.buyer, a.good) < std::pair(b.buyer, b.good);
            });
  for (std::size_t k = 0; k < values.size(); ++k) {
    const ValueEntry& e = values[k];
    if (e.buyer >= num_buyers || e.good >= num_goods) {
      throw std::invalid_argument("value entry (" + std::to_string(e.buyer) +
                                  ", " + std::to_string(e.good) +
                                  ") out of range");
    }
    if (k > 0 && values[k - 1].buyer == e.buyer &&
        values[k - 1].good == e.good) {
      throw std::invalid_argument("duplicate value entry (" +
                                  std::to_string(e.buyer) + ", " +
                                  std::to_string(e.good) + ")");
    }
    if (e.value < 0) {
      throw std::invalid_argument("negative value for (" +
                                  std::to_string(e.buyer) + ", " +
                                  std::to_string(e.good) + ")");
    }
    if (e.value == 0) continue;
    interests_[e.buyer].push_back({e.good, e.value});
    bidders_[e.good].push_back({e.buyer, e.value});
  }
  for (std::size_t i = 0; i < num_buyers; ++i) {
    if (interests_[i].empty()) {
      throw std::invalid_argument("buyer " + std::to_string(i) +
                                  " has no positively valued good");
    }
  }
  for (std::size_t j = 0; j < num_goods; ++j) {
    if (bidders_[j].empty()) {
      throw std::invalid_argument("good " + std::to_string(j) +
                                  " has no buyer with positive value");
    }
  }
}

const Rational& PacingGame::budget(BuyerIndex buyer) const {
  return budgets_.at(buyer);
}

Rational PacingGame::value(BuyerIndex buyer, GoodIndex good) const {
  for (const Interest& interest : interests_.at(buyer)) {
    if (interest.good == good) return interest.value;
  }
  return 0;
}

std::span<const Bidder> PacingGame::bidders(GoodIndex good) const {
  return bidders_.at(good);
}

std::span<const Interest> PacingGame::interests(BuyerIndex buyer) const {
  return interests_.at(buyer);
}

std::vector<ValueEntry> PacingGame::entries() const {
  std::vector<ValueEntry> out;
  for (std::size_t i = 0; i < interests_.size(); ++i) {
    for (const Interest& interest : interests_[i]) {
      out.push_back({i, interest.good, interest.value});
    }
  }
  return out;
}

std::string PacingGame::buyer_label(BuyerIndex buyer) const {
  if (buyer >= num_buyers()) throw std::out_of_range("buyer index");
  return has_labels() ? buyer_labels_[buyer] : "buyer_" + std::to_string(buyer);
}

std::string PacingGame::good_label(GoodIndex good) const {
  if (good >= num_goods()) throw std::out_of_range("good index");
  return has_labels() ? good_labels_[good] : "good_" + std::to_string(good);
}

bool operator==(const PacingGame& a, const PacingGame& b) {
  return a.budgets_ == b.budgets_ && a.entries() == b.entries() &&
         a.num_goods() == b.num_goods() && a.buyer_labels_ == b.buyer_labels_ &&
         a.good_labels_ == b.good_labels_;
}

MultiplierProfile MultiplierProfile::Uniform(std::size_t num_buyers,
                                             const Rational& value) {
  return MultiplierProfile(std::vector<Rational>(num_buyers, value));
}

bool MultiplierProfile::InRange() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [](const Rational& a) {
    return a >= 0 && a <= 1;
  });
}

void Allocation::Set(BuyerIndex buyer, GoodIndex good,
                     const Rational& fraction) {
  if (fraction == 0) {
    x_.erase({buyer, good});
  } else {
    x_[{buyer, good}] = fraction;
  }
}

Rational Allocation::Get(BuyerIndex buyer, GoodIndex good) const {
  const auto it = x_.find({buyer, good});
  return it == x_.end() ? Rational(0) : it->second;
}

Rational Allocation::GoodMass(GoodIndex good) const {
  Rational mass = 0;
  for (const auto& [key, fraction] : x_) {
    if (key.second == good) mass += fraction;
  }
  return mass;
}

std::string NotionName(EquilibriumNotion notion) {
  switch (notion) {
    case EquilibriumNotion::kExact:
      return "exact";
    case EquilibriumNotion::kGamma:
      return "gamma";
    case EquilibriumNotion::kSigmaGammaTau:
      return "sigma-gamma-tau";
  }
  return "unknown";
}

ApproxParams ApproxParams::Exact() { return ApproxParams(); }

ApproxParams ApproxParams::Gamma(const Rational& gamma) {
  CheckTolerance(gamma, "gamma");
  ApproxParams params;
  params.notion_ = EquilibriumNotion::kGamma;
  params.gamma_ = gamma;
  return params;
}

ApproxParams ApproxParams::SigmaGammaTau(const Rational& sigma,
                                         const Rational& gamma,
                                         const Rational& tau) {
  CheckTolerance(sigma, "sigma");
  CheckTolerance(gamma, "gamma");
  CheckTolerance(tau, "tau");
  ApproxParams params;
  params.notion_ = EquilibriumNotion::kSigmaGammaTau;
  params.sigma_ = sigma;
  params.gamma_ = gamma;
  params.tau_ = tau;
  return params;
}

Rational HighestBid(const PacingGame& game, const MultiplierProfile& alpha,
                    GoodIndex good) {
  CheckGood(game, good);
  CheckProfile(game, alpha);
  Rational best = 0;
  for (const Bidder& bidder : game.bidders(good)) {
    const Rational bid = alpha[bidder.buyer] * bidder.value;
    if (bid > best) best = bid;
  }
  return best;
}

Rational SecondPrice(const PacingGame& game, const MultiplierProfile& alpha,
                     GoodIndex good) {
  CheckGood(game, good);
  CheckProfile(game, alpha);
  // Absent buyers bid zero, so starting both at zero covers n = 1 and lone
  // positive bidders.
  Rational first = 0;
  Rational second = 0;
  for (const Bidder& bidder : game.bidders(good)) {
    const Rational bid = alpha[bidder.buyer] * bidder.value;
    if (bid > first) {
      second = first;
      first = bid;
    } else if (bid > second) {
      second = bid;
    }
  }
  return second;
}

Rational Spend(const PacingGame& game, const MultiplierProfile& alpha,
               const Allocation& x, BuyerIndex buyer) {
  if (buyer >= game.num_buyers()) throw std::out_of_range("buyer index");
  Rational total = 0;
  for (const auto& [key, fraction] : x.entries()) {
    if (key.first != buyer) continue;
    total += fraction * SecondPrice(game, alpha, key.second);
  }
  return total;
}

std::vector<BuyerIndex> EligibleBuyers(const PacingGame& game,
                                       const MultiplierProfile& alpha,
                                       const ApproxParams& params,
                                       GoodIndex good) {
  const Rational highest = HighestBid(game, alpha, good);
  std::vector<BuyerIndex> eligible;
  if (highest == 0) return eligible;
  const Rational threshold = (1 - params.sigma()) * highest;
  for (const Bidder& bidder : game.bidders(good)) {
    if (alpha[bidder.buyer] * bidder.value >= threshold) {
      eligible.push_back(bidder.buyer);
    }
  }
  return eligible;
}

}  // namespace pacing
