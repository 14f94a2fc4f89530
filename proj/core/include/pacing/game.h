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

#ifndef PACING_GAME_H_
#define PACING_GAME_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pacing/rational.h"

namespace pacing {

using BuyerIndex = std::size_t;
using GoodIndex = std::size_t;

// One positive entry v_ij of the sparse valuation matrix.
struct ValueEntry {
  BuyerIndex buyer = 0;
  GoodIndex good = 0;
  Rational value;

  friend bool operator==(const ValueEntry&, const ValueEntry&) = default;
};

// A buyer with positive value on some good (one column entry of v).
struct Bidder {
  BuyerIndex buyer = 0;
  Rational value;
};

// A good a buyer values positively (one row entry of v).
struct Interest {
  GoodIndex good = 0;
  Rational value;
};

// A second-price pacing game: n budget-constrained buyers and m goods, each
// good sold in its own single-slot second-price auction.
//
// The constructor enforces the existence preconditions: every budget is
// positive, every buyer values at least one good and every good is valued by
// at least one buyer. Zero entries are dropped; negative or duplicate entries
// and out-of-range indices throw std::invalid_argument.
class PacingGame {
 public:
  PacingGame(std::size_t num_buyers, std::size_t num_goods,
             std::vector<Rational> budgets, std::vector<ValueEntry> values,
             std::vector<std::string> buyer_labels = {},
             std::vector<std::string> good_labels = {});

  std::size_t num_buyers() const { return budgets_.size(); }
  std::size_t num_goods() const { return bidders_.size(); }

  const Rational& budget(BuyerIndex buyer) const;
  std::span<const Rational> budgets() const { return budgets_; }

  // v_ij, zero when absent.
  Rational value(BuyerIndex buyer, GoodIndex good) const;

  // Buyers with positive value on `good`, ascending by buyer.
  std::span<const Bidder> bidders(GoodIndex good) const;
  // Goods `buyer` values positively, ascending by good.
  std::span<const Interest> interests(BuyerIndex buyer) const;

  // All positive entries ordered by (buyer, good).
  std::vector<ValueEntry> entries() const;

  bool has_labels() const { return !buyer_labels_.empty(); }
  // Falls back to "buyer_<i>" / "good_<j>" for unlabeled games.
  std::string buyer_label(BuyerIndex buyer) const;
  std::string good_label(GoodIndex good) const;
  std::span<const std::string> buyer_labels() const { return buyer_labels_; }
  std::span<const std::string> good_labels() const { return good_labels_; }

  friend bool operator==(const PacingGame& a, const PacingGame& b);

 private:
  std::vector<Rational> budgets_;
  std::vector<std::vector<Bidder>> bidders_;
  std::vector<std::vector<Interest>> interests_;
  std::vector<std::string> buyer_labels_;
  std::vector<std::string> good_labels_;
};

// One pacing multiplier per buyer. Range is not enforced here; the verifier
// reports out-of-range multipliers as violations.
class MultiplierProfile {
 public:
  MultiplierProfile() = default;
  explicit MultiplierProfile(std::vector<Rational> alpha)
      : alpha_(std::move(alpha)) {}
  static MultiplierProfile Uniform(std::size_t num_buyers,
                                   const Rational& value);

  std::size_t size() const { return alpha_.size(); }
  const Rational& operator[](BuyerIndex buyer) const { return alpha_[buyer]; }
  Rational& operator[](BuyerIndex buyer) { return alpha_[buyer]; }
  std::span<const Rational> values() const { return alpha_; }

  // 0 <= alpha_i <= 1 for every buyer.
  bool InRange() const;

  friend bool operator==(const MultiplierProfile&,
                         const MultiplierProfile&) = default;

 private:
  std::vector<Rational> alpha_;
};

// Sparse fractional allocation x_ij. Zero entries are not stored.
class Allocation {
 public:
  using Key = std::pair<BuyerIndex, GoodIndex>;

  void Set(BuyerIndex buyer, GoodIndex good, const Rational& fraction);
  Rational Get(BuyerIndex buyer, GoodIndex good) const;
  const std::map<Key, Rational>& entries() const { return x_; }
  bool empty() const { return x_.empty(); }

  // Sum over buyers of x_ij.
  Rational GoodMass(GoodIndex good) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::map<Key, Rational> x_;
};

// Which equilibrium notion to check, with its tolerances.
enum class EquilibriumNotion {
  kExact,          // pacing equilibrium
  kGamma,          // gamma-approximate
  kSigmaGammaTau,  // (sigma, gamma, tau)-approximate
};

std::string NotionName(EquilibriumNotion notion);

class ApproxParams {
 public:
  ApproxParams() = default;
  static ApproxParams Exact();
  // gamma in [0, 1).
  static ApproxParams Gamma(const Rational& gamma);
  // Each tolerance in [0, 1).
  static ApproxParams SigmaGammaTau(const Rational& sigma, const Rational& gamma,
                                    const Rational& tau);

  EquilibriumNotion notion() const { return notion_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& sigma() const { return sigma_; }
  const Rational& tau() const { return tau_; }

  friend bool operator==(const ApproxParams&, const ApproxParams&) = default;

 private:
  EquilibriumNotion notion_ = EquilibriumNotion::kExact;
  Rational gamma_ = 0;
  Rational sigma_ = 0;
  Rational tau_ = 0;
};

// h_j(alpha) = max_i alpha_i v_ij, zero when nobody bids.
Rational HighestBid(const PacingGame& game, const MultiplierProfile& alpha,
                    GoodIndex good);

// p_j(alpha): the second largest of all n bids (zeros included), so equal
// maxima give p_j = h_j and a lone positive bidder pays 0.
Rational SecondPrice(const PacingGame& game, const MultiplierProfile& alpha,
                     GoodIndex good);

// sum_j x_ij p_j(alpha).
Rational Spend(const PacingGame& game, const MultiplierProfile& alpha,
               const Allocation& x, BuyerIndex buyer);

// Every bid alpha_i v_ij on `good` within (1 - sigma) of the highest bid, for
// h_j > 0. Under kExact and kGamma sigma is zero and this is the set of
// buyers attaining the maximum.
std::vector<BuyerIndex> EligibleBuyers(const PacingGame& game,
                                       const MultiplierProfile& alpha,
                                       const ApproxParams& params,
                                       GoodIndex good);

}  // namespace pacing

#endif  // PACING_GAME_H_
