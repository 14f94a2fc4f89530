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

#include "pacing/allocation.h"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pacing/linear_feasibility.h"

namespace pacing {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller index as root so block order follows buyer order.
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct TiedGood {
  GoodIndex good;
  std::vector<BuyerIndex> eligible;
};

}  // namespace

std::optional<Allocation> AllocationFeasible(const PacingGame& game,
                                             const MultiplierProfile& alpha,
                                             const ApproxParams& params) {
  const std::size_t n = game.num_buyers();
  const std::size_t m = game.num_goods();
  if (alpha.size() != n) {
    throw std::invalid_argument("multiplier profile size does not match game");
  }
  if (!alpha.InRange()) return std::nullopt;

  const Rational pacing_floor = 1 - params.tau();
  std::vector<bool> paced(n);
  std::vector<Rational> spend_floor(n);
  for (BuyerIndex i = 0; i < n; ++i) {
    paced[i] = alpha[i] < pacing_floor;
    if (paced[i]) spend_floor[i] = (1 - params.gamma()) * game.budget(i);
  }

  Allocation x;
  std::vector<Rational> fixed_spend(n);
  std::vector<TiedGood> tied;
  DisjointSets blocks(n);
  std::vector<bool> in_block(n, false);
  for (GoodIndex j = 0; j < m; ++j) {
    std::vector<BuyerIndex> eligible = EligibleBuyers(game, alpha, params, j);
    if (eligible.empty()) continue;
    const Rational price = SecondPrice(game, alpha, j);
    if (eligible.size() == 1) {
      x.Set(eligible.front(), j, 1);
      fixed_spend[eligible.front()] += price;
      continue;
    }
    for (BuyerIndex i : eligible) {
      in_block[i] = true;
      blocks.Union(eligible.front(), i);
    }
    tied.push_back({j, std::move(eligible)});
  }

  for (BuyerIndex i = 0; i < n; ++i) {
    if (in_block[i]) continue;
    if (fixed_spend[i] > game.budget(i)) return std::nullopt;
    if (paced[i] && fixed_spend[i] < spend_floor[i]) return std::nullopt;
  }

  // One linear system per block of buyers coupled by tied goods.
  std::map<std::size_t, std::vector<const TiedGood*>> goods_by_block;
  for (const TiedGood& t : tied) {
    goods_by_block[blocks.Find(t.eligible.front())].push_back(&t);
  }
  for (const auto& [root, goods] : goods_by_block) {
    std::vector<std::pair<BuyerIndex, GoodIndex>> variables;
    std::vector<Rational> prices;
    LinearSystem system(0);
    std::vector<LinearConstraint> good_rows;
    for (const TiedGood* t : goods) {
      LinearConstraint row{{}, Relation::kEqual, 1};
      const Rational price = SecondPrice(game, alpha, t->good);
      for (BuyerIndex i : t->eligible) {
        row.terms.emplace_back(variables.size(), 1);
        variables.emplace_back(i, t->good);
        prices.push_back(price);
      }
      good_rows.push_back(std::move(row));
    }
    system = LinearSystem(variables.size());
    for (LinearConstraint& row : good_rows) system.Add(std::move(row));

    for (BuyerIndex i = 0; i < n; ++i) {
      if (!in_block[i] || blocks.Find(i) != root) continue;
      LinearConstraint upper{{}, Relation::kLessEqual,
                             game.budget(i) - fixed_spend[i]};
      for (std::size_t k = 0; k < variables.size(); ++k) {
        if (variables[k].first == i && prices[k] != 0) {
          upper.terms.emplace_back(k, prices[k]);
        }
      }
      LinearConstraint lower{upper.terms, Relation::kGreaterEqual,
                             spend_floor[i] - fixed_spend[i]};
      system.Add(std::move(upper));
      if (paced[i]) system.Add(std::move(lower));
    }

    const auto point = FindFeasiblePoint(system);
    if (!point) return std::nullopt;
    for (std::size_t k = 0; k < variables.size(); ++k) {
      x.Set(variables[k].first, variables[k].second, (*point)[k]);
    }
  }
  return x;
}

}  // namespace pacing
