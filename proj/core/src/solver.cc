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

#include "pacing/solver.h"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "pacing/allocation.h"
#include "pacing/verify.h"

namespace pacing {
namespace {

const Rational kZero = 0;

// Depth-first enumeration in buyer order. Buyer i can be bounded as soon as
// every buyer sharing a good with it has a value, i.e. once the largest such
// index with more than one choice is assigned. Single-choice buyers are set
// up front.
class GridEnumerator {
 public:
  GridEnumerator(const PacingGame& game, const ApproxParams& params,
                 std::vector<std::vector<Rational>> choices)
      : game_(game),
        params_(params),
        choices_(std::move(choices)),
        alpha_(MultiplierProfile::Uniform(game.num_buyers(), 1)),
        checks_at_(game.num_buyers()) {
    const std::size_t n = game.num_buyers();
    auto free = [&](BuyerIndex i) { return choices_[i].size() > 1; };
    for (BuyerIndex i = 0; i < n; ++i) {
      if (choices_[i].size() == 1) alpha_[i] = choices_[i][0];
    }
    bids_.resize(game.num_goods());
    slot_.resize(n);
    for (GoodIndex j = 0; j < game.num_goods(); ++j) {
      for (const Bidder& bidder : game.bidders(j)) {
        slot_[bidder.buyer].push_back(bids_[j].size());
        bids_[j].push_back(alpha_[bidder.buyer] * bidder.value);
      }
    }
    spend_floor_.resize(n);
    for (BuyerIndex i = 0; i < n; ++i) {
      spend_floor_[i] = (1 - params.gamma()) * game.budget(i);
      BuyerIndex last = 0;
      if (free(i)) last = i;
      for (const Interest& interest : game.interests(i)) {
        for (const Bidder& bidder : game.bidders(interest.good)) {
          if (free(bidder.buyer)) last = std::max(last, bidder.buyer);
        }
      }
      checks_at_[last].push_back(i);
    }
  }

  std::vector<Equilibrium> Run() {
    if (std::any_of(choices_.begin(), choices_.end(),
                    [](const auto& c) { return c.empty(); })) {
      return {};
    }
    Descend(0);
    return std::move(found_);
  }

 private:
  void Descend(BuyerIndex level) {
    if (level == game_.num_buyers()) {
      Emit();
      return;
    }
    for (const Rational& value : choices_[level]) {
      SetAlpha(level, value);
      bool ok = true;
      for (BuyerIndex i : checks_at_[level]) {
        if (!SpendBoundsAdmissible(i)) {
          ok = false;
          break;
        }
      }
      if (ok) Descend(level + 1);
    }
  }

  // Interests are ascending by good, matching the slot order.
  void SetAlpha(BuyerIndex i, const Rational& value) {
    alpha_[i] = value;
    const auto interests = game_.interests(i);
    for (std::size_t k = 0; k < interests.size(); ++k) {
      bids_[interests[k].good][slot_[i][k]] = value * interests[k].value;
    }
  }

  // Goods where i is the only eligible buyer must be paid in full and goods
  // where it is one of several may be paid in full, which bounds its spend.
  bool SpendBoundsAdmissible(BuyerIndex i) const {
    Rational min_spend = 0;
    Rational max_spend = 0;
    const auto interests = game_.interests(i);
    for (std::size_t k = 0; k < interests.size(); ++k) {
      const std::vector<Rational>& bids = bids_[interests[k].good];
      const Rational* first = &kZero;
      const Rational* second = &kZero;
      for (const Rational& bid : bids) {
        if (bid > *first) {
          second = first;
          first = &bid;
        } else if (bid > *second) {
          second = &bid;
        }
      }
      if (*first == 0) continue;
      const Rational threshold = (1 - params_.sigma()) * *first;
      if (bids[slot_[i][k]] < threshold) continue;
      std::size_t eligible = 0;
      for (const Rational& bid : bids) eligible += bid >= threshold;
      max_spend += *second;
      if (eligible == 1) min_spend += *second;
    }
    if (min_spend > game_.budget(i)) return false;
    if (alpha_[i] < 1 - params_.tau() && max_spend < spend_floor_[i]) {
      return false;
    }
    return true;
  }

  void Emit() {
    std::optional<Allocation> x = AllocationFeasible(game_, alpha_, params_);
    if (!x) return;
    const VerificationReport report = Verify(game_, alpha_, *x, params_);
    if (!report.valid()) {
      throw std::logic_error("feasibility solver produced an invalid pair: " +
                             report.ToString());
    }
    found_.push_back({alpha_, std::move(*x)});
  }

  const PacingGame& game_;
  const ApproxParams& params_;
  std::vector<std::vector<Rational>> choices_;
  MultiplierProfile alpha_;
  std::vector<std::vector<BuyerIndex>> checks_at_;
  std::vector<Rational> spend_floor_;
  // bids_[j][s]: current bid of the s-th bidder on good j.
  std::vector<std::vector<Rational>> bids_;
  // slot_[i][k]: position of buyer i among the bidders of its k-th interest.
  std::vector<std::vector<std::size_t>> slot_;
  std::vector<Equilibrium> found_;
};

void Fail(LemmaReport& report, const char* lemma, std::size_t equilibrium,
          const std::string& detail) {
  report.failures.push_back({lemma, equilibrium, detail});
}

std::string Alpha(const std::string& who, const Rational& value) {
  return "alpha_" + who + " = " + FormatRational(value);
}

// Multiplier predicates for the two encodings.
struct Encoding {
  std::function<bool(const Rational&)> is_zero;
  std::function<bool(const Rational&)> is_one;
  // NPURIFY case split: above the threshold b_v is forced to Zero, at or
  // below it b_w is forced to One.
  Rational split;
};

}  // namespace

std::vector<Rational> MainGrid(const ReductionParams& params, bool refine) {
  std::vector<Rational> grid{params.kappa()};
  if (refine) {
    grid.push_back(MakeRational(1, 2) + params.delta() / 2);
    grid.push_back((params.kappa() + 1) / 2);
  }
  grid.push_back(1);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<Rational> WeakGrid() {
  return {MakeRational(1, 10), MakeRational(1, 9), MakeRational(19, 20), 1};
}

std::vector<Equilibrium> GridSearch(const PacingGame& game,
                                    const ApproxParams& params,
                                    const SearchConfig& config) {
  const std::size_t n = game.num_buyers();
  std::vector<Rational> free_values = config.grid;
  if (config.generic_denominator) {
    const std::size_t d = *config.generic_denominator;
    if (d == 0) throw std::invalid_argument("generic grid denominator is 0");
    free_values.clear();
    for (std::size_t q = 0; q <= d; ++q) {
      free_values.push_back(
          MakeRational(static_cast<long>(q), static_cast<long>(d)));
    }
  }
  for (const Rational& v : free_values) {
    if (v < 0 || v > 1) {
      throw std::invalid_argument("grid value " + FormatRational(v) +
                                  " outside [0, 1]");
    }
  }

  std::vector<bool> pinned(n, false);
  for (BuyerIndex i : config.pinned) {
    if (i >= n) throw std::out_of_range("pinned buyer out of range");
    pinned[i] = true;
  }
  std::vector<std::vector<Rational>> choices(n);
  std::size_t profiles = 1;
  for (BuyerIndex i = 0; i < n; ++i) {
    choices[i] = pinned[i] ? std::vector<Rational>{1} : free_values;
    const std::size_t k = choices[i].size();
    if (k == 0) {
      profiles = 0;
    } else if (profiles > 0 && profiles > config.limit / k) {
      throw LimitExceeded("grid exceeds the limit of " +
                          std::to_string(config.limit) + " profiles");
    } else {
      profiles *= k;
    }
  }
  if (profiles > config.limit) {
    throw LimitExceeded("grid exceeds the limit of " +
                        std::to_string(config.limit) + " profiles");
  }
  return GridEnumerator(game, params, std::move(choices)).Run();
}

std::vector<Equilibrium> GridSearch(const ReductionArtifact& artifact,
                                    const ApproxParams& params,
                                    const SearchConfig& config) {
  SearchConfig local = config;
  if (config.pin_aux) {
    local.pinned.insert(local.pinned.end(), artifact.aux_buyer.begin(),
                        artifact.aux_buyer.end());
  }
  return GridSearch(artifact.game, params, local);
}

std::optional<Equilibrium> CandidateFromAssignment(
    const ReductionArtifact& artifact, const Assignment& assignment) {
  if (artifact.variant != Variant::kMain) {
    throw std::invalid_argument("candidates are built for main artifacts only");
  }
  if (assignment.size() != artifact.circuit.node_count()) {
    throw std::invalid_argument("assignment size does not match circuit");
  }
  if (!assignment.IsPure()) {
    throw std::invalid_argument("assignment contains Bot: " +
                                assignment.ToString());
  }
  const Rational kappa = artifact.params().kappa();
  MultiplierProfile alpha =
      MultiplierProfile::Uniform(artifact.game.num_buyers(), 1);
  for (Node v = 1; v <= assignment.size(); ++v) {
    if (assignment[v] == Logic::kZero) alpha[artifact.b(v)] = kappa;
  }
  std::optional<Allocation> x =
      AllocationFeasible(artifact.game, alpha, ApproxParams::Exact());
  if (!x) return std::nullopt;
  return Equilibrium{std::move(alpha), std::move(*x)};
}

bool LemmaReport::Has(std::string_view lemma) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const LemmaFailure& f) { return f.lemma == lemma; });
}

std::string LemmaReport::ToString() const {
  std::ostringstream out;
  out << checks << " checks, " << failures.size() << " failures";
  for (const LemmaFailure& f : failures) {
    out << "\n  [" << f.lemma << "] equilibrium " << f.equilibrium << ": "
        << f.detail;
  }
  return out.str();
}

LemmaReport LemmaSuite(const ReductionArtifact& artifact,
                       std::span<const Equilibrium> equilibria) {
  const PacingGame& game = artifact.game;
  const ApproxParams params = TargetParams(artifact);
  const bool main = artifact.variant == Variant::kMain;

  Encoding enc;
  Rational b_floor;
  Rational c_floor;
  if (main) {
    const ReductionParams p = artifact.params();
    const Rational kappa = p.kappa();
    enc.is_zero = [kappa](const Rational& a) { return a == kappa; };
    enc.is_one = [](const Rational& a) { return a == 1; };
    enc.split = MakeRational(1, 2) + p.delta() / 2;
    b_floor = kappa;
    c_floor = 1;
  } else {
    enc.is_zero = [](const Rational& a) { return a <= kWeakZeroHigh; };
    enc.is_one = [](const Rational& a) { return a >= kWeakOneLow; };
    enc.split = MakeRational(2, 5);
    b_floor = kWeakZeroLow;
    c_floor = 1 - kWeakTolerance;
  }

  LemmaReport report;
  for (std::size_t e = 0; e < equilibria.size(); ++e) {
    const MultiplierProfile& alpha = equilibria[e].alpha;
    const Allocation& x = equilibria[e].x;
    if (alpha.size() != game.num_buyers()) {
      throw std::invalid_argument("equilibrium does not match the artifact");
    }

    ++report.checks;
    const VerificationReport verdict = Verify(game, alpha, x, params);
    if (!verdict.valid()) Fail(report, "equilibrium", e, verdict.ToString());

    for (Node v = 1; v <= artifact.circuit.node_count(); ++v) {
      report.checks += 2;
      const Rational& ab = alpha[artifact.b(v)];
      const Rational& ac = alpha[artifact.c(v)];
      if (ac < c_floor || ac > 1) {
        Fail(report, "general-range", e, Alpha("c_" + std::to_string(v), ac));
      }
      if (ab < b_floor || ab > 1) {
        Fail(report, "general-range", e, Alpha("b_" + std::to_string(v), ab));
      }
    }

    for (const EdgeGood& edge : artifact.edge_goods) {
      ++report.checks;
      const Rational share = x.Get(artifact.b(edge.to), edge.good);
      const Rational price = SecondPrice(game, alpha, edge.good);
      const Rational& expected = alpha[artifact.b(edge.from)];
      if (share != 1 || price != expected) {
        Fail(report, "winning-goods", e,
             game.good_label(edge.good) + ": b_" + std::to_string(edge.to) +
                 " holds " + FormatRational(share) + " at price " +
                 FormatRational(price) + ", expected 1/1 at " +
                 FormatRational(expected));
      }
    }

    auto a = [&](Node node) -> const Rational& {
      return alpha[artifact.b(node)];
    };
    auto label = [](Node node) { return "b_" + std::to_string(node); };
    for (const Gate& gate : artifact.circuit.gates()) {
      switch (gate.kind) {
        case GateKind::kNot: {
          report.checks += 2;
          if (enc.is_zero(a(gate.u)) && !enc.is_one(a(gate.v))) {
            Fail(report, "not-gate", e,
                 "input zero but " + Alpha(label(gate.v), a(gate.v)));
          }
          if (enc.is_one(a(gate.u)) && !enc.is_zero(a(gate.v))) {
            Fail(report, "not-gate", e,
                 "input one but " + Alpha(label(gate.v), a(gate.v)));
          }
          break;
        }
        case GateKind::kNor: {
          report.checks += 2;
          const bool both_zero = enc.is_zero(a(gate.u)) && enc.is_zero(a(gate.v));
          const bool some_one = enc.is_one(a(gate.u)) || enc.is_one(a(gate.v));
          if (both_zero && !enc.is_one(a(gate.w))) {
            Fail(report, "nor-gate", e,
                 "inputs zero but " + Alpha(label(gate.w), a(gate.w)));
          }
          if (some_one && !enc.is_zero(a(gate.w))) {
            Fail(report, "nor-gate", e,
                 "an input is one but " + Alpha(label(gate.w), a(gate.w)));
          }
          break;
        }
        case GateKind::kNPurify: {
          report.checks += 5;
          const Rational& au = a(gate.u);
          const Rational& av = a(gate.v);
          const Rational& aw = a(gate.w);
          if (!enc.is_zero(av) && !enc.is_one(aw)) {
            Fail(report, "npurify-gate", e,
                 "neither output pure: " + Alpha(label(gate.v), av) + ", " +
                     Alpha(label(gate.w), aw));
          }
          if (enc.is_zero(au) && !(enc.is_one(av) && enc.is_one(aw))) {
            Fail(report, "npurify-gate", e, "input zero but outputs not one");
          }
          if (enc.is_one(au) && !(enc.is_zero(av) && enc.is_zero(aw))) {
            Fail(report, "npurify-gate", e, "input one but outputs not zero");
          }
          if (au > enc.split && !enc.is_zero(av)) {
            Fail(report, "npurify-gate", e,
                 Alpha(label(gate.u), au) + " above " +
                     FormatRational(enc.split) + " but " +
                     Alpha(label(gate.v), av));
          }
          if (au <= enc.split && !enc.is_one(aw)) {
            Fail(report, "npurify-gate", e,
                 Alpha(label(gate.u), au) + " at most " +
                     FormatRational(enc.split) + " but " +
                     Alpha(label(gate.w), aw));
          }
          break;
        }
        case GateKind::kPurify:
          break;
      }
    }
  }
  return report;
}

}  // namespace pacing
