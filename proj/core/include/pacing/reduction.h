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

// Compiles Pure-Circuit instances over {NOT, NOR, NPURIFY} into second-price
// pacing games whose approximate equilibria encode satisfying assignments,
// and decodes multiplier profiles back into assignments.
//
// Every node v gets a buyer b_v whose multiplier carries x[v]. The gate that
// outputs v adds an auxiliary buyer c_v with a large budget together with a
// good g_v contested by b_v and c_v, plus one edge good g_(u,v) per input u,
// on which b_v outbids b_u and therefore pays alpha_{b_u}.
//
// Two gadget families are provided. The main family is parameterized by the
// tolerance gamma < 1/3 (with delta = 1/3 - gamma, kappa = 3 delta / 2) and
// encodes 0 as alpha = kappa and 1 as alpha = 1. The weak family uses fixed
// constants, targets (1/20, 1/20, 1/20)-approximate equilibria and encodes 0
// as alpha in [1/10, 3/20] and 1 as alpha in [9/10, 1].

#ifndef PACING_REDUCTION_H_
#define PACING_REDUCTION_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pacing/circuit.h"
#include "pacing/game.h"
#include "pacing/rational.h"

namespace pacing {

enum class Variant { kMain, kWeak };

std::string VariantName(Variant variant);  // "main" / "weak"

class ReductionParams {
 public:
  // Throws std::invalid_argument unless 0 <= gamma < 1/3.
  static ReductionParams Create(const Rational& gamma);

  const Rational& gamma() const { return gamma_; }
  const Rational& delta() const { return delta_; }  // 1/3 - gamma
  const Rational& kappa() const { return kappa_; }  // 3 delta / 2

 private:
  Rational gamma_, delta_, kappa_;
};

// The budget given to every auxiliary buyer c_v.
inline const Rational kAuxBudget = 1000;

// Weak-family decoding thresholds and target tolerance.
inline const Rational kWeakZeroLow = MakeRational(1, 10);
inline const Rational kWeakZeroHigh = MakeRational(3, 20);
inline const Rational kWeakOneLow = MakeRational(9, 10);
inline const Rational kWeakTolerance = MakeRational(1, 20);

struct EdgeGood {
  Node from = 0;
  Node to = 0;
  GoodIndex good = 0;
};

struct ReductionArtifact {
  Variant variant = Variant::kMain;
  // Main: the compile tolerance. Weak: the target tolerance 1/20.
  Rational gamma;
  Circuit circuit;
  PacingGame game;
  std::vector<BuyerIndex> node_buyer;  // b_v, indexed by node - 1
  std::vector<BuyerIndex> aux_buyer;   // c_v, indexed by node - 1
  std::vector<GoodIndex> node_good;    // g_v, indexed by node - 1
  std::vector<std::vector<GoodIndex>> gate_goods;  // per gate, in gate order
  std::vector<EdgeGood> edge_goods;    // in interaction-edge order

  BuyerIndex b(Node node) const { return node_buyer.at(node - 1); }
  BuyerIndex c(Node node) const { return aux_buyer.at(node - 1); }
  GoodIndex g(Node node) const { return node_good.at(node - 1); }
  // kappa for main artifacts.
  ReductionParams params() const { return ReductionParams::Create(gamma); }
};

// Buyers b_1..b_n come first, then c-buyers in gate order; goods are laid
// out gate by gate, gadget goods before edge goods. Throws
// std::invalid_argument for out-of-range gamma, invalid structure or PURIFY
// gates (rewrite them with PurifyToNPurify first).
ReductionArtifact CompileMain(const Circuit& circuit, const Rational& gamma = 0);
ReductionArtifact CompileWeak(const Circuit& circuit);

// The equilibrium notion the artifact's decoding guarantee is stated for:
// gamma-approximate (exact at gamma = 0) for main, (1/20, 1/20, 1/20) for
// weak.
ApproxParams TargetParams(const ReductionArtifact& artifact);

// Zero iff alpha == kappa, One iff alpha == 1, exact comparisons.
Logic DecodeMainMultiplier(const Rational& alpha, const Rational& kappa);
// Zero on [1/10, 3/20], One on [9/10, 1], closed intervals.
Logic DecodeWeakMultiplier(const Rational& alpha);

// Throws std::invalid_argument on a variant mismatch or a profile that does
// not cover the game's buyers.
Assignment DecodeMain(const ReductionArtifact& artifact,
                      const MultiplierProfile& alpha);
Assignment DecodeWeak(const ReductionArtifact& artifact,
                      const MultiplierProfile& alpha);
Assignment Decode(const ReductionArtifact& artifact,
                  const MultiplierProfile& alpha);

// Approximate decoding for float-seeded searches: snaps alpha_{b_v} to kappa
// or 1 when within `epsilon`, Bot otherwise. Not an exact decoder.
Assignment DecodeMainNearest(const ReductionArtifact& artifact,
                             const MultiplierProfile& alpha,
                             const Rational& epsilon);

// Label-level view of an artifact, as stored in a mapping document.
struct ReductionMapping {
  Variant variant = Variant::kMain;
  Rational gamma;
  std::vector<std::pair<Node, std::string>> node_buyer;  // ascending node
  std::vector<std::pair<Node, std::string>> aux_buyer;   // ascending node
  std::vector<std::vector<std::string>> gate_goods;      // per gate

  friend bool operator==(const ReductionMapping&,
                         const ReductionMapping&) = default;
};

ReductionMapping MappingOf(const ReductionArtifact& artifact);

// Decodes a label -> multiplier map through a mapping document. Throws
// std::invalid_argument if a b-buyer label is missing.
Assignment DecodeLabeled(const ReductionMapping& mapping,
                         const std::map<std::string, Rational>& alpha);

}  // namespace pacing

#endif  // PACING_REDUCTION_H_
