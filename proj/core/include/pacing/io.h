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

// JSON documents for games, circuits, reduction mappings and equilibrium
// lists. Rationals are always written as "p/q" strings. Serialization is
// deterministic, so serialize(parse(s)) == s for any s produced here.
//
// Game:
//   {"n": 2, "m": 1, "budgets": ["10/1", "10/1"],
//    "values": [{"buyer": 0, "good": 0, "value": "2/1"}, ...],
//    "labels": {"buyers": ["b_1", ...], "goods": ["g_1", ...]}}   (optional)
//   Buyer and good indices are 0-based. Budgets and values also accept
//   decimals ("1.8"), converted exactly.
//
// Circuit:
//   {"nodes": 2, "gates": [{"kind": "NOT", "u": 1, "v": 2, "w": null}, ...]}
//   Nodes are 1-based; w is null (or omitted) for NOT.
//
// Mapping:
//   {"variant": "main", "gamma": "0/1",
//    "node_buyer": {"1": "b_1", ...}, "aux_buyer": {"1": "c_1", ...},
//    "gate_goods": [["g_2", "g_(1,2)"], ...]}
//
// Equilibrium list:
//   [{"alpha": {"b_1": "1/1", ...},
//     "x": [{"buyer": 0, "good": 0, "value": "3/4"}, ...],
//     "params": {"notion": "exact", "gamma": "0/1", "sigma": "0/1",
//                "tau": "0/1"},
//     "verified": true}, ...]

#ifndef PACING_IO_H_
#define PACING_IO_H_

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pacing/circuit.h"
#include "pacing/game.h"
#include "pacing/reduction.h"
#include "pacing/solver.h"

namespace pacing {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string SerializeGame(const PacingGame& game);
PacingGame ParseGame(std::string_view text);

std::string SerializeCircuit(const Circuit& circuit);
Circuit ParseCircuit(std::string_view text);

std::string SerializeMapping(const ReductionMapping& mapping);
ReductionMapping ParseMapping(std::string_view text);

std::string SerializeParams(const ApproxParams& params);
ApproxParams ParseParams(std::string_view text);

struct EquilibriumRecord {
  Equilibrium equilibrium;
  ApproxParams params;
  bool verified = false;

  friend bool operator==(const EquilibriumRecord&,
                         const EquilibriumRecord&) = default;
};

// Multipliers are keyed by the game's buyer labels.
std::string SerializeEquilibria(const PacingGame& game,
                                std::span<const EquilibriumRecord> records);
// Requires every buyer of `game` to have a multiplier.
std::vector<EquilibriumRecord> ParseEquilibria(const PacingGame& game,
                                               std::string_view text);

// Label-level view of an equilibrium list, for consumers without the game.
std::vector<std::map<std::string, Rational>> ParseEquilibriumMultipliers(
    std::string_view text);

}  // namespace pacing

#endif  // PACING_IO_H_
