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

#ifndef PACING_CIRCUIT_H_
#define PACING_CIRCUIT_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pacing {

// Circuit nodes are numbered 1..node_count.
using Node = std::size_t;

enum class GateKind { kNot, kNor, kPurify, kNPurify };

std::string GateKindName(GateKind kind);               // "NOT", "NOR", ...
std::optional<GateKind> ParseGateKind(std::string_view name);

// A gate (kind, u, v, w).
//   NOT      input u, output v (w unused, stored as 0)
//   NOR      inputs u, v, output w
//   PURIFY   input u, outputs v, w
//   NPURIFY  input u, outputs v, w
struct Gate {
  GateKind kind = GateKind::kNot;
  Node u = 0;
  Node v = 0;
  Node w = 0;

  static Gate Not(Node in, Node out) { return {GateKind::kNot, in, out, 0}; }
  static Gate Nor(Node in1, Node in2, Node out) {
    return {GateKind::kNor, in1, in2, out};
  }
  static Gate Purify(Node in, Node out1, Node out2) {
    return {GateKind::kPurify, in, out1, out2};
  }
  static Gate NPurify(Node in, Node out1, Node out2) {
    return {GateKind::kNPurify, in, out1, out2};
  }

  std::vector<Node> inputs() const;
  std::vector<Node> outputs() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Ordered Zero < One < Bot, which fixes enumeration order.
enum class Logic : std::uint8_t { kZero = 0, kOne = 1, kBot = 2 };

char LogicChar(Logic value);  // '0', '1' or 'B'

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t node_count, Logic fill = Logic::kBot)
      : values_(node_count, fill) {}
  explicit Assignment(std::vector<Logic> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  Logic operator[](Node node) const { return values_.at(node - 1); }
  void Set(Node node, Logic value) { values_.at(node - 1) = value; }
  std::span<const Logic> values() const { return values_; }

  // No node is Bot.
  bool IsPure() const;
  // Compact form such as "01B".
  std::string ToString() const;

  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Logic> values_;
};

// A Pure-Circuit instance. The constructor checks node ranges and that the
// nodes of each gate are distinct (std::invalid_argument otherwise); the
// unique-output rule is checked by ValidateStructure.
class Circuit {
 public:
  Circuit(std::size_t node_count, std::vector<Gate> gates);

  std::size_t node_count() const { return node_count_; }
  std::span<const Gate> gates() const { return gates_; }

  // Interaction graph: u -> o for every gate with input u and output o, in
  // gate order.
  std::vector<std::pair<Node, Node>> InteractionEdges() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t node_count_;
  std::vector<Gate> gates_;
};

bool CheckGate(const Gate& gate, const Assignment& assignment);
bool CheckCircuit(const Circuit& circuit, const Assignment& assignment);

struct NodeDegree {
  std::size_t in = 0;
  std::size_t out = 0;
  friend bool operator==(const NodeDegree&, const NodeDegree&) = default;
};

struct StructureIssue {
  enum class Kind {
    kMissingOutput,    // node is the output of no gate (error)
    kDuplicateOutput,  // node is the output of several gates (error)
    kDegree,           // (in, out) not in {(1,1), (2,1), (1,2)} (warning)
  };
  Kind kind;
  Node node;
  std::string detail;
};

struct StructureReport {
  std::vector<StructureIssue> errors;
  std::vector<StructureIssue> warnings;
  std::vector<NodeDegree> degrees;  // indexed by node - 1

  bool valid() const { return errors.empty(); }
  bool degree_rule_holds() const { return warnings.empty(); }
  std::string ToString() const;
};

// Checks that every node is the output of exactly one gate (errors) and
// reports nodes breaking the bounded-degree rule (warnings).
StructureReport ValidateStructure(const Circuit& circuit);

// Replaces every PURIFY(u; v, w) by NPURIFY(u; v', w'), NOT(v' -> v) and
// NOT(w' -> w) with fresh nodes v', w' appended after the existing ones.
Circuit PurifyToNPurify(const Circuit& circuit);

// All satisfying assignments over {0, 1, Bot}^n in lexicographic order (node
// 1 most significant). Throws std::invalid_argument if the structure is
// invalid and std::length_error if node_count > max_nodes.
std::vector<Assignment> BruteForceSolve(const Circuit& circuit,
                                        std::size_t max_nodes = 12);

}  // namespace pacing

#endif  // PACING_CIRCUIT_H_
