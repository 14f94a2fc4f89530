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

#include "pacing/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pacing {
namespace {

bool IsPure(Logic value) { return value != Logic::kBot; }

Logic Negate(Logic value) {
  switch (value) {
    case Logic::kZero:
      return Logic::kOne;
    case Logic::kOne:
      return Logic::kZero;
    case Logic::kBot:
      return Logic::kBot;
  }
  return Logic::kBot;
}

}  // namespace

std::string GateKindName(GateKind kind) {
  switch (kind) {
    case GateKind::kNot:
      return "NOT";
    case GateKind::kNor:
      return "NOR";
    case GateKind::kPurify:
      return "PURIFY";
    case GateKind::kNPurify:
      return "NPURIFY";
  }
  return "?";
}

std::optional<GateKind> ParseGateKind(std::string_view name) {
  if (name == "NOT") return GateKind::kNot;
  if (name == "NOR") return GateKind::kNor;
  if (name == "PURIFY") return GateKind::kPurify;
  if (name == "NPURIFY") return GateKind::kNPurify;
  return std::nullopt;
}

std::vector<Node> Gate::inputs() const {
  if (kind == GateKind::kNor) return {u, v};
  return {u};
}

std::vector<Node> Gate::outputs() const {
  switch (kind) {
    case GateKind::kNot:
      return {v};
    case GateKind::kNor:
      return {w};
    case GateKind::kPurify:
    case GateKind::kNPurify:
      return {v, w};
  }
  return {};
}

char LogicChar(Logic value) {
  switch (value) {
    case Logic::kZero:
      return '0';
    case Logic::kOne:
      return '1';
    case Logic::kBot:
      return 'B';
  }
  return '?';
}

bool Assignment::IsPure() const {
  return std::none_of(values_.begin(), values_.end(),
                      [](Logic v) { return v == Logic::kBot; });
}

std::string Assignment::ToString() const {
  std::string out;
  for (Logic v : values_) out.push_back(LogicChar(v));
  return out;
}

Circuit::Circuit(std::size_t node_count, std::vector<Gate> gates)
    : node_count_(node_count), gates_(std::move(gates)) {
  if (node_count_ == 0) throw std::invalid_argument("circuit has no nodes");
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gate = gates_[g];
    std::vector<Node> nodes = gate.inputs();
    for (Node o : gate.outputs()) nodes.push_back(o);
    for (Node node : nodes) {
      if (node < 1 || node > node_count_) {
        throw std::invalid_argument("gate " + std::to_string(g) +
                                    " references node " + std::to_string(node) +
                                    " outside [1, " +
                                    std::to_string(node_count_) + "]");
      }
    }
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
      throw std::invalid_argument("gate " + std::to_string(g) +
                                  " repeats a node");
    }
  }
}

std::vector<std::pair<Node, Node>> Circuit::InteractionEdges() const {
  std::vector<std::pair<Node, Node>> edges;
  for (const Gate& gate : gates_) {
    for (Node in : gate.inputs()) {
      for (Node out : gate.outputs()) edges.emplace_back(in, out);
    }
  }
  return edges;
}

bool CheckGate(const Gate& gate, const Assignment& x) {
  switch (gate.kind) {
    case GateKind::kNot:
      return !IsPure(x[gate.u]) || x[gate.v] == Negate(x[gate.u]);
    case GateKind::kNor: {
      const bool some_one = x[gate.u] == Logic::kOne || x[gate.v] == Logic::kOne;
      const bool both_zero =
          x[gate.u] == Logic::kZero && x[gate.v] == Logic::kZero;
      if (some_one && x[gate.w] != Logic::kZero) return false;
      if (both_zero && x[gate.w] != Logic::kOne) return false;
      return true;
    }
    case GateKind::kPurify:
    case GateKind::kNPurify: {
      if (!IsPure(x[gate.v]) && !IsPure(x[gate.w])) return false;
      if (!IsPure(x[gate.u])) return true;
      const Logic target =
          gate.kind == GateKind::kPurify ? x[gate.u] : Negate(x[gate.u]);
      return x[gate.v] == target && x[gate.w] == target;
    }
  }
  return false;
}

bool CheckCircuit(const Circuit& circuit, const Assignment& assignment) {
  if (assignment.size() != circuit.node_count()) {
    throw std::invalid_argument("assignment size does not match circuit");
  }
  for (const Gate& gate : circuit.gates()) {
    if (!CheckGate(gate, assignment)) return false;
  }
  return true;
}

std::string StructureReport::ToString() const {
  std::ostringstream out;
  out << (valid() ? "valid" : "invalid");
  if (valid()) {
    out << (degree_rule_holds() ? ", degree rule holds"
                                : ", degree rule violated");
  }
  for (const StructureIssue& e : errors) out << "\n  error: " << e.detail;
  for (const StructureIssue& w : warnings) out << "\n  warning: " << w.detail;
  return out.str();
}

StructureReport ValidateStructure(const Circuit& circuit) {
  const std::size_t n = circuit.node_count();
  StructureReport report;
  report.degrees.assign(n, NodeDegree{});
  std::vector<std::size_t> producers(n, 0);
  for (const Gate& gate : circuit.gates()) {
    for (Node o : gate.outputs()) ++producers[o - 1];
  }
  for (const auto& [from, to] : circuit.InteractionEdges()) {
    ++report.degrees[from - 1].out;
    ++report.degrees[to - 1].in;
  }
  for (Node node = 1; node <= n; ++node) {
    const std::size_t count = producers[node - 1];
    if (count == 0) {
      report.errors.push_back({StructureIssue::Kind::kMissingOutput, node,
                               "node " + std::to_string(node) +
                                   " is not the output of any gate"});
    } else if (count > 1) {
      report.errors.push_back({StructureIssue::Kind::kDuplicateOutput, node,
                               "node " + std::to_string(node) +
                                   " is the output of " +
                                   std::to_string(count) + " gates"});
    }
    const NodeDegree d = report.degrees[node - 1];
    const bool ok = (d.in == 1 && d.out == 1) || (d.in == 2 && d.out == 1) ||
                    (d.in == 1 && d.out == 2);
    if (!ok) {
      report.warnings.push_back(
          {StructureIssue::Kind::kDegree, node,
           "node " + std::to_string(node) + " has (in, out) degree (" +
               std::to_string(d.in) + ", " + std::to_string(d.out) + ")"});
    }
  }
  return report;
}

Circuit PurifyToNPurify(const Circuit& circuit) {
  std::size_t next = circuit.node_count();
  std::vector<Gate> gates;
  for (const Gate& gate : circuit.gates()) {
    if (gate.kind != GateKind::kPurify) {
      gates.push_back(gate);
      continue;
    }
    const Node v_prime = ++next;
    const Node w_prime = ++next;
    gates.push_back(Gate::NPurify(gate.u, v_prime, w_prime));
    gates.push_back(Gate::Not(v_prime, gate.v));
    gates.push_back(Gate::Not(w_prime, gate.w));
  }
  return Circuit(next, std::move(gates));
}

std::vector<Assignment> BruteForceSolve(const Circuit& circuit,
                                        std::size_t max_nodes) {
  const StructureReport structure = ValidateStructure(circuit);
  if (!structure.valid()) {
    throw std::invalid_argument("invalid circuit structure: " +
                                structure.ToString());
  }
  const std::size_t n = circuit.node_count();
  if (n > max_nodes) {
    throw std::length_error("circuit has " + std::to_string(n) +
                            " nodes; brute force is limited to " +
                            std::to_string(max_nodes));
  }
  std::vector<Assignment> solutions;
  std::vector<Logic> digits(n, Logic::kZero);
  Assignment current(digits);
  for (;;) {
    if (CheckCircuit(circuit, current)) solutions.push_back(current);
    // Odometer increment with node n least significant.
    std::size_t pos = n;
    while (pos > 0) {
      const Logic d = current[pos];
      if (d != Logic::kBot) {
        current.Set(pos, static_cast<Logic>(static_cast<int>(d) + 1));
        break;
      }
      current.Set(pos, Logic::kZero);
      --pos;
    }
    if (pos == 0) break;
  }
  return solutions;
}

}  // namespace pacing
