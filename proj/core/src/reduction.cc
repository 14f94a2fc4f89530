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

#include "pacing/reduction.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace pacing {
namespace {

// Per-output gadget data: the budget of b_o and the two values on g_o.
struct OutputGadget {
  Node node;
  Rational budget;
  Rational b_value;
  Rational c_value;
};

// Everything that distinguishes the two gadget families.
struct GadgetFamily {
  Variant variant;
  Rational gamma;
  // Value of an edge good g_(u,o) to b_o; b_u always values it at 1.
  Rational edge_value;
  std::function<std::vector<OutputGadget>(const Gate&)> outputs;
};

std::string BuyerB(Node v) { return "b_" + std::to_string(v); }
std::string BuyerC(Node v) { return "c_" + std::to_string(v); }
std::string GoodG(Node v) { return "g_" + std::to_string(v); }
std::string GoodEdge(Node u, Node v) {
  return "g_(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void RequireCompilable(const Circuit& circuit) {
  const StructureReport structure = ValidateStructure(circuit);
  if (!structure.valid()) {
    throw std::invalid_argument("cannot compile an invalid circuit: " +
                                structure.ToString());
  }
  for (const Gate& gate : circuit.gates()) {
    if (gate.kind == GateKind::kPurify) {
      throw std::invalid_argument(
          "PURIFY gates must be rewritten with PurifyToNPurify before "
          "compiling");
    }
  }
}

ReductionArtifact Assemble(const Circuit& circuit, const GadgetFamily& family) {
  RequireCompilable(circuit);
  const std::size_t n = circuit.node_count();

  std::vector<Rational> budgets(n);
  std::vector<std::string> buyer_labels;
  std::vector<std::string> good_labels;
  std::vector<ValueEntry> values;
  std::vector<BuyerIndex> node_buyer(n);
  std::vector<BuyerIndex> aux_buyer(n);
  std::vector<GoodIndex> node_good(n);
  std::vector<std::vector<GoodIndex>> gate_goods;
  std::vector<EdgeGood> edge_goods;

  for (Node v = 1; v <= n; ++v) {
    node_buyer[v - 1] = v - 1;
    buyer_labels.push_back(BuyerB(v));
  }
  for (const Gate& gate : circuit.gates()) {
    std::vector<GoodIndex> goods;
    const std::vector<OutputGadget> outputs = family.outputs(gate);
    for (const OutputGadget& out : outputs) {
      const BuyerIndex b = node_buyer[out.node - 1];
      const BuyerIndex c = budgets.size();
      budgets[b] = out.budget;
      budgets.push_back(kAuxBudget);
      buyer_labels.push_back(BuyerC(out.node));
      aux_buyer[out.node - 1] = c;

      const GoodIndex g = good_labels.size();
      good_labels.push_back(GoodG(out.node));
      node_good[out.node - 1] = g;
      values.push_back({b, g, out.b_value});
      values.push_back({c, g, out.c_value});
      goods.push_back(g);
    }
    for (Node in : gate.inputs()) {
      for (const OutputGadget& out : outputs) {
        const GoodIndex g = good_labels.size();
        good_labels.push_back(GoodEdge(in, out.node));
        values.push_back({node_buyer[in - 1], g, 1});
        values.push_back({node_buyer[out.node - 1], g, family.edge_value});
        edge_goods.push_back({in, out.node, g});
        goods.push_back(g);
      }
    }
    gate_goods.push_back(std::move(goods));
  }

  const std::size_t num_buyers = budgets.size();
  const std::size_t num_goods = good_labels.size();
  PacingGame game(num_buyers, num_goods, std::move(budgets), std::move(values),
                  std::move(buyer_labels), std::move(good_labels));
  return ReductionArtifact{family.variant,        family.gamma,
                           circuit,               std::move(game),
                           std::move(node_buyer), std::move(aux_buyer),
                           std::move(node_good),  std::move(gate_goods),
                           std::move(edge_goods)};
}

void RequireVariant(const ReductionArtifact& artifact, Variant variant) {
  if (artifact.variant != variant) {
    throw std::invalid_argument("expected a " + VariantName(variant) +
                                " artifact, got " +
                                VariantName(artifact.variant));
  }
}

void RequireCoverage(const ReductionArtifact& artifact,
                     const MultiplierProfile& alpha) {
  if (alpha.size() != artifact.game.num_buyers()) {
    throw std::invalid_argument("profile does not cover every buyer");
  }
}

}  // namespace

std::string VariantName(Variant variant) {
  return variant == Variant::kMain ? "main" : "weak";
}

ReductionParams ReductionParams::Create(const Rational& gamma) {
  if (gamma < 0 || gamma >= MakeRational(1, 3)) {
    throw std::invalid_argument("gamma must lie in [0, 1/3), got " +
                                FormatRational(gamma));
  }
  ReductionParams params;
  params.gamma_ = gamma;
  params.delta_ = MakeRational(1, 3) - gamma;
  params.kappa_ = 3 * params.delta_ / 2;
  return params;
}

ReductionArtifact CompileMain(const Circuit& circuit, const Rational& gamma) {
  const ReductionParams p = ReductionParams::Create(gamma);
  const Rational delta = p.delta();
  const Rational kappa = p.kappa();
  GadgetFamily family{Variant::kMain, gamma, 1 / kappa + 1, nullptr};
  family.outputs = [=](const Gate& gate) -> std::vector<OutputGadget> {
    auto gadget = [&](Node node, const Rational& budget, const Rational& c) {
      return OutputGadget{node, budget, c / kappa, c};
    };
    switch (gate.kind) {
      case GateKind::kNot:
        return {gadget(gate.v, 2, 1 + delta)};
      case GateKind::kNor:
        return {gadget(gate.w, 3, 2 - delta)};
      case GateKind::kNPurify:
        return {gadget(gate.v, MakeRational(3, 2), 1 - delta / 2),
                gadget(gate.w, MakeRational(3, 2),
                       MakeRational(1, 2) + delta / 2)};
      case GateKind::kPurify:
        break;
    }
    throw std::invalid_argument("unsupported gate");
  };
  return Assemble(circuit, family);
}

ReductionArtifact CompileWeak(const Circuit& circuit) {
  GadgetFamily family{Variant::kWeak, kWeakTolerance, 1000, nullptr};
  family.outputs = [](const Gate& gate) -> std::vector<OutputGadget> {
    switch (gate.kind) {
      case GateKind::kNot:
        return {{gate.v, MakeRational(3, 2), 9, 1}};
      case GateKind::kNor:
        return {{gate.w, MakeRational(5, 2), 18, 2}};
      case GateKind::kNPurify:
        return {{gate.v, MakeRational(9, 5), MakeRational(27, 2),
                 MakeRational(3, 2)},
                {gate.w, MakeRational(14, 5), 18, 2}};
      case GateKind::kPurify:
        break;
    }
    throw std::invalid_argument("unsupported gate");
  };
  return Assemble(circuit, family);
}

ApproxParams TargetParams(const ReductionArtifact& artifact) {
  if (artifact.variant == Variant::kWeak) {
    return ApproxParams::SigmaGammaTau(kWeakTolerance, kWeakTolerance,
                                       kWeakTolerance);
  }
  return artifact.gamma == 0 ? ApproxParams::Exact()
                             : ApproxParams::Gamma(artifact.gamma);
}

Logic DecodeMainMultiplier(const Rational& alpha, const Rational& kappa) {
  if (alpha == kappa) return Logic::kZero;
  if (alpha == 1) return Logic::kOne;
  return Logic::kBot;
}

Logic DecodeWeakMultiplier(const Rational& alpha) {
  if (alpha >= kWeakZeroLow && alpha <= kWeakZeroHigh) return Logic::kZero;
  if (alpha >= kWeakOneLow && alpha <= 1) return Logic::kOne;
  return Logic::kBot;
}

Assignment DecodeMain(const ReductionArtifact& artifact,
                      const MultiplierProfile& alpha) {
  RequireVariant(artifact, Variant::kMain);
  RequireCoverage(artifact, alpha);
  const Rational kappa = artifact.params().kappa();
  Assignment x(artifact.circuit.node_count());
  for (Node v = 1; v <= x.size(); ++v) {
    x.Set(v, DecodeMainMultiplier(alpha[artifact.b(v)], kappa));
  }
  return x;
}

Assignment DecodeWeak(const ReductionArtifact& artifact,
                      const MultiplierProfile& alpha) {
  RequireVariant(artifact, Variant::kWeak);
  RequireCoverage(artifact, alpha);
  Assignment x(artifact.circuit.node_count());
  for (Node v = 1; v <= x.size(); ++v) {
    x.Set(v, DecodeWeakMultiplier(alpha[artifact.b(v)]));
  }
  return x;
}

Assignment Decode(const ReductionArtifact& artifact,
                  const MultiplierProfile& alpha) {
  return artifact.variant == Variant::kMain ? DecodeMain(artifact, alpha)
                                            : DecodeWeak(artifact, alpha);
}

Assignment DecodeMainNearest(const ReductionArtifact& artifact,
                             const MultiplierProfile& alpha,
                             const Rational& epsilon) {
  RequireVariant(artifact, Variant::kMain);
  RequireCoverage(artifact, alpha);
  const Rational kappa = artifact.params().kappa();
  Assignment x(artifact.circuit.node_count());
  for (Node v = 1; v <= x.size(); ++v) {
    const Rational& a = alpha[artifact.b(v)];
    if (abs(a - kappa) <= epsilon) {
      x.Set(v, Logic::kZero);
    } else if (abs(a - 1) <= epsilon) {
      x.Set(v, Logic::kOne);
    }
  }
  return x;
}

ReductionMapping MappingOf(const ReductionArtifact& artifact) {
  ReductionMapping mapping;
  mapping.variant = artifact.variant;
  mapping.gamma = artifact.gamma;
  const PacingGame& game = artifact.game;
  for (Node v = 1; v <= artifact.circuit.node_count(); ++v) {
    mapping.node_buyer.emplace_back(v, game.buyer_label(artifact.b(v)));
    mapping.aux_buyer.emplace_back(v, game.buyer_label(artifact.c(v)));
  }
  for (const auto& goods : artifact.gate_goods) {
    std::vector<std::string> labels;
    for (GoodIndex g : goods) labels.push_back(game.good_label(g));
    mapping.gate_goods.push_back(std::move(labels));
  }
  return mapping;
}

Assignment DecodeLabeled(const ReductionMapping& mapping,
                         const std::map<std::string, Rational>& alpha) {
  Node max_node = 0;
  for (const auto& [node, label] : mapping.node_buyer) {
    max_node = std::max(max_node, node);
  }
  Assignment x(max_node);
  const Rational kappa = mapping.variant == Variant::kMain
                             ? ReductionParams::Create(mapping.gamma).kappa()
                             : Rational(0);
  for (const auto& [node, label] : mapping.node_buyer) {
    const auto it = alpha.find(label);
    if (it == alpha.end()) {
      throw std::invalid_argument("no multiplier for buyer '" + label + "'");
    }
    x.Set(node, mapping.variant == Variant::kMain
                    ? DecodeMainMultiplier(it->second, kappa)
                    : DecodeWeakMultiplier(it->second));
  }
  return x;
}

}  // namespace pacing
