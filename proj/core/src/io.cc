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

#include "pacing/io.h"

#include <cstdint>
#include <limits>
#include <set>
#include <utility>

#include "json.hpp"

namespace pacing {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kIndent = 2;

Json Parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string Dump(const Json& doc) { return doc.dump(kIndent) + "\n"; }

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return *it;
}

std::size_t Index(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::string String(const Json& value, const char* what) {
  if (!value.is_string()) {
    throw ParseError(std::string(what) + " must be a string");
  }
  return value.get<std::string>();
}

Rational ToRational(const Json& value, const char* what, bool decimals) {
  const std::string text = String(value, what);
  try {
    return decimals ? ParseRationalOrDecimal(text) : ParseRational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Json FromRational(const Rational& value) { return FormatRational(value); }

const Json& Array(const Json& value, const char* what) {
  if (!value.is_array()) {
    throw ParseError(std::string(what) + " must be an array");
  }
  return value;
}

std::vector<std::string> Labels(const Json& value, const char* what) {
  std::vector<std::string> labels;
  for (const Json& label : Array(value, what)) {
    labels.push_back(String(label, what));
  }
  return labels;
}

Json ParamsJson(const ApproxParams& params) {
  Json doc = Json::object();
  doc["notion"] = NotionName(params.notion());
  doc["gamma"] = FromRational(params.gamma());
  doc["sigma"] = FromRational(params.sigma());
  doc["tau"] = FromRational(params.tau());
  return doc;
}

ApproxParams ParamsFrom(const Json& doc) {
  const std::string notion = String(Field(doc, "notion"), "notion");
  auto tolerance = [&](const char* key) {
    return doc.contains(key) ? ToRational(doc[key], key, false) : Rational(0);
  };
  const Rational gamma = tolerance("gamma");
  const Rational sigma = tolerance("sigma");
  const Rational tau = tolerance("tau");
  try {
    if (notion == "exact") {
      if (gamma != 0 || sigma != 0 || tau != 0) {
        throw ParseError("exact params must have zero tolerances");
      }
      return ApproxParams::Exact();
    }
    if (notion == "gamma") {
      if (sigma != 0 || tau != 0) {
        throw ParseError("gamma params must have sigma = tau = 0");
      }
      return ApproxParams::Gamma(gamma);
    }
    if (notion == "sigma-gamma-tau") {
      return ApproxParams::SigmaGammaTau(sigma, gamma, tau);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown notion '" + notion + "'");
}

Json NodeJson(Node node) { return node == 0 ? Json(nullptr) : Json(node); }

Variant VariantFrom(const std::string& name) {
  if (name == "main") return Variant::kMain;
  if (name == "weak") return Variant::kWeak;
  throw ParseError("unknown variant '" + name + "'");
}

std::vector<std::pair<Node, std::string>> NodeLabels(const Json& doc,
                                                     const char* what) {
  if (!doc.is_object()) {
    throw ParseError(std::string(what) + " must be an object");
  }
  std::vector<std::pair<Node, std::string>> out;
  for (const auto& [key, label] : doc.items()) {
    std::size_t consumed = 0;
    unsigned long node = 0;
    try {
      node = std::stoul(key, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != key.size() || node == 0) {
      throw ParseError(std::string(what) + " key '" + key +
                       "' is not a positive node number");
    }
    out.emplace_back(node, String(label, what));
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1].first >= out[i].first) {
      throw ParseError(std::string(what) +
                       " keys must be distinct and ascending");
    }
  }
  return out;
}

Json AlphaJson(const PacingGame& game, const MultiplierProfile& alpha) {
  Json doc = Json::object();
  for (BuyerIndex i = 0; i < alpha.size(); ++i) {
    doc[game.buyer_label(i)] = FromRational(alpha[i]);
  }
  return doc;
}

std::map<std::string, Rational> AlphaMap(const Json& doc) {
  if (!doc.is_object()) throw ParseError("alpha must be an object");
  std::map<std::string, Rational> out;
  for (const auto& [label, value] : doc.items()) {
    if (!out.emplace(label, ToRational(value, "alpha", false)).second) {
      throw ParseError("duplicate multiplier for '" + label + "'");
    }
  }
  return out;
}

}  // namespace

std::string SerializeGame(const PacingGame& game) {
  Json doc = Json::object();
  doc["n"] = game.num_buyers();
  doc["m"] = game.num_goods();
  Json budgets = Json::array();
  for (const Rational& b : game.budgets()) budgets.push_back(FromRational(b));
  doc["budgets"] = std::move(budgets);
  Json values = Json::array();
  for (const ValueEntry& e : game.entries()) {
    Json entry = Json::object();
    entry["buyer"] = e.buyer;
    entry["good"] = e.good;
    entry["value"] = FromRational(e.value);
    values.push_back(std::move(entry));
  }
  doc["values"] = std::move(values);
  if (game.has_labels()) {
    Json labels = Json::object();
    labels["buyers"] = Json(std::vector<std::string>(
        game.buyer_labels().begin(), game.buyer_labels().end()));
    labels["goods"] = Json(std::vector<std::string>(
        game.good_labels().begin(), game.good_labels().end()));
    doc["labels"] = std::move(labels);
  }
  return Dump(doc);
}

PacingGame ParseGame(std::string_view text) {
  const Json doc = Parse(text);
  const std::size_t n = Index(Field(doc, "n"), "n");
  const std::size_t m = Index(Field(doc, "m"), "m");
  std::vector<Rational> budgets;
  for (const Json& b : Array(Field(doc, "budgets"), "budgets")) {
    budgets.push_back(ToRational(b, "budget", true));
  }
  if (budgets.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " budgets, got " +
                     std::to_string(budgets.size()));
  }
  std::vector<ValueEntry> values;
  for (const Json& e : Array(Field(doc, "values"), "values")) {
    values.push_back({Index(Field(e, "buyer"), "buyer"),
                      Index(Field(e, "good"), "good"),
                      ToRational(Field(e, "value"), "value", true)});
  }
  std::vector<std::string> buyer_labels;
  std::vector<std::string> good_labels;
  if (doc.contains("labels")) {
    const Json& labels = doc["labels"];
    buyer_labels = Labels(Field(labels, "buyers"), "buyer labels");
    good_labels = Labels(Field(labels, "goods"), "good labels");
  }
  try {
    return PacingGame(n, m, std::move(budgets), std::move(values),
                      std::move(buyer_labels), std::move(good_labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid game: ") + e.what());
  }
}

std::string SerializeCircuit(const Circuit& circuit) {
  Json doc = Json::object();
  doc["nodes"] = circuit.node_count();
  Json gates = Json::array();
  for (const Gate& gate : circuit.gates()) {
    Json g = Json::object();
    g["kind"] = GateKindName(gate.kind);
    g["u"] = gate.u;
    g["v"] = gate.v;
    g["w"] = NodeJson(gate.w);
    gates.push_back(std::move(g));
  }
  doc["gates"] = std::move(gates);
  return Dump(doc);
}

Circuit ParseCircuit(std::string_view text) {
  const Json doc = Parse(text);
  const std::size_t nodes = Index(Field(doc, "nodes"), "nodes");
  std::vector<Gate> gates;
  for (const Json& g : Array(Field(doc, "gates"), "gates")) {
    const std::string name = String(Field(g, "kind"), "kind");
    const std::optional<GateKind> kind = ParseGateKind(name);
    if (!kind) throw ParseError("unknown gate kind '" + name + "'");
    Gate gate{*kind, Index(Field(g, "u"), "u"), Index(Field(g, "v"), "v"), 0};
    const bool has_w = g.contains("w") && !g["w"].is_null();
    if (*kind == GateKind::kNot) {
      if (has_w) throw ParseError("NOT gates take no w");
    } else {
      if (!has_w) throw ParseError(name + " gates need w");
      gate.w = Index(g["w"], "w");
    }
    gates.push_back(gate);
  }
  try {
    return Circuit(nodes, std::move(gates));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid circuit: ") + e.what());
  }
}

std::string SerializeMapping(const ReductionMapping& mapping) {
  Json doc = Json::object();
  doc["variant"] = VariantName(mapping.variant);
  doc["gamma"] = FromRational(mapping.gamma);
  auto node_labels = [](const auto& pairs) {
    Json obj = Json::object();
    for (const auto& [node, label] : pairs) obj[std::to_string(node)] = label;
    return obj;
  };
  doc["node_buyer"] = node_labels(mapping.node_buyer);
  doc["aux_buyer"] = node_labels(mapping.aux_buyer);
  Json gate_goods = Json::array();
  for (const auto& goods : mapping.gate_goods) gate_goods.push_back(goods);
  doc["gate_goods"] = std::move(gate_goods);
  return Dump(doc);
}

ReductionMapping ParseMapping(std::string_view text) {
  const Json doc = Parse(text);
  ReductionMapping mapping;
  mapping.variant = VariantFrom(String(Field(doc, "variant"), "variant"));
  mapping.gamma = ToRational(Field(doc, "gamma"), "gamma", false);
  if (mapping.variant == Variant::kMain) {
    try {
      ReductionParams::Create(mapping.gamma);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  mapping.node_buyer = NodeLabels(Field(doc, "node_buyer"), "node_buyer");
  mapping.aux_buyer = NodeLabels(Field(doc, "aux_buyer"), "aux_buyer");
  for (const Json& goods : Array(Field(doc, "gate_goods"), "gate_goods")) {
    mapping.gate_goods.push_back(Labels(goods, "gate_goods"));
  }
  return mapping;
}

std::string SerializeParams(const ApproxParams& params) {
  return Dump(ParamsJson(params));
}

ApproxParams ParseParams(std::string_view text) {
  return ParamsFrom(Parse(text));
}

std::string SerializeEquilibria(const PacingGame& game,
                                std::span<const EquilibriumRecord> records) {
  Json doc = Json::array();
  for (const EquilibriumRecord& r : records) {
    if (r.equilibrium.alpha.size() != game.num_buyers()) {
      throw std::invalid_argument("profile size does not match the game");
    }
    Json e = Json::object();
    e["alpha"] = AlphaJson(game, r.equilibrium.alpha);
    Json x = Json::array();
    for (const auto& [key, value] : r.equilibrium.x.entries()) {
      Json entry = Json::object();
      entry["buyer"] = key.first;
      entry["good"] = key.second;
      entry["value"] = FromRational(value);
      x.push_back(std::move(entry));
    }
    e["x"] = std::move(x);
    e["params"] = ParamsJson(r.params);
    e["verified"] = r.verified;
    doc.push_back(std::move(e));
  }
  return Dump(doc);
}

std::vector<EquilibriumRecord> ParseEquilibria(const PacingGame& game,
                                               std::string_view text) {
  const Json doc = Parse(text);
  std::map<std::string, BuyerIndex> buyer_of;
  for (BuyerIndex i = 0; i < game.num_buyers(); ++i) {
    buyer_of.emplace(game.buyer_label(i), i);
  }
  std::vector<EquilibriumRecord> out;
  for (const Json& e : Array(doc, "equilibrium list")) {
    const std::map<std::string, Rational> alpha =
        AlphaMap(Field(e, "alpha"));
    std::vector<Rational> values(game.num_buyers());
    std::vector<bool> seen(game.num_buyers(), false);
    for (const auto& [label, value] : alpha) {
      const auto it = buyer_of.find(label);
      if (it == buyer_of.end()) {
        throw ParseError("unknown buyer '" + label + "'");
      }
      values[it->second] = value;
      seen[it->second] = true;
    }
    for (BuyerIndex i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        throw ParseError("no multiplier for buyer '" + game.buyer_label(i) +
                         "'");
      }
    }
    EquilibriumRecord record;
    record.equilibrium.alpha = MultiplierProfile(std::move(values));
    std::set<Allocation::Key> keys;
    for (const Json& entry : Array(Field(e, "x"), "x")) {
      const BuyerIndex buyer = Index(Field(entry, "buyer"), "buyer");
      const GoodIndex good = Index(Field(entry, "good"), "good");
      if (buyer >= game.num_buyers() || good >= game.num_goods()) {
        throw ParseError("allocation entry out of range");
      }
      if (!keys.insert({buyer, good}).second) {
        throw ParseError("duplicate allocation entry");
      }
      record.equilibrium.x.Set(buyer, good,
                               ToRational(Field(entry, "value"), "x", false));
    }
    record.params = e.contains("params") ? ParamsFrom(e["params"])
                                         : ApproxParams::Exact();
    if (e.contains("verified")) {
      if (!e["verified"].is_boolean()) {
        throw ParseError("verified must be a boolean");
      }
      record.verified = e["verified"].get<bool>();
    }
    out.push_back(std::move(record));
  }
  return out;
}

std::vector<std::map<std::string, Rational>> ParseEquilibriumMultipliers(
    std::string_view text) {
  const Json doc = Parse(text);
  std::vector<std::map<std::string, Rational>> out;
  for (const Json& e : Array(doc, "equilibrium list")) {
    out.push_back(AlphaMap(Field(e, "alpha")));
  }
  return out;
}

}  // namespace pacing
