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

#include "cli.h"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pacing/circuit.h"
#include "pacing/io.h"
#include "pacing/reduction.h"
#include "pacing/solver.h"
#include "pacing/verify.h"

namespace pacing::cli {
namespace {

// Raised for bad flags or unreadable inputs; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string variant;
  std::string gamma;
  std::string sigma;
  std::string tau;
  std::string grid;
  std::optional<std::size_t> generic_grid;
  std::optional<std::size_t> limit;
  std::string out;
  std::string mapping;
  bool refine = false;
  std::vector<std::string> inputs;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

Rational FlagRational(const std::string& flag, const std::string& text) {
  try {
    return ParseRational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

std::optional<Variant> FlagVariant(const Options& o) {
  if (o.variant.empty()) return std::nullopt;
  if (o.variant == "main") return Variant::kMain;
  if (o.variant == "weak") return Variant::kWeak;
  throw UsageError("--variant must be main or weak, got '" + o.variant + "'");
}

bool HasNotionFlags(const Options& o) {
  return !o.variant.empty() || !o.gamma.empty() || !o.sigma.empty() ||
         !o.tau.empty();
}

// Explicit notion from the flags. sigma and tau belong to the weak mode,
// which defaults every tolerance to 1/20.
ApproxParams NotionFromFlags(const Options& o) {
  const std::optional<Variant> variant = FlagVariant(o);
  try {
    if (variant == Variant::kWeak) {
      auto tol = [&](const char* flag, const std::string& text) {
        return text.empty() ? kWeakTolerance : FlagRational(flag, text);
      };
      return ApproxParams::SigmaGammaTau(tol("sigma", o.sigma),
                                         tol("gamma", o.gamma),
                                         tol("tau", o.tau));
    }
    if (!o.sigma.empty() || !o.tau.empty()) {
      throw UsageError("--sigma and --tau require --variant weak");
    }
    const Rational gamma = o.gamma.empty() ? 0 : FlagRational("gamma", o.gamma);
    return gamma == 0 ? ApproxParams::Exact() : ApproxParams::Gamma(gamma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Rational> FlagGrid(const std::string& text) {
  std::vector<Rational> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) grid.push_back(FlagRational("grid", item));
  return grid;
}

std::string Tuple(const Assignment& x) {
  std::string out = "(";
  for (Node v = 1; v <= x.size(); ++v) {
    if (v > 1) out += ",";
    out += LogicChar(x[v]);
  }
  return out + ")";
}

Circuit LoadCircuit(const std::string& path, std::ostream& err) {
  Circuit circuit = ParseCircuit(ReadFile(path));
  bool has_purify = false;
  for (const Gate& gate : circuit.gates()) {
    has_purify |= gate.kind == GateKind::kPurify;
  }
  if (has_purify) {
    err << "note: rewriting PURIFY gates as NPURIFY + NOT\n";
    circuit = PurifyToNPurify(circuit);
  }
  return circuit;
}

// Prints the structure report; true when the circuit can be compiled.
bool ReportStructure(const Circuit& circuit, std::ostream& err) {
  const StructureReport report = ValidateStructure(circuit);
  if (!report.valid() || !report.warnings.empty()) {
    err << report.ToString() << "\n";
  }
  return report.valid();
}

ReductionArtifact CompileFromFlags(const Circuit& circuit, const Options& o) {
  const Variant variant = FlagVariant(o).value_or(Variant::kMain);
  if (variant == Variant::kWeak) {
    if (!o.gamma.empty()) {
      throw UsageError("the weak gadgets have fixed constants; drop --gamma");
    }
    return CompileWeak(circuit);
  }
  const Rational gamma = o.gamma.empty() ? 0 : FlagRational("gamma", o.gamma);
  try {
    ReductionParams::Create(gamma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return CompileMain(circuit, gamma);
}

SearchConfig ConfigFromFlags(const Options& o,
                             std::vector<Rational> default_grid) {
  if (!o.grid.empty() && o.generic_grid) {
    throw UsageError("--grid and --generic-grid are mutually exclusive");
  }
  SearchConfig config;
  if (o.generic_grid) {
    if (*o.generic_grid == 0) throw UsageError("--generic-grid must be >= 1");
    config.generic_denominator = *o.generic_grid;
  } else if (!o.grid.empty()) {
    config.grid = FlagGrid(o.grid);
  } else {
    config.grid = std::move(default_grid);
  }
  if (o.limit) config.limit = *o.limit;
  return config;
}

void Emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    WriteFile(o.out, text);
  }
}

int Compile(const Options& o, std::ostream& out, std::ostream& err) {
  const Circuit circuit = LoadCircuit(o.inputs.at(0), err);
  if (!ReportStructure(circuit, err)) return kExitInvalid;
  const ReductionArtifact artifact = CompileFromFlags(circuit, o);
  std::string prefix = o.out.empty() ? o.inputs[0] : o.out;
  if (o.out.empty() && prefix.ends_with(".json")) {
    prefix.resize(prefix.size() - 5);
  }
  WriteFile(prefix + ".game.json", SerializeGame(artifact.game));
  WriteFile(prefix + ".mapping.json",
            SerializeMapping(MappingOf(artifact)));
  out << "compiled " << VariantName(artifact.variant) << " artifact: "
      << artifact.game.num_buyers() << " buyers, "
      << artifact.game.num_goods() << " goods -> " << prefix
      << ".game.json, " << prefix << ".mapping.json\n";
  return kExitOk;
}

int VerifyCommand(const Options& o, std::ostream& out) {
  const PacingGame game = ParseGame(ReadFile(o.inputs.at(0)));
  const std::vector<EquilibriumRecord> records =
      ParseEquilibria(game, ReadFile(o.inputs.at(1)));
  const std::optional<ApproxParams> forced =
      HasNotionFlags(o) ? std::optional(NotionFromFlags(o)) : std::nullopt;
  bool all_valid = true;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const Equilibrium& e = records[k].equilibrium;
    const VerificationReport report =
        Verify(game, e.alpha, e.x, forced.value_or(records[k].params));
    all_valid &= report.valid();
    out << "equilibrium " << k << ": " << report.ToString() << "\n";
  }
  return all_valid ? kExitOk : kExitInvalid;
}

int Solve(const Options& o, std::ostream& out, std::ostream& err) {
  const PacingGame game = ParseGame(ReadFile(o.inputs.at(0)));
  std::optional<ReductionMapping> mapping;
  if (!o.mapping.empty()) mapping = ParseMapping(ReadFile(o.mapping));

  ApproxParams params = ApproxParams::Exact();
  std::vector<Rational> default_grid;
  std::vector<BuyerIndex> pinned;
  if (mapping) {
    std::map<std::string, BuyerIndex> buyer_of;
    for (BuyerIndex i = 0; i < game.num_buyers(); ++i) {
      buyer_of.emplace(game.buyer_label(i), i);
    }
    for (const auto& [node, label] : mapping->aux_buyer) {
      const auto it = buyer_of.find(label);
      if (it == buyer_of.end()) {
        throw UsageError("mapping buyer '" + label + "' is not in the game");
      }
      pinned.push_back(it->second);
    }
    if (mapping->variant == Variant::kWeak) {
      params = ApproxParams::SigmaGammaTau(kWeakTolerance, kWeakTolerance,
                                           kWeakTolerance);
      default_grid = WeakGrid();
    } else {
      const ReductionParams rp = ReductionParams::Create(mapping->gamma);
      if (rp.gamma() != 0) params = ApproxParams::Gamma(rp.gamma());
      default_grid = MainGrid(rp, o.refine);
    }
  } else if (o.grid.empty() && !o.generic_grid) {
    throw UsageError("solve needs --grid or --generic-grid without --mapping");
  }
  if (HasNotionFlags(o)) params = NotionFromFlags(o);

  SearchConfig config = ConfigFromFlags(o, std::move(default_grid));
  config.pinned = std::move(pinned);
  const std::vector<Equilibrium> found = GridSearch(game, params, config);
  std::vector<EquilibriumRecord> records;
  for (const Equilibrium& e : found) records.push_back({e, params, true});
  Emit(o, SerializeEquilibria(game, records), out);
  if (found.empty()) {
    err << "none found on grid\n";
  } else {
    err << found.size() << " equilibria found on grid\n";
  }
  return kExitOk;
}

int DecodeCommand(const Options& o, std::ostream& out) {
  const ReductionMapping mapping = ParseMapping(ReadFile(o.inputs.at(0)));
  const auto profiles = ParseEquilibriumMultipliers(ReadFile(o.inputs.at(1)));
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    Assignment x;
    try {
      x = DecodeLabeled(mapping, profiles[k]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    out << "equilibrium " << k << ": " << Tuple(x) << "\n";
  }
  return kExitOk;
}

int Roundtrip(const Options& o, std::ostream& out, std::ostream& err) {
  const Circuit circuit = LoadCircuit(o.inputs.at(0), err);
  if (!ReportStructure(circuit, err)) return kExitInvalid;
  const ReductionArtifact artifact = CompileFromFlags(circuit, o);
  if (!o.sigma.empty() || !o.tau.empty()) {
    throw UsageError("roundtrip uses the artifact's target notion");
  }
  const ApproxParams params = TargetParams(artifact);
  const SearchConfig config = ConfigFromFlags(
      o, artifact.variant == Variant::kMain
             ? MainGrid(artifact.params(), o.refine)
             : WeakGrid());
  const std::vector<Equilibrium> found = GridSearch(artifact, params, config);
  const LemmaReport lemmas = LemmaSuite(artifact, found);

  bool ok = lemmas.passed();
  std::set<Assignment> solutions;
  for (std::size_t k = 0; k < found.size(); ++k) {
    const Assignment x = Decode(artifact, found[k].alpha);
    const bool satisfied = CheckCircuit(circuit, x);
    ok &= satisfied;
    solutions.insert(x);
    out << "equilibrium " << k << ": decodes to " << Tuple(x)
        << (satisfied ? "" : " (NOT satisfying)") << "\n";
  }
  out << VariantName(artifact.variant) << ", " << NotionName(params.notion())
      << ": " << found.size() << " equilibria on grid, lemma checks "
      << lemmas.checks << ", failures " << lemmas.failures.size() << "\n";
  if (!lemmas.passed()) out << lemmas.ToString() << "\n";
  if (found.empty()) out << "none found on grid\n";
  out << "decoded solutions: {";
  bool first = true;
  for (const Assignment& x : solutions) {
    out << (first ? "" : ",") << Tuple(x);
    first = false;
  }
  out << "}\n";
  return ok ? kExitOk : kExitInvalid;
}

int ValidateCircuit(const Options& o, std::ostream& out) {
  const Circuit circuit = ParseCircuit(ReadFile(o.inputs.at(0)));
  const StructureReport report = ValidateStructure(circuit);
  out << report.ToString() << "\n";
  return report.valid() ? kExitOk : kExitInvalid;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact second-price pacing games and circuit reductions",
               "pacing"};
  app.require_subcommand(1);
  Options o;

  auto notion_flags = [&o](CLI::App* cmd, bool with_tolerances) {
    cmd->add_option("--variant", o.variant, "main or weak");
    cmd->add_option("--gamma", o.gamma, "tolerance gamma as p/q");
    if (with_tolerances) {
      cmd->add_option("--sigma", o.sigma, "bid tolerance sigma (weak)");
      cmd->add_option("--tau", o.tau, "pacing tolerance tau (weak)");
    }
  };
  auto grid_flags = [&o](CLI::App* cmd) {
    cmd->add_option("--grid", o.grid, "comma-separated multipliers p/q,...");
    cmd->add_option("--generic-grid", o.generic_grid,
                    "every free buyer ranges over q/D, q = 0..D");
    cmd->add_option("--limit", o.limit, "maximum number of grid profiles");
    cmd->add_flag("--refine", o.refine, "add main-grid refinement points");
  };

  CLI::App* compile = app.add_subcommand("compile", "circuit -> game+mapping");
  compile->add_option("circuit", o.inputs, "circuit document")->required();
  notion_flags(compile, false);
  compile->add_option("--out", o.out, "output prefix");

  CLI::App* verify = app.add_subcommand("verify", "check equilibria");
  verify->add_option("paths", o.inputs, "game and equilibrium documents")
      ->required()
      ->expected(2);
  notion_flags(verify, true);

  CLI::App* solve = app.add_subcommand("solve", "grid equilibrium search");
  solve->add_option("game", o.inputs, "game document")->required();
  solve->add_option("--mapping", o.mapping, "mapping document");
  notion_flags(solve, true);
  grid_flags(solve);
  solve->add_option("--out", o.out, "equilibrium list path");

  CLI::App* decode = app.add_subcommand("decode", "equilibria -> assignments");
  decode->add_option("paths", o.inputs, "mapping and equilibrium documents")
      ->required()
      ->expected(2);

  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "compile, solve, decode and check");
  roundtrip->add_option("circuit", o.inputs, "circuit document")->required();
  notion_flags(roundtrip, true);
  grid_flags(roundtrip);

  CLI::App* validate =
      app.add_subcommand("validate-circuit", "structural checks");
  validate->add_option("circuit", o.inputs, "circuit document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compile->parsed()) return Compile(o, out, err);
    if (verify->parsed()) return VerifyCommand(o, out);
    if (solve->parsed()) return Solve(o, out, err);
    if (decode->parsed()) return DecodeCommand(o, out);
    if (roundtrip->parsed()) return Roundtrip(o, out, err);
    if (validate->parsed()) return ValidateCircuit(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pacing::cli
