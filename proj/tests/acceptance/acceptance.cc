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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails.
//
//   pacing_acceptance                 all criteria
//   pacing_acceptance --criterion 6   just one

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "builders.h"
#include "circuits.h"
#include "generators.h"
#include "json.hpp"
#include "oracle.h"
#include "pacing/allocation.h"
#include "pacing/circuit.h"
#include "pacing/io.h"
#include "pacing/reduction.h"
#include "pacing/solver.h"
#include "pacing/verify.h"

namespace pacing::acceptance {
namespace {

using testing::Q;

struct Outcome {
  bool pass = true;
  std::ostringstream summary;
  std::vector<std::string> details;

  // Records a failure; only the first few details are kept.
  void Fail(const std::string& detail) {
    pass = false;
    if (details.size() < 5) details.push_back(detail);
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 for unbounded
  std::function<void(Outcome&)> run;
};

// One-line gate list, e.g. "NOT(1->2) NOR(1,2->3)".
std::string Describe(const Circuit& c) {
  std::string out;
  for (const Gate& g : c.gates()) {
    if (!out.empty()) out += " ";
    const std::string u = std::to_string(g.u), v = std::to_string(g.v),
                      w = std::to_string(g.w);
    switch (g.kind) {
      case GateKind::kNot:
        out += "NOT(" + u + "->" + v + ")";
        break;
      case GateKind::kNor:
        out += "NOR(" + u + "," + v + "->" + w + ")";
        break;
      case GateKind::kPurify:
        out += "PURIFY(" + u + "->" + v + "," + w + ")";
        break;
      case GateKind::kNPurify:
        out += "NPURIFY(" + u + "->" + v + "," + w + ")";
        break;
    }
  }
  return out;
}

bool HasTieAtTop(const PacingGame& game, const MultiplierProfile& alpha) {
  for (GoodIndex j = 0; j < game.num_goods(); ++j) {
    const Rational h = HighestBid(game, alpha, j);
    if (h > 0 && SecondPrice(game, alpha, j) == h) return true;
  }
  return false;
}

void DefinitionFidelity(Outcome& out) {
  const auto doc =
      nlohmann::json::parse(testing::ReadFixture("definition_cases.json"));
  std::size_t cases = 0, ties = 0;
  for (const auto& c : doc["cases"]) {
    const std::string name = c["name"];
    const PacingGame game = ParseGame(c["game"].dump());
    if (game.num_buyers() > 3 || game.num_goods() > 3) {
      out.Fail(name + ": fixture exceeds 3 buyers or 3 goods");
    }
    std::vector<Rational> values;
    for (const auto& a : c["alpha"]) values.push_back(ParseRational(a.get<std::string>()));
    const MultiplierProfile alpha(std::move(values));
    Allocation x;
    for (const auto& e : c["x"]) {
      x.Set(e["buyer"], e["good"], ParseRational(e["value"].get<std::string>()));
    }
    ties += HasTieAtTop(game, alpha);
    const VerificationReport report =
        Verify(game, alpha, x, ApproxParams::Exact());
    std::multiset<std::string> expected, got;
    for (const auto& v : c["violations"]) {
      expected.insert(v["condition"].get<std::string>() + "/" +
                      (v.contains("buyer") ? v["buyer"].dump() : "-") + "/" +
                      (v.contains("good") ? v["good"].dump() : "-"));
    }
    for (const Violation& v : report.violations) {
      got.insert(ConditionTag(v.condition) + "/" +
                 (v.buyer ? std::to_string(*v.buyer) : "-") + "/" +
                 (v.good ? std::to_string(*v.good) : "-"));
    }
    if (report.valid() != c["valid"].get<bool>() || got != expected) {
      out.Fail(name + ": got " + report.ToString());
    }
    ++cases;
  }
  if (cases < 10) out.Fail("fewer than 10 fixtures");
  if (ties == 0) out.Fail("no fixture exercises h_j = p_j");
  out.summary << cases << " fixtures, " << ties << " with a tied top bid";
}

void RelaxationMonotonicity(Outcome& out) {
  std::mt19937_64 rng(20261014);
  std::size_t exact_valid = 0, gamma_valid = 0, violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const PacingGame game = testing::RandomGame(rng, 3, 3, 12);
    const MultiplierProfile alpha =
        testing::RandomProfile(rng, game.num_buyers(), 12);
    Allocation x = testing::RandomAllocation(rng, game, 12);
    // Half the triples use an exact witness when one exists, so the
    // implications are exercised on valid inputs.
    if (trial % 2 == 0) {
      if (auto w = AllocationFeasible(game, alpha, ApproxParams::Exact())) {
        x = *w;
      }
    }
    const bool exact = Verify(game, alpha, x, ApproxParams::Exact()).valid();
    exact_valid += exact;
    for (const char* g : {"1/100", "1/20"}) {
      const Rational gamma = Q(g);
      const bool approx =
          Verify(game, alpha, x, ApproxParams::Gamma(gamma)).valid();
      const bool sgt =
          Verify(game, alpha, x,
                 ApproxParams::SigmaGammaTau(Q("1/20"), gamma, Q("1/20")))
              .valid();
      gamma_valid += approx;
      if ((exact && !approx) || (approx && !sgt)) {
        ++violations;
        out.Fail("trial " + std::to_string(trial) + " at gamma " + g);
      }
    }
  }
  out.summary << "1000 triples, " << exact_valid << " exact-valid, "
              << gamma_valid << " gamma-valid checks, " << violations
              << " violations";
}

void FeasibilityOracleAgreement(Outcome& out) {
  const std::vector<Rational> value_grid = {0, Q("1/2"), 1, 2};
  const std::vector<Rational> budget_grid = {1, 10};
  std::size_t games = 0, checks = 0, feasible = 0, disagreements = 0;
  for (std::size_t m = 1; m <= 2; ++m) {
    const std::size_t cells = 2 * m;
    std::vector<std::size_t> digits(cells, 0);
    for (;;) {
      std::vector<std::vector<Rational>> v(2, std::vector<Rational>(m));
      for (std::size_t k = 0; k < cells; ++k) {
        v[k / m][k % m] = value_grid[digits[k]];
      }
      bool ok = true;
      for (std::size_t i = 0; i < 2; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < m; ++j) any |= v[i][j] > 0;
        ok &= any;
      }
      for (std::size_t j = 0; j < m; ++j) ok &= v[0][j] > 0 || v[1][j] > 0;
      for (const Rational& b0 : budget_grid) {
        for (const Rational& b1 : budget_grid) {
          if (!ok) continue;
          std::vector<ValueEntry> entries;
          for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
              if (v[i][j] > 0) entries.push_back({i, j, v[i][j]});
            }
          }
          const PacingGame game(2, m, {b0, b1}, entries);
          const testing::TinyGame tiny = testing::ToTiny(game);
          ++games;
          for (long a0 = 0; a0 <= 4; ++a0) {
            for (long a1 = 0; a1 <= 4; ++a1) {
              const MultiplierProfile alpha(
                  std::vector<Rational>{MakeRational(a0, 4), MakeRational(a1, 4)});
              const auto lp =
                  AllocationFeasible(game, alpha, ApproxParams::Exact());
              const auto dense = testing::DenseAllocationSearch(
                  tiny, {testing::Frac(a0, 4), testing::Frac(a1, 4)},
                  testing::TinyParams{}, 16);
              ++checks;
              feasible += lp.has_value();
              bool agree = lp.has_value() == dense.has_value();
              if (lp && !Verify(game, alpha, *lp, ApproxParams::Exact())
                             .valid()) {
                agree = false;
              }
              if (!agree) {
                ++disagreements;
                out.Fail("game " + SerializeGame(game) + " alpha (" +
                         FormatRational(alpha[0]) + ", " +
                         FormatRational(alpha[1]) + ")");
              }
            }
          }
        }
      }
      std::size_t k = cells;
      while (k > 0 && ++digits[k - 1] == value_grid.size()) digits[--k] = 0;
      if (k == 0) break;
    }
  }
  out.summary << games << " games, " << checks << " profiles, " << feasible
              << " feasible, " << disagreements << " disagreements";
}

std::map<std::pair<std::string, std::string>, Rational> LabeledValues(
    const PacingGame& game) {
  std::map<std::pair<std::string, std::string>, Rational> out;
  for (const ValueEntry& e : game.entries()) {
    out[{game.buyer_label(e.buyer), game.good_label(e.good)}] = e.value;
  }
  return out;
}

void GadgetConstants(Outcome& out) {
  const auto doc =
      nlohmann::json::parse(testing::ReadFixture("gadget_golden.json"));
  std::size_t cases = 0;
  for (const auto& c : doc["cases"]) {
    const std::string name = c["name"].get<std::string>() + "/" +
                             c["variant"].get<std::string>() + "/" +
                             c["gamma"].get<std::string>();
    const Circuit circuit = ParseCircuit(c["circuit"].dump());
    const ReductionArtifact a =
        c["variant"] == "main"
            ? CompileMain(circuit, ParseRational(c["gamma"].get<std::string>()))
            : CompileWeak(circuit);
    const PacingGame& g = a.game;
    bool same = g.num_buyers() == c["buyers"].size() &&
                g.num_goods() == c["goods"].size();
    for (BuyerIndex i = 0; same && i < g.num_buyers(); ++i) {
      same = g.buyer_label(i) == c["buyers"][i] &&
             FormatRational(g.budget(i)) == c["budgets"][i];
    }
    for (GoodIndex j = 0; same && j < g.num_goods(); ++j) {
      same = g.good_label(j) == c["goods"][j];
    }
    std::map<std::pair<std::string, std::string>, Rational> expected;
    for (const auto& v : c["values"]) {
      expected[{v[0], v[1]}] = ParseRational(v[2].get<std::string>());
    }
    if (!same || LabeledValues(g) != expected) out.Fail(name);
    ++cases;
  }

  // The stated literals at gamma = 0 (delta = 1/3, kappa = 1/2).
  struct Literal {
    Circuit circuit;
    std::string buyer, good, value;
  };
  const Circuit nots(2, {Gate::Not(1, 2), Gate::Not(2, 1)});
  const Circuit nor(3, {Gate::Nor(1, 2, 3), Gate::Not(3, 1), Gate::Not(1, 2)});
  const Circuit npurify(5, {Gate::NPurify(1, 2, 3), Gate::Not(2, 4),
                            Gate::Nor(3, 4, 5), Gate::Not(5, 1)});
  const std::vector<Literal> literals = {
      {nots, "b_2", "g_2", "8/3"},       {nots, "c_2", "g_2", "4/3"},
      {nots, "b_1", "g_(1,2)", "1"},     {nots, "b_2", "g_(1,2)", "3"},
      {nor, "b_3", "g_3", "10/3"},       {nor, "c_3", "g_3", "5/3"},
      {nor, "b_1", "g_(1,3)", "1"},      {nor, "b_3", "g_(1,3)", "3"},
      {nor, "b_2", "g_(2,3)", "1"},      {nor, "b_3", "g_(2,3)", "3"},
      {npurify, "b_2", "g_2", "5/3"},    {npurify, "c_2", "g_2", "5/6"},
      {npurify, "b_3", "g_3", "4/3"},    {npurify, "c_3", "g_3", "2/3"},
  };
  for (const Literal& l : literals) {
    const ReductionArtifact a = CompileMain(l.circuit);
    const auto values = LabeledValues(a.game);
    const auto it = values.find({l.buyer, l.good});
    if (it == values.end() || it->second != Q(l.value.c_str())) {
      out.Fail("v(" + l.buyer + ", " + l.good + ") != " + l.value);
    }
  }
  const ReductionArtifact a = CompileMain(nots);
  const ReductionArtifact b = CompileMain(nor);
  if (a.game.budget(a.b(2)) != 2 || a.game.budget(a.c(2)) != 1000 ||
      b.game.budget(b.b(3)) != 3) {
    out.Fail("gadget budgets");
  }
  out.summary << cases << " golden cases, " << literals.size()
              << " literal values, 3 literal budgets";
}

void Sparsity(Outcome& out) {
  std::mt19937_64 rng(5);
  std::size_t worst_b = 0, b_buyers = 0, c_buyers = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const Circuit c = testing::RandomDegreeValidCircuit(rng, n);
    for (const ReductionArtifact& a : {CompileMain(c), CompileWeak(c)}) {
      for (Node v = 1; v <= n; ++v) {
        const std::size_t b = a.game.interests(a.b(v)).size();
        const std::size_t aux = a.game.interests(a.c(v)).size();
        worst_b = std::max(worst_b, b);
        ++b_buyers;
        ++c_buyers;
        if (b > 4 || aux != 1) {
          out.Fail("circuit " + Describe(c) + " node " +
                   std::to_string(v));
        }
      }
    }
  }
  out.summary << "100 circuits x 2 variants, " << b_buyers << " b-buyers (max "
              << worst_b << " goods), " << c_buyers << " c-buyers";
}

std::vector<Circuit> RoundTripCircuits() {
  std::vector<Circuit> out = testing::EnumerateCircuitsUpTo(6);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    out.push_back(testing::RandomCircuit(rng, 2 + k % 7));
  }
  return out;
}

bool HasPureSolution(const Circuit& c) {
  for (const Assignment& x : BruteForceSolve(c)) {
    if (x.IsPure()) return true;
  }
  return false;
}

void MainRoundTrip(Outcome& out) {
  const std::vector<Circuit> circuits = RoundTripCircuits();
  std::size_t equilibria = 0, lemma_checks = 0, empty = 0, empty_pure = 0;
  std::size_t probed = 0, probe_found = 0;
  for (const Circuit& c : circuits) {
    const ReductionArtifact a = CompileMain(c);
    SearchConfig config;
    config.grid = MainGrid(a.params());
    const std::vector<Equilibrium> found =
        GridSearch(a, ApproxParams::Exact(), config);
    equilibria += found.size();
    for (const Equilibrium& e : found) {
      if (!Verify(a.game, e.alpha, e.x, ApproxParams::Exact()).valid()) {
        out.Fail("unverified equilibrium on " + Describe(c));
      }
      if (!CheckCircuit(c, DecodeMain(a, e.alpha))) {
        out.Fail("unsatisfying decode on " + Describe(c));
      }
    }
    const LemmaReport lemmas = LemmaSuite(a, found);
    lemma_checks += lemmas.checks;
    if (!lemmas.passed()) out.Fail(lemmas.ToString());
    if (found.empty()) {
      ++empty;
      const bool pure = HasPureSolution(c);
      empty_pure += pure;
      out.Fail("no equilibrium on {kappa, 1} for " + Describe(c) +
               (pure ? " (has a pure solution)" : " (no pure solution)"));
      // Off-grid probe: the refined grid holds the non-pure encodings.
      if (c.node_count() <= 4) {
        SearchConfig refined;
        refined.grid = MainGrid(a.params(), true);
        const auto more = GridSearch(a, ApproxParams::Exact(), refined);
        ++probed;
        probe_found += !more.empty();
        const LemmaReport more_lemmas = LemmaSuite(a, more);
        if (!more_lemmas.passed()) out.Fail(more_lemmas.ToString());
      }
    }
  }
  out.summary << circuits.size() << " circuits, " << equilibria
              << " equilibria, " << lemma_checks << " lemma checks, " << empty
              << " circuits without a grid equilibrium (" << empty_pure
              << " of them with a pure solution); refined-grid probe found "
                 "equilibria for "
              << probe_found << " of " << probed << " probed";
}

struct WeakTally {
  std::size_t equilibria = 0;
  std::size_t circuits_with = 0;
};

WeakTally WeakPass(const std::vector<Circuit>& circuits,
                   const std::vector<Rational>& grid, Outcome& out) {
  WeakTally tally;
  for (const Circuit& c : circuits) {
    const ReductionArtifact a = CompileWeak(c);
    const ApproxParams params = TargetParams(a);
    SearchConfig config;
    config.grid = grid;
    const std::vector<Equilibrium> found = GridSearch(a, params, config);
    tally.equilibria += found.size();
    tally.circuits_with += !found.empty();
    for (const Equilibrium& e : found) {
      if (!Verify(a.game, e.alpha, e.x, params).valid()) {
        out.Fail("unverified equilibrium on " + Describe(c));
      }
      for (Node v = 1; v <= c.node_count(); ++v) {
        if (e.alpha[a.b(v)] < kWeakZeroLow) {
          out.Fail("alpha_b below 1/10 on " + Describe(c));
        }
      }
      if (!CheckCircuit(c, DecodeWeak(a, e.alpha))) {
        out.Fail("unsatisfying decode on " + Describe(c));
      }
    }
  }
  return tally;
}

void WeakRoundTrip(Outcome& out) {
  const std::vector<Circuit> circuits = RoundTripCircuits();
  const WeakTally stated =
      WeakPass(circuits, {Q("1/10"), Q("19/20"), 1}, out);
  const WeakTally wide = WeakPass(circuits, WeakGrid(), out);
  out.summary << circuits.size() << " circuits; grid {1/10, 19/20, 1}: "
              << stated.equilibria << " equilibria on " << stated.circuits_with
              << " circuits; grid with 1/9: " << wide.equilibria
              << " equilibria on " << wide.circuits_with << " circuits";
}

void ConstructiveConverse(Outcome& out) {
  std::size_t circuits = 0, with_pure = 0, realized = 0;
  for (const Circuit& c : testing::EnumerateCircuitsUpTo(4)) {
    ++circuits;
    const ReductionArtifact a = CompileMain(c);
    bool has_pure = false, ok = false;
    for (const Assignment& x : BruteForceSolve(c)) {
      if (!x.IsPure()) continue;
      has_pure = true;
      const auto candidate = CandidateFromAssignment(a, x);
      if (candidate && Verify(a.game, candidate->alpha, candidate->x,
                              ApproxParams::Exact())
                           .valid()) {
        ok = true;
        ++realized;
      }
    }
    with_pure += has_pure;
    if (has_pure && !ok) out.Fail("no candidate for " + Describe(c));
  }
  out.summary << circuits << " circuits, " << with_pure
              << " with a pure solution, " << realized
              << " pure assignments realized";
}

template <typename T, typename Serialize, typename Parse>
bool Stable(const T& value, Serialize serialize, Parse parse) {
  const std::string once = serialize(value);
  const T back = parse(once);
  return back == value && serialize(back) == once;
}

void Serialization(Outcome& out) {
  std::mt19937_64 rng(13);
  std::map<std::string, std::size_t> ok;
  for (int trial = 0; trial < 1000; ++trial) {
    const PacingGame game = testing::RandomGame(rng, 5, 5, 12);
    if (Stable(game, SerializeGame, ParseGame)) {
      ++ok["game"];
    } else {
      out.Fail("game " + SerializeGame(game));
    }

    const Circuit circuit = testing::RandomCircuit(rng, 2 + trial % 9);
    if (Stable(circuit, SerializeCircuit, ParseCircuit)) {
      ++ok["circuit"];
    } else {
      out.Fail("circuit " + Describe(circuit));
    }

    const ReductionArtifact artifact =
        trial % 3 == 0 ? CompileWeak(circuit)
                       : CompileMain(circuit, MakeRational(trial % 7, 24));
    const ReductionMapping mapping = MappingOf(artifact);
    if (Stable(mapping, SerializeMapping, ParseMapping) &&
        Stable(artifact.game, SerializeGame, ParseGame)) {
      ++ok["mapping"];
    } else {
      out.Fail("mapping " + SerializeMapping(mapping));
    }

    std::vector<EquilibriumRecord> records;
    const std::size_t count = 1 + trial % 3;
    for (std::size_t k = 0; k < count; ++k) {
      const ApproxParams params =
          k == 0 ? ApproxParams::Exact()
          : k == 1
              ? ApproxParams::Gamma(testing::RandomRational(rng, 0, Q("9/10"), 12))
              : ApproxParams::SigmaGammaTau(Q("1/20"), Q("1/20"), Q("1/20"));
      records.push_back(
          {{testing::RandomProfile(rng, game.num_buyers(), 12),
            testing::RandomAllocation(rng, game, 12)},
           params,
           trial % 2 == 0});
    }
    const std::string once = SerializeEquilibria(game, records);
    const auto back = ParseEquilibria(game, once);
    if (back == records && SerializeEquilibria(game, back) == once) {
      ++ok["equilibria"];
    } else {
      out.Fail("equilibrium list " + once);
    }
  }
  bool first = true;
  for (const auto& [kind, n] : ok) {
    out.summary << (first ? "" : ", ") << kind << " " << n << "/1000";
    first = false;
  }
}

std::vector<Criterion> Criteria() {
  return {
      {1, "definition fidelity", 1, DefinitionFidelity},
      {2, "relaxation monotonicity", 30, RelaxationMonotonicity},
      {3, "feasibility-oracle agreement", 300, FeasibilityOracleAgreement},
      {4, "gadget constants", 0, GadgetConstants},
      {5, "sparsity", 0, Sparsity},
      {6, "main round-trip", 600, MainRoundTrip},
      {7, "weak round-trip", 600, WeakRoundTrip},
      {8, "constructive converse", 0, ConstructiveConverse},
      {9, "serialization", 0, Serialization},
  };
}

int Main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria", "pacing_acceptance"};
  std::optional<int> only;
  bool verbose = false;
  app.add_option("--criterion", only, "run a single criterion (1-9)")
      ->check(CLI::Range(1, 9));
  app.add_flag("--verbose", verbose, "print every recorded failure detail");
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const Criterion& c : Criteria()) {
    if (only && *only != c.id) continue;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(outcome);
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.Fail("runtime exceeds " + std::to_string(c.budget_seconds) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
    std::cout << "criterion " << c.id << " (" << c.name << "): "
              << (outcome.pass ? "PASS" : "FAIL") << " ["
              << outcome.summary.str() << "; " << timing << "]\n";
    const std::size_t shown = verbose ? outcome.details.size()
                                      : std::min<std::size_t>(3, outcome.details.size());
    for (std::size_t k = 0; k < shown; ++k) {
      std::cout << "  " << outcome.details[k] << "\n";
    }
    std::cout.flush();
    all_pass &= outcome.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace
}  // namespace pacing::acceptance

int main(int argc, char** argv) { return pacing::acceptance::Main(argc, argv); }
