// Copyright 2026 The epseq Authors
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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "epseq/epistemic.hpp"
#include "epseq/errors.hpp"
#include "epseq/json_io.hpp"
#include "epseq/response.hpp"
#include "epseq/verify.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

namespace {

using namespace epseq;
using Clock = std::chrono::steady_clock;

std::string g_cli_path;
int g_route_disagreements = 0;
int g_route_instances = 0;

struct CriterionResult {
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Check {
  bool ok = true;
  std::string first_failure;
  int failures = 0;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
};

const NonstdNum kEps = NonstdNum::epsilon();

// Shared corpus for criteria 3-5.
struct Instance {
  GameTree game;
  BehavioralProfile sigma;
  BehavioralProfile trem;
};

std::vector<Instance> build_corpus() {
  std::vector<Instance> corpus;
  std::mt19937_64 rng(0xACCE57);
  testing::RandomGameConfig cfg;  // <=3 players, depth <=4, <=3 actions, payoffs in [-5,5]

  // 140 instances with random standard profiles.
  while (corpus.size() < 140) {
    GameTree g = testing::random_game(rng, cfg);
    if (g.infosets().empty()) continue;
    BehavioralProfile sigma = testing::random_standard_profile(g, rng);
    BehavioralProfile trem = uniform_tremble(g, sigma);
    corpus.push_back({std::move(g), std::move(sigma), std::move(trem)});
  }
  // 70 perfect-information instances with backward-induction profiles,
  // so the pass side of each implication is populated.
  testing::RandomGameConfig pi = cfg;
  pi.perfect_information = true;
  while (corpus.size() < 210) {
    GameTree g = testing::random_game(rng, pi);
    if (g.infosets().empty()) continue;
    BehavioralProfile sigma = testing::backward_induction_profile(g);
    BehavioralProfile trem = uniform_tremble(g, sigma);
    corpus.push_back({std::move(g), std::move(sigma), std::move(trem)});
  }
  return corpus;
}

struct CheckedInstance {
  bool perfect = false;
  bool quasi = false;
  bool sequential = false;
};

std::vector<CheckedInstance> g_corpus_verdicts;

Verdict checked(const std::function<Verdict()>& run) {
  ++g_route_instances;
  try {
    return run();
  } catch (const RouteDisagreementError&) {
    ++g_route_disagreements;
    throw;
  }
}

// ---- criterion 1 ----

CriterionResult criterion_field_suite() {
  const auto start = Clock::now();
  Check c;
  std::mt19937_64 rng(0xF1E1D);
  for (int trial = 0; trial < 1000; ++trial) {
    const NonstdNum a = testing::random_nonstd(rng);
    const NonstdNum b = testing::random_nonstd(rng);
    const NonstdNum x = testing::random_nonstd(rng);
    c.expect((a + b) + x == a + (b + x), "associativity of +");
    c.expect((a * b) * x == a * (b * x), "associativity of *");
    c.expect(a + b == b + a, "commutativity of +");
    c.expect(a * b == b * a, "commutativity of *");
    c.expect(a * (b + x) == a * b + a * x, "distributivity");
    c.expect((a + (-a)).is_zero(), "additive inverse");
    c.expect(a + NonstdNum(0) == a, "additive identity");
    c.expect(a * NonstdNum(1) == a, "multiplicative identity");
    if (!a.is_zero()) c.expect(a * (NonstdNum(1) / a) == NonstdNum(1), "multiplicative inverse");
    if (cmp(a, b) < 0) {
      c.expect(cmp(a + x, b + x) < 0, "order respects +");
      if (x.sign() > 0) c.expect(cmp(a * x, b * x) < 0, "order respects *");
    }
  }
  for (const Rational& r : {Rational(1), Rational(1, 10), Rational(1, 1000000)}) {
    NonstdNum power(1);
    for (int k = 1; k <= 3; ++k) {
      power *= kEps;
      c.expect(power.sign() > 0, "eps^k positive");
      c.expect(power < NonstdNum(r), "eps^k below every positive rational");
    }
    c.expect(NonstdNum(1) / kEps > NonstdNum(r), "1/eps above every rational");
  }
  CriterionResult out;
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.pass = c.ok && out.seconds < 5.0;
  std::ostringstream detail;
  detail << "1000 triples";
  if (!c.ok) detail << "; " << c.failures << " violations, first: " << c.first_failure;
  if (out.seconds >= 5.0) detail << "; over the 5 s budget";
  out.detail = detail.str();
  return out;
}

// ---- criterion 2 ----

CriterionResult criterion_entry_game() {
  const auto start = Clock::now();
  Check c;
  const GameTree g = testing::entry_game();
  CheckOptions opts;  // epistemic route on

  const BehavioralProfile good = testing::pure_profile(g, {{"I1", "In"}, {"I2", "Acc"}});
  const BehavioralProfile trem_good = uniform_tremble(g, good);
  const Verdict p = checked([&] { return check_perfect(g, good, trem_good, opts); });
  const Verdict q = checked([&] { return check_quasi_perfect(g, good, trem_good, opts); });
  const Verdict s = checked([&] { return check_sequential(g, good, trem_good, opts); });
  c.expect(p.pass, "In/Acc passes perfect");
  c.expect(q.pass, "In/Acc passes quasi-perfect");
  c.expect(s.pass, "In/Acc passes sequential");
  c.expect(s.certificate && s.certificate->eps.is_zero(), "In/Acc eps* is exactly 0");

  const BehavioralProfile bad = testing::pure_profile(g, {{"I1", "Out"}, {"I2", "Fight"}});
  const BehavioralProfile trem_bad = uniform_tremble(g, bad);
  for (const Verdict& v :
       {checked([&] { return check_perfect(g, bad, trem_bad, opts); }),
        checked([&] { return check_quasi_perfect(g, bad, trem_bad, opts); }),
        checked([&] { return check_sequential(g, bad, trem_bad, opts); })}) {
    c.expect(!v.pass, "Out/Fight fails");
    c.expect(v.counterexample.has_value(), "counterexample present");
    if (v.counterexample) {
      c.expect(v.counterexample->player == 2, "counterexample names player 2");
      c.expect(v.counterexample->infoset == "I2", "counterexample names I2");
      c.expect(v.counterexample->deviation == "Acc", "counterexample deviation Acc");
      c.expect(v.counterexample->shortfall.standard_part() == Rational(2),
               "shortfall standard part exactly 2");
    }
  }
  CriterionResult out;
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.pass = c.ok && out.seconds < 1.0;
  out.detail = c.ok ? "exact verdicts and witnesses" : c.first_failure;
  if (out.seconds >= 1.0) out.detail += "; over the 1 s budget";
  return out;
}

// ---- criterion 3 ----

CriterionResult criterion_implication_chain(const std::vector<Instance>& corpus) {
  const auto start = Clock::now();
  Check c;
  CheckOptions opts;  // epistemic on: also feeds criterion 5
  g_corpus_verdicts.clear();
  g_corpus_verdicts.reserve(corpus.size());
  int perfect_passes = 0, quasi_passes = 0, seq_passes = 0;
  for (const Instance& inst : corpus) {
    CheckedInstance v;
    v.perfect = checked([&] { return check_perfect(inst.game, inst.sigma, inst.trem, opts); }).pass;
    v.quasi =
        checked([&] { return check_quasi_perfect(inst.game, inst.sigma, inst.trem, opts); }).pass;
    v.sequential =
        checked([&] { return check_sequential(inst.game, inst.sigma, inst.trem, opts); }).pass;
    perfect_passes += v.perfect;
    quasi_passes += v.quasi;
    seq_passes += v.sequential;
    if (v.perfect) c.expect(v.sequential, "perfect pass must imply sequential pass");
    if (v.quasi) c.expect(v.sequential, "quasi-perfect pass must imply sequential pass");
    g_corpus_verdicts.push_back(v);
  }
  CriterionResult out;
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.pass = c.ok && corpus.size() >= 200 && perfect_passes > 0 && quasi_passes > 0 &&
             out.seconds < 120.0;
  std::ostringstream detail;
  detail << corpus.size() << " games; passes: perfect " << perfect_passes << ", quasi-perfect "
         << quasi_passes << ", sequential " << seq_passes;
  if (!c.ok) detail << "; " << c.failures << " violations, first: " << c.first_failure;
  if (out.seconds >= 120.0) detail << "; over the 2 min budget";
  out.detail = detail.str();
  return out;
}

// ---- criterion 4 ----

CriterionResult criterion_local_to_global(const std::vector<Instance>& corpus) {
  const auto start = Clock::now();
  Check c;
  int forward_instances = 0, converse_instances = 0;
  for (const Instance& inst : corpus) {
    const GameTree& g = inst.game;
    const Rational r = min_support_prob(g, inst.sigma);
    for (int player = 1; player <= g.num_players(); ++player) {
      const BehavioralStrategy sigma_i = inst.sigma.strategy_of(g, player);
      const NonstdNum gap = substitution_gap(g, player, sigma_i, inst.trem);
      for (const NonstdNum& eps : {NonstdNum(), kEps, kEps * kEps}) {
        if (is_local_eps_best_profile(g, player, sigma_i, inst.trem, eps)) {
          const LocalToGlobalCert cert = local_to_global(g, player, sigma_i, inst.trem, eps);
          c.expect(is_eps_best(g, player, sigma_i, inst.trem, cert.bound),
                   "d*(eps + gap) bound violated");
          ++forward_instances;
        }
        if (is_eps_best(g, player, sigma_i, inst.trem, eps)) {
          const NonstdNum slack = gap + eps + eps / NonstdNum(r);
          for (int iset : g.infosets_of(player)) {
            const auto& row = inst.sigma.at(iset);
            for (std::size_t a = 0; a < row.size(); ++a) {
              if (row[a].sign() <= 0) continue;
              std::vector<NonstdNum> point(row.size(), NonstdNum());
              point[a] = NonstdNum(1);
              c.expect(cmp(local_shortfall(g, player, iset, point, inst.trem).amount, slack) <= 0,
                       "gap + eps + eps/r slack bound violated");
              ++converse_instances;
            }
          }
        }
      }
    }
  }
  CriterionResult out;
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.pass = c.ok && forward_instances > 0 && converse_instances > 0;
  std::ostringstream detail;
  detail << forward_instances << " forward and " << converse_instances << " converse instances";
  if (!c.ok) detail << "; " << c.failures << " violations, first: " << c.first_failure;
  out.detail = detail.str();
  return out;
}

// ---- criterion 5 ----

CriterionResult criterion_route_agreement() {
  CriterionResult out;
  out.pass = g_route_disagreements == 0 && g_route_instances > 0;
  std::ostringstream detail;
  detail << g_route_instances << " dual-route checks, " << g_route_disagreements
         << " disagreements";
  out.detail = detail.str();
  return out;
}

// ---- criterion 6 ----

CriterionResult criterion_strategic_trio() {
  const auto start = Clock::now();
  Check c;
  CheckOptions opts;

  {
    const StrategicGame g = testing::matching_pennies();
    const Verdict v = checked([&] {
      return check_nash(
          g, testing::mixed(g, {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}),
          opts);
    });
    c.expect(v.pass, "matching pennies mixed profile is Nash");
  }
  {
    const StrategicGame g = testing::prisoners_dilemma();
    const Verdict v = checked([&] {
      return check_nash(g, testing::mixed(g, {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}}),
                        opts);
    });
    c.expect(!v.pass, "cooperation fails Nash");
    c.expect(v.counterexample && v.counterexample->deviation == "D1", "witness is defection");
  }
  {
    const StrategicGame g = testing::chicken();
    ProfileDistribution eta;
    eta.mass.assign(g.num_profiles(), Rational(0));
    eta.mass[g.flat_index({0, 1})] = Rational(1, 3);
    eta.mass[g.flat_index({1, 0})] = Rational(1, 3);
    eta.mass[g.flat_index({1, 1})] = Rational(1, 3);
    const Verdict v = checked([&] { return check_correlated(g, eta, opts); });
    c.expect(v.pass, "chicken's uniform three-profile distribution is correlated");
  }
  {
    const StrategicGame g = testing::prisoners_dilemma();
    const RationalizableResult r = rationalizable(g);
    c.expect(r.surviving[0] == std::vector<int>{1} && r.surviving[1] == std::vector<int>{1},
             "dominance-solvable game reduces to the unique profile");
    const StrategicGame g2 = testing::two_round_solvable();
    const RationalizableResult r2 = rationalizable(g2);
    c.expect(r2.surviving[0] == std::vector<int>{0} && r2.surviving[1] == std::vector<int>{0},
             "two-round elimination reaches the hand solution");
    for (const auto& [game, result] :
         std::vector<std::pair<const StrategicGame*, const RationalizableResult*>>{{&g, &r},
                                                                                   {&g2, &r2}}) {
      for (int player = 1; player <= game->num_players; ++player) {
        for (int s : result->surviving[static_cast<std::size_t>(player - 1)]) {
          const StrategicModel m = witness_model(*game, *result, player, s);
          c.expect(ck_rationality_strategic(*game, m).pass,
                   "witness model must pass universal rationality");
        }
      }
    }
  }
  CriterionResult out;
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.pass = c.ok && out.seconds < 5.0;
  out.detail = c.ok ? "nash, correlated, rationalizable all exact" : c.first_failure;
  if (out.seconds >= 5.0) out.detail += "; over the 5 s budget";
  return out;
}

// ---- criterion 7 ----

CriterionResult criterion_oracle_equivalence() {
  const auto start = Clock::now();
  Check c;
  std::mt19937_64 rng(0x0FAC1E);
  // Fixture sizes chosen so the full cartesian continuation
  // enumeration in the oracle stays tractable.
  testing::RandomGameConfig cfg;
  cfg.max_depth = 3;
  cfg.max_actions = 2;
  int infosets_checked = 0;
  for (int game_idx = 0; game_idx < 50; ++game_idx) {
    if (game_idx == 25) {
      cfg.max_depth = 2;
      cfg.max_actions = 3;
    }
    const GameTree g = testing::random_game(rng, cfg);
    const BehavioralProfile sigma = testing::random_standard_profile(g, rng);
    const BehavioralProfile trem = uniform_tremble(g, sigma);
    for (std::size_t i = 0; i < g.infosets().size(); ++i) {
      const int player = g.infosets()[i].player;
      const BehavioralStrategy sigma_i = sigma.strategy_of(g, player);
      const NonstdNum fast =
          global_shortfall(g, player, static_cast<int>(i), sigma_i, trem).amount;
      const NonstdNum slow =
          testing::oracle_global_shortfall(g, player, static_cast<int>(i), sigma_i, trem);
      c.expect(fast == slow, "shortfall differs from the exhaustive oracle at " +
                                 g.infosets()[i].id + " in game " + std::to_string(game_idx));
      ++infosets_checked;
    }
  }
  CriterionResult out;
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.pass = c.ok && infosets_checked > 0;
  std::ostringstream detail;
  detail << "50 games, " << infosets_checked << " information sets, exact equality";
  if (!c.ok) detail << "; first: " << c.first_failure;
  out.detail = detail.str();
  return out;
}

// ---- criterion 8 ----

std::string run_cli(const std::string& command_line, int* exit_code) {
  const std::string full = g_cli_path + " " + command_line + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (pipe == nullptr) {
    *exit_code = -1;
    return "";
  }
  std::string output;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

CriterionResult criterion_determinism() {
  const auto start = Clock::now();
  Check c;

  // Library-level round trips on random artifacts.
  std::mt19937_64 rng(0xD37E51);
  testing::RandomGameConfig cfg;
  for (int trial = 0; trial < 10; ++trial) {
    const GameTree g = testing::random_game(rng, cfg);
    const Json jg = game_to_json(g);
    c.expect(game_to_json(std::get<GameTree>(game_from_json(jg))) == jg, "game round-trip");
    const BehavioralProfile sigma = testing::random_standard_profile(g, rng);
    const BehavioralProfile trem = uniform_tremble(g, sigma);
    const Json jp = profile_to_json(g, trem);
    c.expect(profile_to_json(g, profile_from_json(g, jp)) == jp, "profile round-trip");
    const ExtensiveModel m = canonical_model(g, trem);
    const Json jm = model_to_json(g, m);
    c.expect(model_to_json(g, model_from_json(g, jm)) == jm, "model round-trip");
    const Verdict v = check_sequential(g, sigma, trem);
    const Json jv = verdict_to_json(&g, v);
    c.expect(verdict_to_json(&g, check_sequential(g, sigma, trem)) == jv,
             "verdict determinism");
  }
  for (int trial = 0; trial < 50; ++trial) {
    const NonstdNum x = testing::random_nonstd(rng);
    c.expect(nonstd_from_json(nonstd_to_json(x)) == x, "eps-field value round-trip");
  }

  // CLI byte-level determinism on the entry fixtures.
  const std::string dir = "epseq_acceptance_tmp";
  std::filesystem::create_directories(dir);
  const GameTree g = testing::entry_game();
  const auto write = [&](const std::string& name, const Json& j) {
    std::ofstream out(dir + "/" + name, std::ios::binary);
    out << j.dump(2) << "\n";
    return dir + "/" + name;
  };
  const std::string game_path = write("entry.game.json", game_to_json(g));
  const std::string good_path = write(
      "inacc.profile.json",
      profile_to_json(g, testing::pure_profile(g, {{"I1", "In"}, {"I2", "Acc"}})));
  const std::string bad_path = write(
      "outfight.profile.json",
      profile_to_json(g, testing::pure_profile(g, {{"I1", "Out"}, {"I2", "Fight"}})));
  const std::string recall_path =
      write("forgetful.game.json", game_to_json(testing::forgetful_game()));
  const std::string broken_path = dir + "/broken.json";
  {
    std::ofstream out(broken_path, std::ios::binary);
    out << "{not json";
  }
  int model_exit = 0;
  const std::string model_doc =
      run_cli("model build " + game_path + " " + good_path + " --uniform-tremble", &model_exit);
  const std::string model_path = dir + "/entry.model.json";
  {
    std::ofstream out(model_path, std::ios::binary);
    out << model_doc;
  }
  c.expect(model_exit == 0, "model build failed");

  struct CliCase {
    std::string args;
    int expect_exit;
  };
  const std::vector<CliCase> cases = {
      {"validate " + game_path, 0},
      {"validate " + recall_path, 1},
      {"validate " + broken_path, 2},
      {"check sequential " + game_path + " " + good_path + " --uniform-tremble --epistemic", 0},
      {"check sequential " + game_path + " " + bad_path + " --uniform-tremble", 1},
      {"check perfect " + game_path + " " + good_path + " --uniform-tremble", 0},
      {"model build " + game_path + " " + good_path + " --uniform-tremble", 0},
      {"model check-ckr " + game_path + " " + model_path + " " + good_path +
           " --uniform-tremble --mode local --eps 0",
       0},
      {"model check-ckr " + game_path + " " + model_path + " " + good_path +
           " --uniform-tremble --mode global --eps eps",
       0},
  };
  for (const CliCase& cli_case : cases) {
    int code_a = 0, code_b = 0;
    const std::string out_a = run_cli(cli_case.args, &code_a);
    const std::string out_b = run_cli(cli_case.args, &code_b);
    c.expect(code_a == cli_case.expect_exit,
             "exit code for '" + cli_case.args + "' was " + std::to_string(code_a));
    c.expect(code_a == code_b && out_a == out_b,
             "repeated run of '" + cli_case.args + "' differed");
    // input errors report on stderr only
    c.expect(cli_case.expect_exit == 2 || !out_a.empty(),
             "CLI produced no output for '" + cli_case.args + "'");
  }

  CriterionResult out;
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.pass = c.ok;
  out.detail = c.ok ? "bit-exact round trips, byte-identical CLI reruns" : c.first_failure;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--cli") == 0) g_cli_path = argv[i + 1];
  }
  if (g_cli_path.empty()) g_cli_path = "./tools/epseq";

  std::vector<std::pair<std::string, CriterionResult>> results;
  const auto run = [&](int index, const std::string& name, auto&& fn) {
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.emplace_back(name, r);
    std::printf("criterion %d [%s] %-22s %s (%.2f s)\n", index, r.pass ? "pass" : "FAIL",
                name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  };

  run(1, "field-suite", criterion_field_suite);
  run(2, "entry-game", criterion_entry_game);
  const std::vector<Instance> corpus = build_corpus();
  run(3, "implication-chain", [&] { return criterion_implication_chain(corpus); });
  run(4, "local-to-global", [&] { return criterion_local_to_global(corpus); });
  run(5, "route-agreement", criterion_route_agreement);
  run(6, "strategic-trio", criterion_strategic_trio);
  run(7, "oracle-equivalence", criterion_oracle_equivalence);
  run(8, "determinism", criterion_determinism);

  int failed = 0;
  for (const auto& [name, r] : results) {
    if (!r.pass) ++failed;
  }
  if (failed > 0) {
    std::printf("acceptance: %d criterion(s) FAILED\n", failed);
    return 1;
  }
  std::printf("acceptance: all %zu criteria passed\n", results.size());
  return 0;
}
