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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "epseq/errors.hpp"
#include "epseq/json_io.hpp"
#include "epseq/verify.hpp"

namespace {

using namespace epseq;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExhausted = 3;

Json load_json(const std::string& path) {
  return parse_json_text(read_input(path), path == "-" ? "<stdin>" : path);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct TrembleFlags {
  std::string tremble_path;
  bool uniform = false;
};

// Resolve the tremble for an extensive-form check: an explicit profile
// file, a tremble-spec file, or the canonical uniform tremble.
BehavioralProfile resolve_tremble(const GameTree& g, const BehavioralProfile& sigma,
                                  const TrembleFlags& flags) {
  if (flags.uniform != flags.tremble_path.empty()) {
    throw FormMismatchError("choose exactly one of --uniform-tremble or --tremble <path>");
  }
  if (flags.uniform) return uniform_tremble(g, sigma);
  const Json j = load_json(flags.tremble_path);
  const std::string form = j.value("form", "");
  if (form == "behavioral") return profile_from_json(g, j);
  if (form == "tremble-spec") return custom_tremble(g, sigma, tremble_spec_from_json(g, j));
  throw ParseError(flags.tremble_path + ": expected form 'behavioral' or 'tremble-spec'");
}

NonstdNum parse_eps_argument(const std::string& text) { return nonstd_from_json(Json(text)); }

int run_validate(const std::string& game_path) {
  const Json j = load_json(game_path);
  const auto parsed = game_from_json(j);
  const ValidationReport report = std::holds_alternative<GameTree>(parsed)
                                      ? validate(std::get<GameTree>(parsed))
                                      : validate(std::get<StrategicGame>(parsed));
  print_json(report_to_json(report));
  return report.ok ? kExitPass : kExitFail;
}

struct CheckArgs {
  std::string concept_name;
  std::string game_path;
  std::string profile_path;
  TrembleFlags tremble;
  bool epistemic = false;
  bool search = false;
  int max_exp = 3;
  std::vector<std::string> coeffs;
  bool serial = false;
};

int run_check(const CheckArgs& args) {
  const auto parsed = game_from_json(load_json(args.game_path));
  CheckOptions opts;
  opts.epistemic = args.epistemic;
  opts.exec = args.serial ? ExecPolicy::serial : ExecPolicy::parallel;

  if (args.concept_name == "nash" || args.concept_name == "correlated" ||
      args.concept_name == "rationalizable") {
    if (!std::holds_alternative<StrategicGame>(parsed)) {
      throw FormMismatchError("'" + args.concept_name + "' needs a strategic-form game");
    }
    const StrategicGame& g = std::get<StrategicGame>(parsed);
    if (args.concept_name == "rationalizable") {
      const RationalizableResult r = rationalizable(g);
      Json out = rationalizable_to_json(g, r);
      if (args.epistemic) {
        // Cross-check: every surviving strategy is played somewhere in
        // a model in which rationality is universal.
        for (int player = 1; player <= g.num_players; ++player) {
          for (int s : r.surviving[static_cast<std::size_t>(player - 1)]) {
            const StrategicModel m = witness_model(g, r, player, s);
            if (!ck_rationality_strategic(g, m, opts.exec).pass) {
              throw RouteDisagreementError(
                  "rationalizable: a witness model failed universal rationality");
            }
          }
        }
        out["witness_models_checked"] = true;
      }
      print_json(out);
      return kExitPass;
    }
    if (args.profile_path.empty()) {
      throw FormMismatchError("'" + args.concept_name + "' needs a profile file");
    }
    const Json pj = load_json(args.profile_path);
    const Verdict v = args.concept_name == "nash"
                          ? check_nash(g, mixed_from_json(g, pj), opts)
                          : check_correlated(g, distribution_from_json(g, pj), opts);
    print_json(verdict_to_json(nullptr, v));
    return v.pass ? kExitPass : kExitFail;
  }

  Concept target;
  if (args.concept_name == "perfect") {
    target = Concept::perfect;
  } else if (args.concept_name == "quasi-perfect") {
    target = Concept::quasi_perfect;
  } else if (args.concept_name == "sequential") {
    target = Concept::sequential;
  } else {
    throw FormMismatchError("unknown concept '" + args.concept_name + "'");
  }
  if (!std::holds_alternative<GameTree>(parsed)) {
    throw FormMismatchError("'" + args.concept_name + "' needs an extensive-form game");
  }
  const GameTree& g = std::get<GameTree>(parsed);
  if (args.profile_path.empty()) {
    throw FormMismatchError("'" + args.concept_name + "' needs a profile file");
  }
  const BehavioralProfile sigma = profile_from_json(g, load_json(args.profile_path));

  if (args.search) {
    TrembleSearchBudget budget;
    budget.max_exponent = args.max_exp;
    if (!args.coeffs.empty()) {
      budget.coefficients.clear();
      for (const std::string& c : args.coeffs) budget.coefficients.push_back(parse_rational(c));
    }
    const TrembleSearchResult r = search_tremble(g, sigma, target, budget, opts);
    if (r.status == TrembleSearchResult::Status::found) {
      print_json(verdict_to_json(&g, *r.verdict));
      return kExitPass;
    }
    Json out = Json::object();
    out["status"] = "budget-exhausted";
    out["candidates_tried"] = r.candidates_tried;
    out["note"] = "exhaustion is not a refutation; a certificate may exist outside the budget";
    print_json(out);
    return kExitBudgetExhausted;
  }

  const BehavioralProfile trem = resolve_tremble(g, sigma, args.tremble);
  Verdict v;
  switch (target) {
    case Concept::perfect:
      v = check_perfect(g, sigma, trem, opts);
      break;
    case Concept::quasi_perfect:
      v = check_quasi_perfect(g, sigma, trem, opts);
      break;
    default:
      v = check_sequential(g, sigma, trem, opts);
      break;
  }
  print_json(verdict_to_json(&g, v));
  return v.pass ? kExitPass : kExitFail;
}

int run_model_build(const std::string& game_path, const std::string& profile_path,
                    const TrembleFlags& flags) {
  const auto parsed = game_from_json(load_json(game_path));
  if (!std::holds_alternative<GameTree>(parsed)) {
    throw FormMismatchError("model build needs an extensive-form game");
  }
  const GameTree& g = std::get<GameTree>(parsed);
  const ValidationReport report = validate(g);
  if (!report.ok) throw InvalidGameError(report.issues.front().message);
  const BehavioralProfile sigma = profile_from_json(g, load_json(profile_path));
  const BehavioralProfile trem = resolve_tremble(g, sigma, flags);
  print_json(model_to_json(g, canonical_model(g, trem)));
  return kExitPass;
}

int run_model_check_ckr(const std::string& game_path, const std::string& model_path,
                        const std::string& profile_path, const TrembleFlags& flags,
                        const std::string& mode_name, const std::string& eps_text, bool serial) {
  const auto parsed = game_from_json(load_json(game_path));
  if (!std::holds_alternative<GameTree>(parsed)) {
    throw FormMismatchError("model check-ckr needs an extensive-form game");
  }
  const GameTree& g = std::get<GameTree>(parsed);
  const ValidationReport report = validate(g);
  if (!report.ok) throw InvalidGameError(report.issues.front().message);
  const BehavioralProfile sigma = profile_from_json(g, load_json(profile_path));
  const BehavioralProfile trem = resolve_tremble(g, sigma, flags);
  const ExtensiveModel m = model_from_json(g, load_json(model_path));
  const RationalityMode mode =
      mode_name == "local" ? RationalityMode::local : RationalityMode::global;
  const Verdict v = ck_rationality(g, m, trem, sigma, parse_eps_argument(eps_text), mode,
                                   serial ? ExecPolicy::serial : ExecPolicy::parallel);
  print_json(verdict_to_json(&g, v));
  return v.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificate checking for game-theoretic solution concepts"};
  app.require_subcommand(1);

  // validate
  std::string v_game;
  CLI::App* validate_cmd = app.add_subcommand("validate", "structural and recall checks");
  validate_cmd->add_option("game", v_game, "game file (JSON, '-' for stdin)")->required();

  // check
  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand("check", "verify a solution-concept certificate");
  check_cmd
      ->add_option("concept", check_args.concept_name,
                   "nash|correlated|rationalizable|perfect|quasi-perfect|sequential")
      ->required();
  check_cmd->add_option("game", check_args.game_path, "game file")->required();
  check_cmd->add_option("profile", check_args.profile_path, "profile / distribution file");
  check_cmd->add_option("--tremble", check_args.tremble.tremble_path,
                        "tremble file (behavioral profile or tremble-spec)");
  check_cmd->add_flag("--uniform-tremble", check_args.tremble.uniform,
                      "use the canonical uniform tremble");
  check_cmd->add_flag("--epistemic", check_args.epistemic,
                      "also run the knowledge-model route and cross-check it");
  check_cmd->add_flag("--search", check_args.search, "search for a certifying tremble");
  check_cmd->add_option("--max-exp", check_args.max_exp, "largest eps exponent in the search");
  check_cmd->add_option("--coeff", check_args.coeffs, "search coefficients (rational strings)");
  check_cmd->add_flag("--serial", check_args.serial, "disable parallel sweeps");

  // model
  CLI::App* model_cmd = app.add_subcommand("model", "knowledge-model commands");
  model_cmd->require_subcommand(1);
  std::string mb_game, mb_profile;
  TrembleFlags mb_flags;
  CLI::App* build_cmd = model_cmd->add_subcommand("build", "emit the canonical model");
  build_cmd->add_option("game", mb_game, "game file")->required();
  build_cmd->add_option("profile", mb_profile, "profile file")->required();
  build_cmd->add_option("--tremble", mb_flags.tremble_path, "tremble file");
  build_cmd->add_flag("--uniform-tremble", mb_flags.uniform, "use the uniform tremble");

  std::string mc_game, mc_model, mc_profile, mc_mode = "local", mc_eps = "0";
  TrembleFlags mc_flags;
  bool mc_serial = false;
  CLI::App* ckr_cmd = model_cmd->add_subcommand("check-ckr", "universal rationality check");
  ckr_cmd->add_option("game", mc_game, "game file")->required();
  ckr_cmd->add_option("model", mc_model, "model file")->required();
  ckr_cmd->add_option("profile", mc_profile, "profile file")->required();
  ckr_cmd->add_option("--tremble", mc_flags.tremble_path, "tremble file");
  ckr_cmd->add_flag("--uniform-tremble", mc_flags.uniform, "use the uniform tremble");
  ckr_cmd->add_option("--mode", mc_mode, "local|global")
      ->check(CLI::IsMember({"local", "global"}));
  ckr_cmd->add_option("--eps", mc_eps, "threshold: \"p/q\" or \"eps\"");
  ckr_cmd->add_flag("--serial", mc_serial, "disable parallel sweeps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return run_validate(v_game);
    if (check_cmd->parsed()) return run_check(check_args);
    if (build_cmd->parsed()) return run_model_build(mb_game, mb_profile, mb_flags);
    if (ckr_cmd->parsed()) {
      return run_model_check_ckr(mc_game, mc_model, mc_profile, mc_flags, mc_mode, mc_eps,
                                 mc_serial);
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
