// Copyright 2026 The Coopl Authors
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
//
// coopl command-line tool. Exit codes: 0 success, 2 invalid input,
// 3 not-realizable / inconsistent samples, 4 internal limit reached
// (tolerance ladder or rejection-sampling cap). All primary outputs are
// deterministic in the seed: the bytes written to --out equal the bytes
// written to stdout when --out is omitted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "coopl/coopl.hpp"

namespace {

using namespace coopl;

// Learner outcome that is a reported condition, not a crash.
struct LearnFailure {
  int exit_code;
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SampleSet read_samples_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParseError("cannot open file: " + path);
  return read_samples_jsonl(is);
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw ParseError("cannot open output file: " + out_path);
  os << text;
  os.flush();
  if (!os) throw ParseError("failed while writing: " + out_path);
}

// Shared --dist handling: a JSON file path, or the shorthands "uniform"
// (uniform over the game's coalitions) and "walk" (random-walk paths over a
// flow game's own network).
CoalitionDistribution resolve_dist(const std::string& dist_arg, const std::optional<Game>& game) {
  if (dist_arg == "uniform") {
    if (!game) throw std::invalid_argument("--dist uniform needs a game for the player count");
    return UniformDist{player_count(*game)};
  }
  if (dist_arg == "walk") {
    if (!game) throw std::invalid_argument("--dist walk needs a flow game");
    const auto* net = std::get_if<FlowNetwork>(&*game);
    if (!net) throw std::invalid_argument("--dist walk needs a flow game");
    return RandomWalkPathDist{*net};
  }
  return dist_from_json(read_json_file(dist_arg));
}

// Random-game shape flags shared by gen-game and experiment.
struct SpecFlags {
  std::string cls = "wvg";
  GameClassSpec spec;
  std::int64_t quota_lo = 0;
  std::int64_t quota_hi = 0;
  std::string skill_mode = "conjunctive";
  CLI::Option* quota_lo_opt = nullptr;
  CLI::Option* quota_hi_opt = nullptr;
  CLI::Option* class_opt = nullptr;

  void attach(CLI::App* cmd) {
    class_opt = cmd->add_option("--class", cls, "game class")
                    ->transform(CLI::IsMember({"wvg", "vector_wvg", "ttg", "isg", "flow",
                                               "minsum", "mcnet", "skill"}));
    cmd->add_option("--n", spec.n, "players (flow: total edges)");
    cmd->add_option("--k", spec.k, "tasks / rows / rules / layers, class-dependent");
    cmd->add_option("--weight-lo", spec.weight_lo, "weight range lower bound");
    cmd->add_option("--weight-hi", spec.weight_hi, "weight range upper bound");
    cmd->add_option("--value-lo", spec.value_lo, "value range lower bound");
    cmd->add_option("--value-hi", spec.value_hi, "value range upper bound");
    quota_lo_opt = cmd->add_option("--quota-lo", quota_lo, "quota range lower bound");
    quota_hi_opt = cmd->add_option("--quota-hi", quota_hi, "quota range upper bound");
    quota_lo_opt->needs(quota_hi_opt);
    quota_hi_opt->needs(quota_lo_opt);
    cmd->add_option("--skills", spec.skill_count, "skill count (skill games)");
    cmd->add_option("--skill-mode", skill_mode, "skill game mode")
        ->transform(CLI::IsMember({"count", "conjunctive"}));
  }

  GameClassSpec build() const {
    GameClassSpec out = spec;
    out.cls = game_class_from_string(cls);
    if (quota_lo_opt->count() > 0) out.quota_range = std::make_pair(quota_lo, quota_hi);
    out.skill_mode = skill_mode == "count" ? SkillMode::Count : SkillMode::Conjunctive;
    return out;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"cooperative-game learning and stabilization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kVersion));

  std::uint64_t seed = 0;
  std::uint32_t jobs = 1;
  std::string out_path;
  std::string format = "json";
  app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for experiment trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", out_path, "output file (stdout when omitted)");
  app.add_option("--format", format, "report format (experiment only)")
      ->transform(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // ---- gen-game ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen-game", "generate a random game document");
  SpecFlags gen_spec;
  gen_spec.attach(gen);
  gen_spec.class_opt->required();
  gen->callback([&] {
    Rng rng(seed);
    const Game game = random_game(gen_spec.build(), rng);
    emit(json_text(game_to_json(game)), out_path);
  });

  // ---- sample ------------------------------------------------------------
  auto* sample = app.add_subcommand("sample", "draw labeled coalition samples from a game");
  std::string sample_game_path;
  std::string sample_dist = "uniform";
  std::uint64_t sample_m = 0;
  sample->add_option("--game", sample_game_path, "game JSON file")->required();
  sample->add_option("--dist", sample_dist, "distribution file, \"uniform\", or \"walk\"")
      ->capture_default_str();
  sample->add_option("--m", sample_m, "number of samples")->required();
  sample->callback([&] {
    const Game game = game_from_json(read_json_file(sample_game_path));
    const CoalitionDistribution dist = resolve_dist(sample_dist, game);
    Rng rng(seed);
    SampleSet set = sample_game(game, dist, sample_m, rng);
    set.dist_descriptor = dist_to_json(dist).dump();
    std::ostringstream os;
    write_samples_jsonl(os, set);
    emit(os.str(), out_path);
  });

  // ---- stabilize ---------------------------------------------------------
  auto* stab = app.add_subcommand(
      "stabilize", "compute a minimal-total payoff covering sampled coalition values");
  std::string stab_game_path;
  std::string stab_dist = "uniform";
  std::uint64_t stab_m = 0;
  std::string stab_samples_path;
  stab->add_option("--game", stab_game_path, "game JSON file");
  stab->add_option("--dist", stab_dist, "distribution file, \"uniform\", or \"walk\"")
      ->capture_default_str();
  auto* stab_m_opt = stab->add_option("--m", stab_m, "number of samples to draw");
  stab->add_option("--samples", stab_samples_path,
                   "existing samples JSONL (alternative to --game/--m)");
  stab->callback([&] {
    SampleSet set;
    if (!stab_samples_path.empty()) {
      set = read_samples_file(stab_samples_path);
    } else {
      if (stab_game_path.empty() || stab_m_opt->count() == 0) {
        throw std::invalid_argument("stabilize needs --samples, or --game with --m");
      }
      const Game game = game_from_json(read_json_file(stab_game_path));
      const CoalitionDistribution dist = resolve_dist(stab_dist, game);
      Rng rng(seed);
      set = sample_game(game, dist, stab_m, rng);
    }
    const PayoffVector x = pac_stabilize(set);
    emit(json_text(payoff_to_json(x)), out_path);
  });

  // ---- learn -------------------------------------------------------------
  auto* learn = app.add_subcommand("learn", "fit a hypothesis game to a sample file");
  std::string learn_class;
  std::string learn_samples_path;
  std::string learn_topology_path;
  std::string learn_skills_path;
  std::uint32_t learn_r_max = 64;
  learn->add_option("--class", learn_class, "hypothesis class")
      ->required()
      ->transform(CLI::IsMember({"flow-path", "ttg", "isg", "wvg", "ctsg"}));
  learn->add_option("--samples", learn_samples_path, "samples JSONL file")->required();
  learn->add_option("--topology", learn_topology_path, "flow network JSON (flow-path only)");
  learn->add_option("--skills", learn_skills_path,
                    "skill table JSON {\"skills\": u, \"player_skills\": [[...]]} (ctsg only)");
  learn->add_option("--r-max", learn_r_max, "tolerance ladder depth (ttg only)")
      ->capture_default_str();
  learn->callback([&] {
    const SampleSet set = read_samples_file(learn_samples_path);
    Json fit;
    Game hypothesis = [&]() -> Game {
      if (learn_class == "flow-path") {
        if (learn_topology_path.empty()) {
          throw std::invalid_argument("learn --class flow-path needs --topology");
        }
        const Game topo_game = game_from_json(read_json_file(learn_topology_path));
        const auto* net = std::get_if<FlowNetwork>(&topo_game);
        if (!net) throw std::invalid_argument("--topology must be a flow game document");
        auto res = learn_flow_paths(set, *net);
        if (!res.ok()) {
          throw LearnFailure{res.status == LearnStatus::NotAPath ? 2 : 3,
                             to_string(res.status) + ": " + res.detail};
        }
        fit["replay"] = "exact";
        return flow_hypothesis_game(*res.hypothesis, *net);
      }
      if (learn_class == "ttg") {
        TtgLearnOptions options;
        options.r_max = learn_r_max;
        auto res = learn_ttg(set, options);
        if (!res.ok()) {
          throw LearnFailure{res.limit_hit ? 4 : 3, to_string(res.status) + ": " + res.detail};
        }
        fit["replay"] = "exact";
        fit["r_used"] = res.hypothesis->r_used;
        return Game(res.hypothesis->game);
      }
      if (learn_class == "isg") {
        auto res = learn_isg(set);
        if (!res.ok()) throw LearnFailure{3, to_string(res.status) + ": " + res.detail};
        fit["replay"] = "exact";
        return Game(*res.hypothesis);
      }
      if (learn_class == "wvg") {
        auto res = learn_wvg(set);
        if (!res.ok()) throw LearnFailure{3, to_string(res.status) + ": " + res.detail};
        fit["replay"] = "exact";
        return Game(*res.hypothesis);
      }
      // ctsg
      if (learn_skills_path.empty()) {
        throw std::invalid_argument("learn --class ctsg needs --skills");
      }
      const Json table = read_json_file(learn_skills_path);
      if (!table.is_object() || !table.contains("skills") || !table.contains("player_skills")) {
        throw ParseError("--skills file must hold {\"skills\": u, \"player_skills\": [[...]]}");
      }
      const auto skill_count = table["skills"].get<std::uint32_t>();
      std::vector<std::vector<std::uint32_t>> player_skills;
      for (const auto& row : table["player_skills"]) {
        player_skills.push_back(row.get<std::vector<std::uint32_t>>());
      }
      auto res = learn_ctsg(set, player_skills, skill_count);
      if (!res.ok()) throw LearnFailure{3, to_string(res.status) + ": " + res.detail};
      fit["replay"] = "exact";
      return ctsg_hypothesis_game(*res.hypothesis);
    }();
    emit(json_text(learned_game_to_json(hypothesis, fit)), out_path);
  });

  // ---- check -------------------------------------------------------------
  auto* check = app.add_subcommand("check", "test a payoff vector's empirical stability");
  std::string check_game_path;
  std::string check_payoff_path;
  std::string check_dist = "uniform";
  std::string check_samples_path;
  std::uint64_t check_held_out = 10000;
  double check_epsilon = 0.1;
  check->add_option("--game", check_game_path, "game JSON file");
  check->add_option("--payoff", check_payoff_path, "payoff JSON file")->required();
  check->add_option("--dist", check_dist, "distribution file, \"uniform\", or \"walk\"")
      ->capture_default_str();
  check->add_option("--samples", check_samples_path,
                    "replay an existing samples JSONL instead of drawing");
  check->add_option("--held-out", check_held_out, "fresh draws to test")->capture_default_str();
  check->add_option("--epsilon", check_epsilon, "violation-rate tolerance")
      ->capture_default_str();
  check->callback([&] {
    const PayoffVector x = payoff_from_json(read_json_file(check_payoff_path));
    StabilityReport report;
    if (!check_samples_path.empty()) {
      report = check_stability_on_samples(x, read_samples_file(check_samples_path),
                                          check_epsilon);
    } else {
      if (check_game_path.empty()) {
        throw std::invalid_argument("check needs --samples, or --game to draw from");
      }
      const Game game = game_from_json(read_json_file(check_game_path));
      const CoalitionDistribution dist = resolve_dist(check_dist, game);
      Rng rng(seed);
      report = check_stability(x, game, dist, check_held_out, rng, check_epsilon);
    }
    emit(json_text(stability_report_to_json(report)), out_path);
  });

  // ---- reduce ------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "translate between game representations");
  std::string reduce_from;
  std::string reduce_to;
  std::string reduce_in;
  reduce->add_option("--from", reduce_from, "input kind")
      ->required()
      ->transform(CLI::IsMember({"cnf", "dnf", "minsum"}));
  reduce->add_option("--to", reduce_to, "output kind")
      ->required()
      ->transform(CLI::IsMember({"minsum", "mcnet", "flow"}));
  reduce->add_option("--in", reduce_in, "input JSON file")->required();
  reduce->callback([&] {
    const Json doc = read_json_file(reduce_in);
    Game result = [&]() -> Game {
      if (reduce_from == "cnf") {
        const Formula phi = formula_from_json(doc);
        if (reduce_to == "minsum") return Game(cnf_to_minsum(phi));
        if (reduce_to == "flow") return Game(minsum_to_flow(cnf_to_minsum(phi)));
        throw std::invalid_argument("reduce: cnf converts to minsum or flow");
      }
      if (reduce_from == "dnf") {
        if (reduce_to != "mcnet") throw std::invalid_argument("reduce: dnf converts to mcnet");
        return Game(dnf_to_mcnet(formula_from_json(doc)));
      }
      // minsum
      if (reduce_to != "flow") throw std::invalid_argument("reduce: minsum converts to flow");
      const Game game = game_from_json(doc);
      const auto* ms = std::get_if<MinSum>(&game);
      if (!ms) throw std::invalid_argument("reduce: --in is not a minsum game document");
      return Game(minsum_to_flow(*ms));
    }();
    emit(json_text(game_to_json(result)), out_path);
  });

  // ---- experiment --------------------------------------------------------
  auto* exp = app.add_subcommand("experiment", "run seeded multi-trial experiments");
  std::string exp_type = "stability";
  std::string exp_game_path;
  std::string exp_dist;
  double exp_epsilon = 0.1;
  double exp_delta = 0.1;
  std::uint64_t exp_m = 0;
  std::uint32_t exp_trials = 1;
  std::uint64_t exp_held_out = 10000;
  std::uint32_t exp_cos_cap = 16;
  std::uint32_t exp_ttg_r_max = 64;
  SpecFlags exp_spec;
  exp->add_option("--type", exp_type, "experiment type")
      ->required()
      ->transform(CLI::IsMember({"learning", "stability"}));
  auto* exp_game_opt = exp->add_option("--game", exp_game_path, "fixed game JSON file");
  exp_spec.attach(exp);
  exp_spec.class_opt->excludes(exp_game_opt);
  exp->add_option("--dist", exp_dist,
                  "distribution file, \"uniform\", or \"walk\" (defaults per class)");
  exp->add_option("--epsilon", exp_epsilon, "accuracy target")->capture_default_str();
  exp->add_option("--delta", exp_delta, "confidence target")->capture_default_str();
  auto* exp_m_opt = exp->add_option("--m", exp_m, "training draws (omit to size from eps/delta)");
  exp->add_option("--trials", exp_trials, "seeded trials")->capture_default_str();
  exp->add_option("--held-out", exp_held_out, "fresh test draws per trial")
      ->capture_default_str();
  exp->add_option("--cos-cap", exp_cos_cap, "record exact CoS when n <= cap (stability)")
      ->capture_default_str();
  exp->add_option("--ttg-r-max", exp_ttg_r_max, "tolerance ladder depth for the ttg learner")
      ->capture_default_str();
  exp->callback([&] {
    ExperimentConfig cfg;
    cfg.type = exp_type == "learning" ? ExperimentConfig::Type::Learning
                                      : ExperimentConfig::Type::Stability;
    if (!exp_game_path.empty()) {
      cfg.game = game_from_json(read_json_file(exp_game_path));
    } else if (exp_spec.class_opt->count() > 0) {
      cfg.game_spec = exp_spec.build();
    } else {
      throw std::invalid_argument("experiment needs --game or --class");
    }
    if (!exp_dist.empty()) cfg.dist = resolve_dist(exp_dist, cfg.game);
    cfg.epsilon = exp_epsilon;
    cfg.delta = exp_delta;
    if (exp_m_opt->count() > 0) cfg.m = exp_m;
    cfg.trials = exp_trials;
    cfg.held_out = exp_held_out;
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.cos_cap = exp_cos_cap;
    cfg.ttg_r_max = exp_ttg_r_max;
    const MetricsReport report = run_experiment(cfg);
    std::cerr << "wall clock: " << report.wall_clock_ms << " ms, successes "
              << report.success_count << "/" << report.trials.size() << "\n";
    emit(format == "csv" ? report_to_csv(report) : json_text(report_to_json(report)), out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const LearnFailure& failure) {
    std::cerr << "error: " << failure.message << "\n";
    return failure.exit_code;
  } catch (const coopl::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const coopl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
