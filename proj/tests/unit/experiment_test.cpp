// Copyright 2026 The Coopl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Experiment harness: configuration checks, trial reproducibility, report
// formats, and the corpus generators built on the reductions.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "coopl/experiment.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace coopl;
using namespace coopl::testing;

namespace {

ExperimentConfig learning_config() {
  ExperimentConfig cfg;
  cfg.type = ExperimentConfig::Type::Learning;
  GameClassSpec spec;
  spec.cls = GameClass::Wvg;
  spec.n = 5;
  cfg.game_spec = spec;
  cfg.trials = 4;
  cfg.held_out = 400;
  cfg.seed = 2026;
  return cfg;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("configs must name exactly one game source and sane rates") {
  ExperimentConfig cfg = learning_config();
  cfg.game = Game(Wvg{{1, 1, 1, 1, 1}, 3});
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg.game.reset();
  cfg.game_spec.reset();
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

  ExperimentConfig bad = learning_config();
  bad.epsilon = 0.0;
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = learning_config();
  bad.delta = 1.0;
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = learning_config();
  bad.trials = 0;
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = learning_config();
  bad.dist = CoalitionDistribution(UniformDist{4});  // wrong player count
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
}

TEST_CASE("loose accuracy targets succeed on every trial") {
  ExperimentConfig cfg = learning_config();
  cfg.epsilon = 0.999;
  cfg.delta = 0.5;
  cfg.held_out = 200;
  const MetricsReport report = run_experiment(cfg);
  CHECK(report.trials.size() == 4);
  CHECK(report.success_count == 4);
  for (const auto& row : report.trials) {
    CHECK(row.success);
    CHECK(row.note.empty());
    CHECK(row.rate < 0.999);
  }
}

TEST_CASE("a constant game is learned exactly from zero samples") {
  ExperimentConfig cfg;
  cfg.type = ExperimentConfig::Type::Learning;
  cfg.game = Game(Isg{4, std::vector<Rational>(isg_pair_count(4), Rational(0))});
  cfg.m = 0;
  cfg.trials = 2;
  cfg.held_out = 300;
  const MetricsReport report = run_experiment(cfg);
  CHECK(report.m_used == 0);
  CHECK(report.m_formula == "explicit");
  for (const auto& row : report.trials) {
    CHECK(row.success);
    CHECK(row.rate == 0.0);
  }
}

TEST_CASE("support-restricted training gives zero error on the support") {
  // Train and test on the same 15 fixed coalitions of an ISG; the exact
  // linear solve replays them all.
  Rng rng(5150);
  GameClassSpec spec;
  spec.cls = GameClass::Isg;
  spec.n = 5;
  const Game game = random_game(spec, rng);
  std::vector<Coalition> support;
  for (const Coalition& s : all_coalitions(5))
    if (!s.is_empty() && s.size() <= 2) support.push_back(s);
  ExperimentConfig cfg;
  cfg.type = ExperimentConfig::Type::Learning;
  cfg.game = game;
  cfg.dist = CoalitionDistribution(
      EmpiricalDist{support, std::vector<double>(support.size(), 1.0 / support.size())});
  cfg.m = 200;
  cfg.trials = 2;
  cfg.held_out = 500;
  const MetricsReport report = run_experiment(cfg);
  for (const auto& row : report.trials) {
    CHECK(row.success);
    CHECK(row.rate == 0.0);
  }
}

TEST_CASE("stability trials record payments and the exact subsidy bound") {
  ExperimentConfig cfg;
  cfg.type = ExperimentConfig::Type::Stability;
  cfg.game = Game(Wvg{{1, 1, 1}, 2});
  cfg.epsilon = 0.2;
  cfg.delta = 0.2;
  cfg.trials = 3;
  cfg.held_out = 800;
  cfg.seed = 7;
  const MetricsReport report = run_experiment(cfg);
  CHECK(report.trials.size() == 3);
  for (const auto& row : report.trials) {
    REQUIRE(row.payment_total.has_value());
    REQUIRE(row.cos_value.has_value());
    CHECK(*row.cos_value == Rational(1, 2));
    // Sampled program never pays more than the exhaustive one.
    CHECK(*row.payment_total <= Rational(3, 2));
  }
}

TEST_CASE("stability trials skip the exact subsidy above the cap") {
  ExperimentConfig cfg;
  cfg.type = ExperimentConfig::Type::Stability;
  cfg.game = Game(Wvg{{1, 1, 1, 1, 1}, 3});
  cfg.cos_cap = 4;
  cfg.trials = 1;
  cfg.held_out = 100;
  const MetricsReport report = run_experiment(cfg);
  REQUIRE(report.trials.size() == 1);
  CHECK(report.trials[0].payment_total.has_value());
  CHECK_FALSE(report.trials[0].cos_value.has_value());
}

TEST_CASE("reports are identical across reruns and job counts") {
  ExperimentConfig cfg = learning_config();
  cfg.held_out = 200;
  const Json a = report_to_json(run_experiment(cfg));
  const Json b = report_to_json(run_experiment(cfg));
  CHECK(a.dump() == b.dump());
  cfg.jobs = 2;
  const Json c = report_to_json(run_experiment(cfg));
  CHECK(a.dump() == c.dump());
}

TEST_CASE("per-trial seeds differ and derive from the base seed") {
  ExperimentConfig cfg = learning_config();
  cfg.held_out = 100;
  const MetricsReport report = run_experiment(cfg);
  for (std::size_t t = 0; t < report.trials.size(); ++t) {
    CHECK(report.trials[t].trial == t);
    CHECK(report.trials[t].seed == derive_seed(cfg.seed, t));
    for (std::size_t u = t + 1; u < report.trials.size(); ++u)
      CHECK(report.trials[t].seed != report.trials[u].seed);
  }
}

TEST_CASE("json reports carry provenance but no wall clock") {
  ExperimentConfig cfg = learning_config();
  cfg.trials = 1;
  cfg.held_out = 50;
  const MetricsReport report = run_experiment(cfg);
  const Json j = report_to_json(report);
  CHECK(j.at("format") == "coopl-report");
  CHECK(j.at("trial_count") == 1);
  CHECK(j.contains("config"));
  CHECK(j.contains("m"));
  CHECK(j.contains("m_formula"));
  CHECK(j.contains("tool_version"));
  CHECK_FALSE(j.contains("wall_clock_ms"));
  CHECK(j.at("trials").size() == 1);

  const std::string csv = report_to_csv(report);
  CHECK(csv.rfind("trial,seed,rate,success,note", 0) == 0);
}

TEST_CASE("automatic sample counts follow the class-specific formulas") {
  ExperimentConfig cfg;
  cfg.type = ExperimentConfig::Type::Learning;
  GameClassSpec spec;
  spec.cls = GameClass::Wvg;
  spec.n = 6;
  cfg.game_spec = spec;
  cfg.epsilon = 0.1;
  cfg.delta = 0.05;
  const auto [m_wvg, f_wvg] = resolve_sample_count(cfg);
  CHECK(m_wvg == sample_complexity_finite(0.1, 0.05, 6 * std::log(2.0)));
  CHECK(f_wvg.find("ln(2)") != std::string::npos);

  spec.cls = GameClass::Flow;
  spec.n = 8;
  cfg.game_spec = spec;
  const auto [m_flow, f_flow] = resolve_sample_count(cfg);
  CHECK(m_flow == sample_complexity_finite(0.1, 0.05, 8 * std::log(9.0)));

  spec.cls = GameClass::Ttg;
  spec.n = 5;
  spec.k = 3;
  cfg.game_spec = spec;
  const auto [m_ttg, f_ttg] = resolve_sample_count(cfg);
  CHECK(m_ttg >= sample_complexity_ttg_values(3, 0.05, 0.025));

  cfg.m = 17;
  const auto [m_explicit, f_explicit] = resolve_sample_count(cfg);
  CHECK(m_explicit == 17);
  CHECK(f_explicit == "explicit");
}

TEST_CASE("formula corpora label assignments and optional companions") {
  const Formula phi{2, {{{0, true}, {1, true}}}};  // x0 or x1
  std::vector<std::vector<bool>> assignments = {
      {false, false}, {true, false}, {false, true}, {true, true}};
  const SampleSet plain = cnf_sample_corpus(phi, assignments, false);
  CHECK(plain.n == 5);
  REQUIRE(plain.samples.size() == 4);
  CHECK(plain.samples[0].value == Rational(0));
  CHECK(plain.samples[1].value == Rational(1));
  const SampleSet doubled = cnf_sample_corpus(phi, assignments, true);
  REQUIRE(doubled.samples.size() == 8);
  const MinSum f = cnf_to_minsum(phi);
  for (const auto& s : doubled.samples) {
    CHECK(s.value == evaluate(f, s.coalition));
    if (!s.coalition.contains(y_player(phi))) CHECK(s.value == Rational(0));
  }
}

TEST_CASE("edge pushforward preserves probabilities and values") {
  const MinSum g{{{2, 5}, {4, 1}}};
  const std::vector<Coalition> support = {Coalition(2, {0}), Coalition(2, {0, 1})};
  const EmpiricalDist dist{support, {0.3, 0.7}};
  const EmpiricalDist pushed = pushforward_to_edges(dist, g);
  REQUIRE(pushed.support.size() == 2);
  CHECK(pushed.probs == dist.probs);
  const FlowNetwork net = minsum_to_flow(g);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(pushed.support[i] == minsum_edge_coalition(g, support[i]));
    CHECK(evaluate(net, pushed.support[i]) == evaluate(g, support[i]));
  }
}

}  // TEST_SUITE
