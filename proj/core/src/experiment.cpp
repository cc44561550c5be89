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

#include "coopl/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>
#include <variant>

#include "coopl/learners.hpp"
#include "coopl/stabilizer.hpp"
#include "coopl/version.hpp"

namespace coopl {
namespace {

void validate_config(const ExperimentConfig& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
    throw std::invalid_argument("experiment: epsilon must lie in (0, 1)");
  }
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
    throw std::invalid_argument("experiment: delta must lie in (0, 1)");
  }
  if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (cfg.held_out < 1) throw std::invalid_argument("experiment: held_out must be >= 1");
  if (cfg.jobs < 1) throw std::invalid_argument("experiment: jobs must be >= 1");
  if (cfg.game.has_value() == cfg.game_spec.has_value()) {
    throw std::invalid_argument("experiment: configure exactly one of game / game_spec");
  }
  if (cfg.game) validate(*cfg.game);
  if (cfg.dist) {
    validate(*cfg.dist);
    const std::uint32_t n = cfg.game ? player_count(*cfg.game) : cfg.game_spec->n;
    if (player_count(*cfg.dist) != n) {
      throw std::invalid_argument("experiment: distribution player count mismatch");
    }
  }
}

GameClass config_class(const ExperimentConfig& cfg) {
  return cfg.game ? game_class(*cfg.game) : cfg.game_spec->cls;
}

std::uint32_t config_players(const ExperimentConfig& cfg) {
  return cfg.game ? player_count(*cfg.game) : cfg.game_spec->n;
}

std::uint32_t config_task_count(const ExperimentConfig& cfg) {
  if (cfg.game) {
    if (const auto* t = std::get_if<Ttg>(&*cfg.game)) {
      return static_cast<std::uint32_t>(t->tasks.size());
    }
    return 1;
  }
  return cfg.game_spec->k;
}

Game trial_game(const ExperimentConfig& cfg, Rng& rng) {
  if (cfg.game) return *cfg.game;
  return random_game(*cfg.game_spec, rng);
}

CoalitionDistribution trial_dist(const ExperimentConfig& cfg, const Game& game) {
  if (cfg.dist) return *cfg.dist;
  if (const auto* net = std::get_if<FlowNetwork>(&game)) {
    return RandomWalkPathDist{*net};
  }
  return UniformDist{player_count(game)};
}

using Hypothesis = std::variant<LearnedEdgeWeights, TtgHypothesis, Isg, Wvg, CtsgHypothesis>;

Rational predict(const Hypothesis& h, const Coalition& s) {
  if (const auto* f = std::get_if<LearnedEdgeWeights>(&h)) return f->predict(s);
  if (const auto* t = std::get_if<TtgHypothesis>(&h)) return evaluate(t->game, s);
  if (const auto* i = std::get_if<Isg>(&h)) return evaluate(*i, s);
  if (const auto* w = std::get_if<Wvg>(&h)) return evaluate(*w, s);
  return std::get<CtsgHypothesis>(h).predict(s);
}

struct FitOutcome {
  std::optional<Hypothesis> hypothesis;
  std::string note;
};

FitOutcome fit(const ExperimentConfig& cfg, const Game& game, const SampleSet& samples) {
  FitOutcome out;
  switch (game_class(game)) {
    case GameClass::Flow: {
      auto res = learn_flow_paths(samples, std::get<FlowNetwork>(game));
      if (res.ok()) {
        out.hypothesis = std::move(*res.hypothesis);
      } else {
        out.note = to_string(res.status) + ": " + res.detail;
      }
      return out;
    }
    case GameClass::Ttg: {
      TtgLearnOptions options;
      options.r_max = cfg.ttg_r_max;
      auto res = learn_ttg(samples, options);
      if (res.ok()) {
        out.hypothesis = std::move(*res.hypothesis);
      } else {
        out.note = to_string(res.status) + ": " + res.detail;
      }
      return out;
    }
    case GameClass::Isg: {
      auto res = learn_isg(samples);
      if (res.ok()) {
        out.hypothesis = std::move(*res.hypothesis);
      } else {
        out.note = to_string(res.status) + ": " + res.detail;
      }
      return out;
    }
    case GameClass::Wvg: {
      auto res = learn_wvg(samples);
      if (res.ok()) {
        out.hypothesis = std::move(*res.hypothesis);
      } else {
        out.note = to_string(res.status) + ": " + res.detail;
      }
      return out;
    }
    case GameClass::Skill: {
      const auto& sk = std::get<SkillGame>(game);
      if (sk.mode != SkillMode::Conjunctive) {
        throw std::invalid_argument("experiment: only conjunctive skill games have a learner");
      }
      auto res = learn_ctsg(samples, sk.player_skills, sk.skill_count);
      if (res.ok()) {
        out.hypothesis = std::move(*res.hypothesis);
      } else {
        out.note = to_string(res.status) + ": " + res.detail;
      }
      return out;
    }
    default:
      throw std::invalid_argument("experiment: no learner for class " +
                                  to_string(game_class(game)));
  }
}

Json spec_to_json(const GameClassSpec& spec) {
  Json j;
  j["class"] = to_string(spec.cls);
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["weight_lo"] = spec.weight_lo;
  j["weight_hi"] = spec.weight_hi;
  j["value_lo"] = spec.value_lo;
  j["value_hi"] = spec.value_hi;
  if (spec.quota_range) {
    j["quota_lo"] = spec.quota_range->first;
    j["quota_hi"] = spec.quota_range->second;
  }
  if (spec.cls == GameClass::Skill) {
    j["skills"] = spec.skill_count;
    j["skill_mode"] = spec.skill_mode == SkillMode::Count ? "count" : "conjunctive";
  }
  return j;
}

Json echo_config(const ExperimentConfig& cfg, std::uint64_t m_used) {
  Json j;
  j["type"] = cfg.type == ExperimentConfig::Type::Learning ? "learning" : "stability";
  j["epsilon"] = cfg.epsilon;
  j["delta"] = cfg.delta;
  j["m"] = m_used;
  j["m_explicit"] = cfg.m.has_value();
  j["trials"] = cfg.trials;
  j["held_out"] = cfg.held_out;
  j["seed"] = cfg.seed;
  if (cfg.game) j["game"] = game_to_json(*cfg.game);
  if (cfg.game_spec) j["game_spec"] = spec_to_json(*cfg.game_spec);
  if (cfg.dist) j["dist"] = dist_to_json(*cfg.dist);
  return j;
}

// Runs fn(trial) over 0..trials-1 on cfg.jobs workers; row order and
// content do not depend on the scheduling.
void for_each_trial(std::uint32_t trials, std::uint32_t jobs,
                    const std::function<void(std::uint32_t)>& fn) {
  if (jobs <= 1 || trials <= 1) {
    for (std::uint32_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  const std::uint32_t workers = std::min(jobs, trials);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint32_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint32_t t = next.fetch_add(1);
        if (t >= trials) return;
        try {
          fn(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

MetricsReport finish_report(const ExperimentConfig& cfg, std::vector<TrialRow> rows,
                            std::uint64_t m_used, std::string m_formula,
                            std::chrono::steady_clock::time_point started) {
  MetricsReport report;
  report.trials = std::move(rows);
  for (const auto& row : report.trials) {
    if (row.success) ++report.success_count;
  }
  report.m_used = m_used;
  report.m_formula = std::move(m_formula);
  report.wall_clock_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  report.config_echo = echo_config(cfg, m_used);
  report.tool_version = std::string(kToolName) + " " + std::string(kVersion);
  return report;
}

}  // namespace

std::pair<std::uint64_t, std::string> resolve_sample_count(const ExperimentConfig& cfg) {
  if (cfg.m) return {*cfg.m, "explicit"};
  const double eps = cfg.epsilon;
  const double delta = cfg.delta;
  const std::uint32_t n = config_players(cfg);
  if (cfg.type == ExperimentConfig::Type::Learning) {
    switch (config_class(cfg)) {
      case GameClass::Flow: {
        // Path games over n edges form a finite class of at most (n+1)^n
        // functions (each edge weight is one of the path values or absent).
        const std::uint64_t m =
            sample_complexity_finite(eps, delta, n * std::log(n + 1.0));
        return {m, "ceil((1/eps)*(n*ln(n+1) + ln(1/delta)))"};
      }
      case GameClass::Ttg: {
        const std::uint32_t k = config_task_count(cfg);
        const std::uint64_t m_values = sample_complexity_ttg_values(k, eps / 2, delta / 2);
        const double lp_phase =
            (2.0 / eps) * ((k + 1.0) * (n + 2.0) * std::log(2.0 / eps) + std::log(2.0 / delta));
        const auto m_lp = static_cast<std::uint64_t>(std::ceil(lp_phase));
        return {std::max(m_values, m_lp),
                "max(ceil(k*(2/eps)*ln(2/delta)), "
                "ceil((2/eps)*((k+1)*(n+2)*ln(2/eps) + ln(2/delta))))"};
      }
      default: {
        // 2^n stand-in bound: hypotheses are replayed exactly, so the
        // consistent-learner bound with |C| <= 2^n labelings applies.
        const std::uint64_t m = sample_complexity_finite(eps, delta, n * std::log(2.0));
        return {m, "ceil((1/eps)*(n*ln(2) + ln(1/delta)))"};
      }
    }
  }
  const std::uint64_t m = sample_complexity_finite(eps, delta, n * std::log(2.0));
  return {m, "ceil((1/eps)*(n*ln(2) + ln(1/delta)))"};
}

MetricsReport run_learning_experiment(const ExperimentConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  validate_config(cfg);
  const auto [m, formula] = resolve_sample_count(cfg);
  std::vector<TrialRow> rows(cfg.trials);

  for_each_trial(cfg.trials, cfg.jobs, [&](std::uint32_t t) {
    TrialRow row;
    row.trial = t;
    row.seed = derive_seed(cfg.seed, t);
    Rng rng(row.seed);
    const Game game = trial_game(cfg, rng);
    const CoalitionDistribution dist = trial_dist(cfg, game);
    const SampleSet samples = sample_game(game, dist, m, rng);
    const FitOutcome outcome = fit(cfg, game, samples);
    if (!outcome.hypothesis) {
      row.rate = 1.0;
      row.success = false;
      row.note = outcome.note;
    } else {
      std::uint64_t mismatches = 0;
      for (std::uint64_t i = 0; i < cfg.held_out; ++i) {
        const Coalition s = draw(dist, rng);
        if (predict(*outcome.hypothesis, s) != evaluate(game, s)) ++mismatches;
      }
      row.rate = static_cast<double>(mismatches) / static_cast<double>(cfg.held_out);
      row.success = row.rate < cfg.epsilon;
    }
    rows[t] = std::move(row);
  });

  return finish_report(cfg, std::move(rows), m, formula, started);
}

MetricsReport run_stability_experiment(const ExperimentConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  validate_config(cfg);
  const auto [m, formula] = resolve_sample_count(cfg);
  std::vector<TrialRow> rows(cfg.trials);

  // A fixed game's exact CoS is trial-independent; compute it once.
  std::optional<Rational> fixed_cos;
  if (cfg.game && player_count(*cfg.game) <= cfg.cos_cap) {
    fixed_cos = cost_of_stability_exact(*cfg.game, cfg.cos_cap).cos_value;
  }

  for_each_trial(cfg.trials, cfg.jobs, [&](std::uint32_t t) {
    TrialRow row;
    row.trial = t;
    row.seed = derive_seed(cfg.seed, t);
    Rng rng(row.seed);
    const Game game = trial_game(cfg, rng);
    const CoalitionDistribution dist = trial_dist(cfg, game);
    const SampleSet samples = sample_game(game, dist, m, rng);
    const PayoffVector x = pac_stabilize(samples);
    const StabilityReport check =
        check_stability(x, game, dist, cfg.held_out, rng, cfg.epsilon);
    row.rate = check.empirical_rate;
    row.success = check.passed;
    row.payment_total = x.total();
    if (fixed_cos) {
      row.cos_value = *fixed_cos;
    } else if (player_count(game) <= cfg.cos_cap) {
      row.cos_value = cost_of_stability_exact(game, cfg.cos_cap).cos_value;
    }
    rows[t] = std::move(row);
  });

  return finish_report(cfg, std::move(rows), m, formula, started);
}

MetricsReport run_experiment(const ExperimentConfig& cfg) {
  return cfg.type == ExperimentConfig::Type::Learning ? run_learning_experiment(cfg)
                                                      : run_stability_experiment(cfg);
}

Json report_to_json(const MetricsReport& report) {
  Json j;
  j["format"] = "coopl-report";
  j["config"] = report.config_echo;
  j["m"] = report.m_used;
  j["m_formula"] = report.m_formula;
  j["tool_version"] = report.tool_version;
  j["trial_count"] = report.trials.size();
  j["success_count"] = report.success_count;
  Json rows = Json::array();
  for (const auto& row : report.trials) {
    Json r;
    r["trial"] = row.trial;
    r["seed"] = row.seed;
    r["rate"] = row.rate;
    r["success"] = row.success;
    r["note"] = row.note;
    if (row.payment_total) {
      r["payment_total"] = rational_to_string(*row.payment_total);
      r["payment_total_float"] = to_double(*row.payment_total);
    }
    if (row.cos_value) {
      r["cos"] = rational_to_string(*row.cos_value);
      r["cos_float"] = to_double(*row.cos_value);
    }
    rows.push_back(std::move(r));
  }
  j["trials"] = std::move(rows);
  return j;
}

std::string report_to_csv(const MetricsReport& report) {
  std::ostringstream os;
  os << "trial,seed,rate,success,note\n";
  for (const auto& row : report.trials) {
    os << row.trial << ',' << row.seed << ',' << Json(row.rate).dump() << ','
       << (row.success ? "true" : "false") << ',' << row.note << '\n';
  }
  return os.str();
}

SampleSet cnf_sample_corpus(const Formula& phi,
                            const std::vector<std::vector<bool>>& assignments,
                            bool companion_samples) {
  validate(phi);
  const MinSum game = cnf_to_minsum(phi);
  SampleSet out;
  out.n = player_count(Game(game));
  for (const auto& assignment : assignments) {
    const Coalition s = cnf_assignment_to_coalition(phi, assignment);
    out.samples.push_back({s, evaluate(game, s)});
    if (companion_samples) {
      std::vector<std::uint32_t> without_y;
      for (auto p : s.members()) {
        if (p != y_player(phi)) without_y.push_back(p);
      }
      Coalition companion(out.n, std::move(without_y));
      out.samples.push_back({std::move(companion), Rational(0)});
    }
  }
  return out;
}

EmpiricalDist pushforward_to_edges(const EmpiricalDist& dist, const MinSum& game) {
  validate(CoalitionDistribution(dist));
  EmpiricalDist out;
  out.probs = dist.probs;
  out.support.reserve(dist.support.size());
  for (const auto& s : dist.support) {
    out.support.push_back(minsum_edge_coalition(game, s));
  }
  return out;
}

}  // namespace coopl
