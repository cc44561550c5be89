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
// Multi-trial experiment driver. Each trial derives its own seed from the
// base seed and the trial index, so reports are identical regardless of how
// many worker threads run them, and reruns with the same configuration are
// byte-identical (wall-clock time is reported separately, never serialized).

#ifndef COOPL_EXPERIMENT_HPP_
#define COOPL_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopl/distributions.hpp"
#include "coopl/games.hpp"
#include "coopl/reductions.hpp"
#include "coopl/serialization.hpp"

namespace coopl {

struct ExperimentConfig {
  enum class Type { Learning, Stability };
  Type type = Type::Stability;

  // Exactly one of game / game_spec: a fixed game shared by all trials, or
  // a fresh random game per trial.
  std::optional<Game> game;
  std::optional<GameClassSpec> game_spec;

  // Defaults to the uniform coalition distribution; flow games default to
  // the random-walk path distribution over their own network.
  std::optional<CoalitionDistribution> dist;

  double epsilon = 0.1;
  double delta = 0.1;
  std::optional<std::uint64_t> m;  // training draws; absent = sized from (epsilon, delta)
  std::uint32_t trials = 1;
  std::uint64_t held_out = 10000;
  std::uint64_t seed = 0;
  std::uint32_t jobs = 1;
  std::uint32_t cos_cap = 16;  // stability trials record the exact CoS when n <= cap
  std::uint32_t ttg_r_max = 64;
};

struct TrialRow {
  std::uint32_t trial = 0;
  std::uint64_t seed = 0;
  double rate = 0.0;  // held-out error rate (learning) or violation rate (stability)
  bool success = false;
  std::string note;  // empty on success paths; learner status otherwise
  std::optional<Rational> payment_total;  // stability only
  std::optional<Rational> cos_value;      // stability only, small games
};

struct MetricsReport {
  std::vector<TrialRow> trials;
  std::uint32_t success_count = 0;
  std::uint64_t m_used = 0;
  std::string m_formula;
  double wall_clock_ms = 0.0;
  Json config_echo;
  std::string tool_version;
};

// Sizes the training set for the configured class when cfg.m is absent;
// returns the count and the formula it came from.
std::pair<std::uint64_t, std::string> resolve_sample_count(const ExperimentConfig& cfg);

MetricsReport run_learning_experiment(const ExperimentConfig& cfg);
MetricsReport run_stability_experiment(const ExperimentConfig& cfg);
MetricsReport run_experiment(const ExperimentConfig& cfg);

// Everything but wall-clock, which goes to logs only.
Json report_to_json(const MetricsReport& report);
// Per-trial rows; header trial,seed,rate,success,note.
std::string report_to_csv(const MetricsReport& report);

// Labeled corpus for a formula game: one sample per listed assignment,
// optionally doubled with the companion (S_T without the shared player,
// labeled 0) that the reduction's analysis uses.
SampleSet cnf_sample_corpus(const Formula& phi,
                            const std::vector<std::vector<bool>>& assignments,
                            bool companion_samples);

// Pushes an empirical distribution over min-sum coalitions forward to the
// corresponding layered-network edge sets.
EmpiricalDist pushforward_to_edges(const EmpiricalDist& dist, const MinSum& game);

}  // namespace coopl

#endif  // COOPL_EXPERIMENT_HPP_
