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
// Compact cooperative-game representations and their exact evaluators.
// Players are 0-based everywhere. Every evaluator returns 0 on the empty
// coalition except the MC-net rule sum, whose rules may legitimately apply
// to the empty set.

#ifndef COOPL_GAMES_HPP_
#define COOPL_GAMES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coopl/coalition.hpp"
#include "coopl/rational.hpp"
#include "coopl/rng.hpp"

namespace coopl {

enum class GameClass { Wvg, VectorWvg, Ttg, Isg, Flow, MinSum, McNet, Skill };

std::string to_string(GameClass cls);
GameClass game_class_from_string(const std::string& name);

// Weighted voting: v(S) = 1 iff the member weight sum reaches the quota.
struct Wvg {
  std::vector<Rational> weights;
  Rational quota;
  friend bool operator==(const Wvg&, const Wvg&) = default;
};

// Conjunction of k weighted voting games over shared players.
struct VectorWvg {
  std::vector<std::vector<Rational>> weights;  // k rows of n weights
  std::vector<Rational> quotas;                // k quotas
  friend bool operator==(const VectorWvg&, const VectorWvg&) = default;
};

struct TtgTask {
  Rational threshold;
  Rational value;
  friend bool operator==(const TtgTask&, const TtgTask&) = default;
};

// Threshold tasks: v(S) is the value of the best task whose threshold the
// member weight sum reaches. The zero task (threshold 0, value 0) is always
// implicitly present and never stored.
struct Ttg {
  std::vector<Rational> weights;
  std::vector<TtgTask> tasks;  // strictly increasing thresholds and values
  friend bool operator==(const Ttg&, const Ttg&) = default;
};

// Induced subgraph game: v(S) sums pair weights with both endpoints in S.
struct Isg {
  std::uint32_t n = 0;
  std::vector<Rational> pair_weights;  // pairs (i, j), i < j, lexicographic
  friend bool operator==(const Isg&, const Isg&) = default;
};

std::size_t isg_pair_count(std::uint32_t n);
std::size_t isg_pair_index(std::uint32_t n, std::uint32_t i, std::uint32_t j);

struct FlowEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  Rational capacity;
  friend bool operator==(const FlowEdge&, const FlowEdge&) = default;
};

// Players are edges; v(S) is the max source-to-sink flow through the
// subnetwork containing exactly the edges in S.
struct FlowNetwork {
  std::uint32_t vertex_count = 0;
  std::uint32_t source = 0;
  std::uint32_t sink = 0;
  std::vector<FlowEdge> edges;
  friend bool operator==(const FlowNetwork&, const FlowNetwork&) = default;
};

// v(S) = min over k non-negative integer vectors of the member sum.
struct MinSum {
  std::vector<std::vector<std::int64_t>> vectors;  // k rows of n entries
  friend bool operator==(const MinSum&, const MinSum&) = default;
};

// Marginal-contribution rule: applies to S when every positive literal is
// in S and no negative literal is.
struct McNetRule {
  std::vector<std::uint32_t> positives;
  std::vector<std::uint32_t> negatives;
  Rational value;
  friend bool operator==(const McNetRule&, const McNetRule&) = default;
};

struct McNet {
  std::uint32_t n = 0;
  std::vector<McNetRule> rules;
  friend bool operator==(const McNet&, const McNet&) = default;
};

enum class SkillMode { Count, Conjunctive };

// Coalitional skill game: K(S) is the union of member skills, a task is
// completed when its skill set is covered. Count mode counts completed
// tasks; Conjunctive mode pays 1 iff every starred task is completed.
struct SkillGame {
  std::uint32_t skill_count = 0;
  std::vector<std::vector<std::uint32_t>> player_skills;  // per player, sorted
  std::vector<std::vector<std::uint32_t>> tasks;          // per task, sorted
  SkillMode mode = SkillMode::Count;
  std::vector<std::uint32_t> starred;  // task indices, Conjunctive only
  friend bool operator==(const SkillGame&, const SkillGame&) = default;
};

using Game = std::variant<Wvg, VectorWvg, Ttg, Isg, FlowNetwork, MinSum, McNet, SkillGame>;

GameClass game_class(const Game& g);
std::uint32_t player_count(const Game& g);

// Throws std::invalid_argument when a representation invariant is violated
// (ragged weight rows, unsorted task thresholds, edge endpoints out of
// range, overlapping rule literals, ...).
void validate(const Game& g);

Rational evaluate(const Wvg& g, const Coalition& s);
Rational evaluate(const VectorWvg& g, const Coalition& s);
Rational evaluate(const Ttg& g, const Coalition& s);
Rational evaluate(const Isg& g, const Coalition& s);
Rational evaluate(const FlowNetwork& g, const Coalition& s);
Rational evaluate(const MinSum& g, const Coalition& s);
Rational evaluate(const McNet& g, const Coalition& s);
Rational evaluate(const SkillGame& g, const Coalition& s);
Rational evaluate(const Game& g, const Coalition& s);

// Bottleneck capacity of an ordered edge walk from source to sink; throws
// std::invalid_argument when the sequence is empty, disconnected, or does
// not run source to sink.
Rational path_value(const FlowNetwork& net, const std::vector<std::uint32_t>& edge_sequence);

// True when the full network admits source-to-sink flow.
bool has_source_sink_path(const FlowNetwork& net);

struct GameClassSpec {
  GameClass cls = GameClass::Wvg;
  std::uint32_t n = 4;  // players; for Flow, total edge count across layers
  std::uint32_t k = 3;  // tasks / weight rows / rules / layers, class-dependent
  std::int64_t weight_lo = 0;
  std::int64_t weight_hi = 10;
  std::int64_t value_lo = 1;
  std::int64_t value_hi = 100;
  std::optional<std::pair<std::int64_t, std::int64_t>> quota_range;
  std::uint32_t skill_count = 4;
  SkillMode skill_mode = SkillMode::Conjunctive;
};

// Deterministic in (spec, rng seed). Generated games always satisfy
// validate(); Flow games are layered (k layers of parallel edges), so
// random walks on them are simple source-to-sink paths.
Game random_game(const GameClassSpec& spec, Rng& rng);

}  // namespace coopl

#endif  // COOPL_GAMES_HPP_
