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
// Coalition distributions, i.i.d. labeled sampling, and the closed-form
// sample-complexity bounds used to size training corpora.

#ifndef COOPL_DISTRIBUTIONS_HPP_
#define COOPL_DISTRIBUTIONS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coopl/coalition.hpp"
#include "coopl/games.hpp"
#include "coopl/rational.hpp"
#include "coopl/rng.hpp"

namespace coopl {

// Each player is included independently with probability 1/2.
struct UniformDist {
  std::uint32_t n = 0;
};

// Player i is included independently with probability probs[i].
struct ProductDist {
  std::vector<double> probs;
};

// Draws support[i] with probability probs[i]; probs must sum to 1 within
// 1e-12 and all support coalitions must share one player count.
struct EmpiricalDist {
  std::vector<Coalition> support;
  std::vector<double> probs;
};

// Uniform random out-edge walk from source until the sink is reached; a
// walk that visits more than vertex_count vertices or strands at a vertex
// with no outgoing edge is rejected and redrawn. The drawn coalition is
// the set of traversed edges. Vertices may repeat, so on cyclic networks
// the edge set need not be a simple path.
struct RandomWalkPathDist {
  FlowNetwork net;
};

using CoalitionDistribution =
    std::variant<UniformDist, ProductDist, EmpiricalDist, RandomWalkPathDist>;

std::uint32_t player_count(const CoalitionDistribution& dist);

// Throws std::invalid_argument on probability/support violations, including
// walk networks with no source-to-sink path.
void validate(const CoalitionDistribution& dist);

Coalition draw(const CoalitionDistribution& dist, Rng& rng);

// The ordered edge walk behind one RandomWalkPath draw; always satisfies
// the path_value precondition. Throws LimitError after 10000 rejected walks.
std::vector<std::uint32_t> draw_walk(const RandomWalkPathDist& dist, Rng& rng);

struct Sample {
  Coalition coalition;
  Rational value;
  friend bool operator==(const Sample&, const Sample&) = default;
};

struct SampleSet {
  std::uint32_t n = 0;
  std::vector<Sample> samples;
  // Provenance carried into sample files: the generator seed and a canonical
  // rendering of the source distribution (empty when hand-built).
  std::uint64_t seed = 0;
  std::string dist_descriptor;
  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

// m i.i.d. draws labeled by exact evaluation. The game and distribution
// player counts must match.
SampleSet sample_game(const Game& game, const CoalitionDistribution& dist, std::uint64_t m,
                      Rng& rng);

// Consistent-learner bound for a finite class: ceil((1/eps) * (log_class_size
// + ln(1/delta))). Requires eps, delta in (0, 1) and log_class_size >= 0.
std::uint64_t sample_complexity_finite(double eps, double delta, double log_class_size);

// Draw count after which every threshold-task value with class probability
// mass at least eps/k has appeared with probability at least 1 - delta:
// ceil(k * (1/eps) * ln(1/delta)), floored at 1.
std::uint64_t sample_complexity_ttg_values(std::uint32_t k, double eps, double delta);

}  // namespace coopl

#endif  // COOPL_DISTRIBUTIONS_HPP_
