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
// Consistent learners: each fits a hypothesis in its target class that
// replays every training sample exactly, or reports why none exists. With
// sample counts from the distributions module the hypotheses are probably
// approximately correct on fresh draws from the training distribution.

#ifndef COOPL_LEARNERS_HPP_
#define COOPL_LEARNERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopl/coalition.hpp"
#include "coopl/distributions.hpp"
#include "coopl/games.hpp"
#include "coopl/rational.hpp"

namespace coopl {

enum class LearnStatus {
  Ok,
  NotRealizable,  // no hypothesis in the class replays the samples
  NotAPath,       // a flow sample's edge set is not a simple source-sink path
  Inconsistent,   // the induced linear system has no solution
};

std::string to_string(LearnStatus status);

template <typename H>
struct LearnResult {
  LearnStatus status = LearnStatus::Ok;
  std::optional<H> hypothesis;  // engaged iff status == Ok
  std::string detail;
  // Set when a bounded search (the threshold-task tolerance ladder) ran out
  // before a decision; refines the failure, never accompanies Ok.
  bool limit_hit = false;
  bool ok() const { return status == LearnStatus::Ok; }
};

// Max-label edge weights for path-valued samples: each observed edge gets
// the largest value among its observing paths; unobserved edges keep 0.
struct LearnedEdgeWeights {
  std::vector<Rational> edge_weights;
  Rational predict(const Coalition& edge_set) const {
    if (edge_set.is_empty()) return 0;
    Rational best;
    bool first = true;
    for (auto e : edge_set.members()) {
      if (first || edge_weights[e] < best) best = edge_weights[e];
      first = false;
    }
    return best;
  }
  friend bool operator==(const LearnedEdgeWeights&, const LearnedEdgeWeights&) = default;
};

// Requires every sample coalition to be a simple source-to-sink path in the
// topology (capacities of `topology` are ignored) and every value >= 0.
LearnResult<LearnedEdgeWeights> learn_flow_paths(const SampleSet& samples,
                                                 const FlowNetwork& topology);

struct TtgLearnOptions {
  std::uint32_t r_max = 64;
  // When true the feasibility program adds the tolerance instead of
  // subtracting it; the default subtracts, which is what makes value
  // separation strict.
  bool additive_tolerance = false;
};

struct TtgHypothesis {
  Ttg game;
  std::vector<Rational> observed_values;  // distinct positive values, ascending
  std::vector<std::uint32_t> sigma;       // per distinct coalition: value index, 0 = none
  std::uint32_t r_used = 0;
  friend bool operator==(const TtgHypothesis&, const TtgHypothesis&) = default;
};

// Fits weights and one task per distinct observed positive value via the
// exact feasibility program with separation tolerance 2^-r, trying
// r = 0, 1, ..., r_max and keeping the first feasible fit. Sample values
// must be >= 0.
LearnResult<TtgHypothesis> learn_ttg(const SampleSet& samples, TtgLearnOptions options = {});

// Solves the exact linear system v(S_j) = sum of pair weights inside S_j.
// Underdetermined pairs default to weight 0; contradictory samples yield
// Inconsistent.
LearnResult<Isg> learn_isg(const SampleSet& samples);

// Fits non-negative weights and a quota >= 1 separating winning from losing
// samples (losers by margin 1). Sample values must be exactly 0 or 1.
LearnResult<Wvg> learn_wvg(const SampleSet& samples);

// Conjunctive skill hypothesis: the required skill set is the intersection
// of the skill unions of all positively labeled coalitions.
struct CtsgHypothesis {
  std::uint32_t skill_count = 0;
  std::vector<std::vector<std::uint32_t>> player_skills;
  std::vector<std::uint32_t> required_skills;  // sorted
  Rational predict(const Coalition& s) const;
  friend bool operator==(const CtsgHypothesis&, const CtsgHypothesis&) = default;
};

// Player skill sets are known side information; sample values must be
// exactly 0 or 1.
LearnResult<CtsgHypothesis> learn_ctsg(const SampleSet& samples,
                                       const std::vector<std::vector<std::uint32_t>>& player_skills,
                                       std::uint32_t skill_count);

}  // namespace coopl

#endif  // COOPL_LEARNERS_HPP_
