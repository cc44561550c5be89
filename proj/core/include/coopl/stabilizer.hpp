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
// Probably-stable payoff divisions. pac_stabilize minimizes the total
// payment subject to x(S_j) >= v_j over the training samples only (the
// sampled relaxation of the exhaustive core program); with enough samples
// the result is unstable on at most an eps probability mass of coalitions.
// The exhaustive variants enumerate every nonempty coalition and are
// restricted to small player counts.

#ifndef COOPL_STABILIZER_HPP_
#define COOPL_STABILIZER_HPP_

#include <cstdint>

#include "coopl/distributions.hpp"
#include "coopl/games.hpp"
#include "coopl/lp.hpp"
#include "coopl/rational.hpp"

namespace coopl {

struct PayoffVector {
  std::vector<Rational> x;
  Rational total() const {
    Rational t;
    for (const auto& v : x) t += v;
    return t;
  }
  friend bool operator==(const PayoffVector&, const PayoffVector&) = default;
};

// Minimum-total payoff satisfying every training constraint exactly.
// Duplicate coalitions collapse to their strongest constraint. Throws
// std::invalid_argument on an unsatisfiable empty-coalition sample
// (v({}) > 0), the only way the program can be infeasible.
PayoffVector pac_stabilize(const SampleSet& samples);

struct CosResult {
  Rational cos_value;        // lp_optimum - v(N), never negative
  Rational lp_optimum;       // minimum total payment covering every coalition
  PayoffVector witness;      // attains lp_optimum
  friend bool operator==(const CosResult&, const CosResult&) = default;
};

// Exhaustive core relaxation: min sum x_i s.t. x(S) >= v(S) for every
// nonempty S. cap guards the 2^n enumeration (throws std::invalid_argument
// when player_count > cap).
CosResult cost_of_stability_exact(const Game& game, std::uint32_t cap = 16);

// True iff the cost of stability is zero.
bool core_nonempty(const Game& game, std::uint32_t cap = 16);

struct StabilityReport {
  std::uint64_t tested = 0;
  std::uint64_t violations = 0;
  double empirical_rate = 0.0;
  double epsilon = 0.0;  // tolerance the rate is compared against
  bool passed = false;   // empirical_rate < epsilon
};

// Draws n_test fresh coalitions and counts exact violations x(S) < v(S).
StabilityReport check_stability(const PayoffVector& x, const Game& game,
                                const CoalitionDistribution& dist, std::uint64_t n_test,
                                Rng& rng, double epsilon);

// Violation count over an existing sample set (no drawing); a payoff from
// pac_stabilize always reports zero here.
StabilityReport check_stability_on_samples(const PayoffVector& x, const SampleSet& samples,
                                           double epsilon);

}  // namespace coopl

#endif  // COOPL_STABILIZER_HPP_
