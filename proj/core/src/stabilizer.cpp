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

#include "coopl/stabilizer.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace coopl {
namespace {

Rational coalition_payment(const PayoffVector& x, const Coalition& s) {
  Rational total;
  for (auto i : s.members()) total += x.x[i];
  return total;
}

LinearConstraint cover_constraint(std::uint32_t n, const Coalition& s, Rational value) {
  LinearConstraint con;
  con.coeffs.assign(n, Rational(0));
  for (auto i : s.members()) con.coeffs[i] = 1;
  con.rel = Relation::Geq;
  con.rhs = std::move(value);
  return con;
}

}  // namespace

PayoffVector pac_stabilize(const SampleSet& samples) {
  const std::uint32_t n = samples.n;
  if (n == 0) throw std::invalid_argument("pac_stabilize: sample set has no players");

  // Strongest constraint per distinct coalition, in first-seen order.
  std::map<Coalition, Rational> strongest;
  std::vector<const Coalition*> order;
  for (const auto& sample : samples.samples) {
    if (sample.coalition.player_count() != n) {
      throw std::invalid_argument("pac_stabilize: sample player count mismatch");
    }
    if (sample.coalition.is_empty()) {
      if (sample.value > 0) {
        throw std::invalid_argument(
            "pac_stabilize: empty coalition with positive value is unsatisfiable");
      }
      continue;
    }
    auto [it, inserted] = strongest.try_emplace(sample.coalition, sample.value);
    if (inserted) {
      order.push_back(&it->first);
    } else if (sample.value > it->second) {
      it->second = sample.value;
    }
  }

  LinearProgram lp;
  lp.objective.assign(n, Rational(1));
  lp.constraints.reserve(order.size());
  for (const Coalition* s : order) {
    lp.constraints.push_back(cover_constraint(n, *s, strongest.at(*s)));
  }
  const LpOutcome out = solve_lp_via_dual(lp);
  if (out.status != LpStatus::Optimal) {
    throw std::logic_error("pac_stabilize: covering program unexpectedly unsolved");
  }
  return PayoffVector{out.assignment};
}

CosResult cost_of_stability_exact(const Game& game, std::uint32_t cap) {
  const std::uint32_t n = player_count(game);
  if (n > cap) {
    throw std::invalid_argument("cost_of_stability_exact: player count exceeds cap");
  }
  validate(game);

  LinearProgram lp;
  lp.objective.assign(n, Rational(1));
  const std::uint64_t limit = 1ULL << n;
  lp.constraints.reserve(limit - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const Coalition s = Coalition::from_mask(mask, n);
    lp.constraints.push_back(cover_constraint(n, s, evaluate(game, s)));
  }
  const LpOutcome out = solve_lp_via_dual(lp);
  if (out.status != LpStatus::Optimal) {
    throw std::logic_error("cost_of_stability_exact: covering program unexpectedly unsolved");
  }

  CosResult res;
  res.lp_optimum = out.objective;
  res.witness = PayoffVector{out.assignment};
  const Rational grand = evaluate(game, Coalition::full(n));
  res.cos_value = out.objective > grand ? out.objective - grand : Rational(0);
  return res;
}

bool core_nonempty(const Game& game, std::uint32_t cap) {
  return cost_of_stability_exact(game, cap).cos_value == 0;
}

StabilityReport check_stability(const PayoffVector& x, const Game& game,
                                const CoalitionDistribution& dist, std::uint64_t n_test,
                                Rng& rng, double epsilon) {
  if (x.x.size() != player_count(game)) {
    throw std::invalid_argument("check_stability: payoff width does not match game");
  }
  validate(dist);
  if (player_count(dist) != player_count(game)) {
    throw std::invalid_argument("check_stability: distribution player count mismatch");
  }
  StabilityReport report;
  report.tested = n_test;
  report.epsilon = epsilon;
  for (std::uint64_t i = 0; i < n_test; ++i) {
    const Coalition s = draw(dist, rng);
    if (coalition_payment(x, s) < evaluate(game, s)) ++report.violations;
  }
  report.empirical_rate =
      n_test == 0 ? 0.0 : static_cast<double>(report.violations) / static_cast<double>(n_test);
  report.passed = report.empirical_rate < epsilon;
  return report;
}

StabilityReport check_stability_on_samples(const PayoffVector& x, const SampleSet& samples,
                                           double epsilon) {
  if (x.x.size() != samples.n) {
    throw std::invalid_argument("check_stability_on_samples: payoff width mismatch");
  }
  StabilityReport report;
  report.tested = samples.samples.size();
  report.epsilon = epsilon;
  for (const auto& sample : samples.samples) {
    if (coalition_payment(x, sample.coalition) < sample.value) ++report.violations;
  }
  report.empirical_rate = report.tested == 0
                              ? 0.0
                              : static_cast<double>(report.violations) /
                                    static_cast<double>(report.tested);
  report.passed = report.empirical_rate < epsilon;
  return report;
}

}  // namespace coopl
