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

#include "coopl/learners.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "coopl/lp.hpp"

namespace coopl {
namespace {

// Distinct (coalition, value) training pairs in first-seen order; a
// coalition seen with two values is flagged, since no function fits it.
struct Dedup {
  std::vector<std::pair<Coalition, Rational>> pairs;
  std::optional<std::size_t> conflict;  // index into samples of the clash
};

Dedup dedupe(const SampleSet& samples) {
  Dedup out;
  std::map<Coalition, std::size_t> seen;
  for (std::size_t j = 0; j < samples.samples.size(); ++j) {
    const auto& s = samples.samples[j];
    if (s.coalition.player_count() != samples.n) {
      throw std::invalid_argument("sample player count does not match sample set");
    }
    auto [it, inserted] = seen.try_emplace(s.coalition, out.pairs.size());
    if (inserted) {
      out.pairs.emplace_back(s.coalition, s.value);
    } else if (out.pairs[it->second].second != s.value) {
      out.conflict = j;
      return out;
    }
  }
  return out;
}

void require_nonnegative_values(const SampleSet& samples, const char* who) {
  for (const auto& s : samples.samples) {
    if (s.value < 0) {
      throw std::invalid_argument(std::string(who) + ": sample values must be >= 0");
    }
  }
}

void require_binary_values(const SampleSet& samples, const char* who) {
  for (const auto& s : samples.samples) {
    if (s.value != 0 && s.value != 1) {
      throw std::invalid_argument(std::string(who) + ": sample values must be 0 or 1");
    }
  }
}

}  // namespace

std::string to_string(LearnStatus status) {
  switch (status) {
    case LearnStatus::Ok: return "ok";
    case LearnStatus::NotRealizable: return "not-realizable";
    case LearnStatus::NotAPath: return "not-a-path";
    case LearnStatus::Inconsistent: return "inconsistent";
  }
  throw std::logic_error("unknown learn status");
}

LearnResult<LearnedEdgeWeights> learn_flow_paths(const SampleSet& samples,
                                                 const FlowNetwork& topology) {
  LearnResult<LearnedEdgeWeights> result;
  validate(Game(topology));
  if (samples.n != topology.edges.size()) {
    throw std::invalid_argument("learn_flow_paths: sample width does not match topology");
  }
  require_nonnegative_values(samples, "learn_flow_paths");

  // A coalition is a simple source-to-sink path iff walking unique
  // out-edges from the source consumes every edge exactly once, never
  // revisits a vertex, and stops at the sink.
  for (std::size_t j = 0; j < samples.samples.size(); ++j) {
    const auto& members = samples.samples[j].coalition.members();
    std::vector<std::vector<std::uint32_t>> out(topology.vertex_count);
    for (auto e : members) out[topology.edges[e].from].push_back(e);
    std::vector<char> visited(topology.vertex_count, 0);
    std::uint32_t at = topology.source;
    std::size_t used = 0;
    bool simple = !members.empty();
    while (simple && at != topology.sink) {
      if (visited[at] || out[at].size() != 1) {
        simple = false;
        break;
      }
      visited[at] = 1;
      at = topology.edges[out[at][0]].to;
      ++used;
    }
    if (!simple || at != topology.sink || visited[at] || used != members.size()) {
      result.status = LearnStatus::NotAPath;
      result.detail = "sample " + std::to_string(j) + " is not a simple source-sink path";
      return result;
    }
  }

  LearnedEdgeWeights h;
  h.edge_weights.assign(topology.edges.size(), Rational(0));
  for (const auto& s : samples.samples) {
    for (auto e : s.coalition.members()) {
      if (s.value > h.edge_weights[e]) h.edge_weights[e] = s.value;
    }
  }
  for (std::size_t j = 0; j < samples.samples.size(); ++j) {
    if (h.predict(samples.samples[j].coalition) != samples.samples[j].value) {
      result.status = LearnStatus::NotRealizable;
      result.detail = "replay mismatch on sample " + std::to_string(j);
      return result;
    }
  }
  result.hypothesis = std::move(h);
  return result;
}

namespace {

struct TtgProgram {
  LinearProgram lp;
  std::size_t n = 0;       // weight variables
  std::size_t values = 0;  // threshold variables (one per distinct value)
};

// Variables: w_0..w_{n-1}, q_1..q_l, q_dummy. Minimizing the variable sum
// keeps the objective non-negative so the dual route applies; any feasible
// point already replays the samples exactly.
TtgProgram build_ttg_program(const Dedup& dd, std::uint32_t n,
                             const std::vector<Rational>& values,
                             const std::vector<std::uint32_t>& sigma,
                             const Rational& tolerance, bool add_tolerance) {
  TtgProgram prog;
  prog.n = n;
  prog.values = values.size();
  const std::size_t l = values.size();
  const std::size_t nvars = n + l + 1;
  const std::size_t dummy = n + l;  // one threshold past the largest value
  prog.lp.objective.assign(nvars, Rational(1));
  prog.lp.lower_bounds.assign(nvars, Rational(0));
  if (l > 0 && !add_tolerance) prog.lp.lower_bounds[n] = tolerance;  // q_1 > q_0 = 0

  auto weight_row = [&](const Coalition& s) {
    std::vector<Rational> row(nvars, Rational(0));
    for (auto i : s.members()) row[i] = 1;
    return row;
  };

  for (std::size_t j = 0; j < dd.pairs.size(); ++j) {
    const auto& [coal, value] = dd.pairs[j];
    const std::uint32_t sj = sigma[j];
    if (sj > 0) {
      // w(S_j) >= q_{sigma(j)}
      auto row = weight_row(coal);
      row[n + sj - 1] = -1;
      prog.lp.constraints.push_back({std::move(row), Relation::Geq, Rational(0)});
    }
    // w(S_j) <= q_{sigma(j)+1} -/+ tolerance
    auto row = weight_row(coal);
    const std::size_t next = sj < l ? n + sj : dummy;
    row[next] = -1;
    prog.lp.constraints.push_back(
        {std::move(row), Relation::Leq, add_tolerance ? tolerance : -tolerance});
  }
  // Threshold chain 0 <= q_1 <= ... <= q_l <= q_dummy.
  for (std::size_t t = 0; t + 1 < l + 1 && l > 0; ++t) {
    std::vector<Rational> row(nvars, Rational(0));
    row[n + t] = -1;
    row[n + t + 1] = 1;
    prog.lp.constraints.push_back({std::move(row), Relation::Geq, Rational(0)});
  }
  return prog;
}

}  // namespace

LearnResult<TtgHypothesis> learn_ttg(const SampleSet& samples, TtgLearnOptions options) {
  LearnResult<TtgHypothesis> result;
  require_nonnegative_values(samples, "learn_ttg");
  const Dedup dd = dedupe(samples);
  if (dd.conflict) {
    result.status = LearnStatus::NotRealizable;
    result.detail =
        "sample " + std::to_string(*dd.conflict) + " contradicts an earlier sample";
    return result;
  }

  std::vector<Rational> values;
  for (const auto& [coal, value] : dd.pairs) {
    if (value > 0) values.push_back(value);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::uint32_t> sigma(dd.pairs.size(), 0);
  for (std::size_t j = 0; j < dd.pairs.size(); ++j) {
    const auto& v = dd.pairs[j].second;
    if (v > 0) {
      const auto it = std::lower_bound(values.begin(), values.end(), v);
      sigma[j] = static_cast<std::uint32_t>(it - values.begin()) + 1;
    }
  }

  const std::uint32_t n = samples.n;
  std::optional<LpOutcome> solved;
  std::uint32_t r_used = 0;
  for (std::uint32_t r = 0; r <= options.r_max; ++r) {
    const TtgProgram prog =
        build_ttg_program(dd, n, values, sigma, pow2_inverse(r), options.additive_tolerance);
    LpOutcome out = solve_lp_via_dual(prog.lp);
    if (out.status == LpStatus::Optimal) {
      solved = std::move(out);
      r_used = r;
      break;
    }
  }
  if (!solved) {
    // Distinguish "never realizable" from "tolerance ladder exhausted": with
    // tolerance 0 the program is the non-strict relaxation.
    const TtgProgram relaxed =
        build_ttg_program(dd, n, values, sigma, Rational(0), options.additive_tolerance);
    const bool relaxed_feasible = solve_lp_via_dual(relaxed.lp).status == LpStatus::Optimal;
    result.status = LearnStatus::NotRealizable;
    result.limit_hit = relaxed_feasible;
    result.detail = relaxed_feasible
                        ? "feasibility program infeasible for every tolerance up to 2^-" +
                              std::to_string(options.r_max)
                        : "no threshold-task game is consistent with the samples";
    return result;
  }

  TtgHypothesis h;
  h.observed_values = values;
  h.sigma = sigma;
  h.r_used = r_used;
  h.game.weights.assign(solved->assignment.begin(), solved->assignment.begin() + n);
  for (std::size_t t = 0; t < values.size(); ++t) {
    h.game.tasks.push_back({solved->assignment[n + t], values[t]});
  }

  for (std::size_t j = 0; j < samples.samples.size(); ++j) {
    const auto& s = samples.samples[j];
    if (evaluate(h.game, s.coalition) != s.value) {
      result.status = LearnStatus::NotRealizable;
      result.detail = "replay mismatch on sample " + std::to_string(j);
      return result;
    }
  }
  // The subtracted tolerance provably yields positive, strictly separated
  // thresholds; the added-tolerance variant can produce degenerate ones.
  try {
    validate(Game(h.game));
  } catch (const std::invalid_argument& e) {
    result.status = LearnStatus::NotRealizable;
    result.detail = std::string("hypothesis violates task invariants: ") + e.what();
    return result;
  }
  result.hypothesis = std::move(h);
  return result;
}

LearnResult<Isg> learn_isg(const SampleSet& samples) {
  LearnResult<Isg> result;
  const std::uint32_t n = samples.n;
  if (n == 0) throw std::invalid_argument("learn_isg: sample set has no players");
  const std::size_t pairs = isg_pair_count(n);

  const Dedup dd = dedupe(samples);
  if (dd.conflict) {
    result.status = LearnStatus::Inconsistent;
    result.detail =
        "sample " + std::to_string(*dd.conflict) + " contradicts an earlier sample";
    return result;
  }

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  rows.reserve(dd.pairs.size());
  for (const auto& [coal, value] : dd.pairs) {
    std::vector<Rational> row(pairs, Rational(0));
    const auto& m = coal.members();
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        row[isg_pair_index(n, m[a], m[b])] = 1;
      }
    }
    rows.push_back(std::move(row));
    rhs.push_back(value);
  }

  const LinearSystemResult sol = solve_linear_system(rows, rhs);
  if (!sol.consistent) {
    result.status = LearnStatus::Inconsistent;
    result.detail = "sample equations have no exact solution";
    return result;
  }
  Isg h;
  h.n = n;
  h.pair_weights = sol.assignment;
  h.pair_weights.resize(pairs, Rational(0));  // no samples => no equations
  result.hypothesis = std::move(h);
  return result;
}

LearnResult<Wvg> learn_wvg(const SampleSet& samples) {
  LearnResult<Wvg> result;
  const std::uint32_t n = samples.n;
  if (n == 0) throw std::invalid_argument("learn_wvg: sample set has no players");
  require_binary_values(samples, "learn_wvg");

  const Dedup dd = dedupe(samples);
  if (dd.conflict) {
    result.status = LearnStatus::NotRealizable;
    result.detail =
        "sample " + std::to_string(*dd.conflict) + " contradicts an earlier sample";
    return result;
  }

  // Variables w_0..w_{n-1} >= 0 and quota q >= 1; winners reach q, losers
  // fall short by at least 1. An empty winning coalition is unsatisfiable
  // (w({}) = 0 < 1 <= q).
  LinearProgram lp;
  lp.objective.assign(n + 1, Rational(1));
  lp.lower_bounds.assign(n + 1, Rational(0));
  lp.lower_bounds[n] = 1;
  for (const auto& [coal, value] : dd.pairs) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (auto i : coal.members()) row[i] = 1;
    row[n] = -1;
    if (value == 1) {
      lp.constraints.push_back({std::move(row), Relation::Geq, Rational(0)});
    } else {
      lp.constraints.push_back({std::move(row), Relation::Leq, Rational(-1)});
    }
  }
  const LpOutcome out = solve_lp_via_dual(lp);
  if (out.status != LpStatus::Optimal) {
    result.status = LearnStatus::NotRealizable;
    result.detail = "no weighted voting game separates the samples";
    return result;
  }
  Wvg h;
  h.weights.assign(out.assignment.begin(), out.assignment.begin() + n);
  h.quota = out.assignment[n];
  for (std::size_t j = 0; j < samples.samples.size(); ++j) {
    const auto& s = samples.samples[j];
    if (evaluate(h, s.coalition) != s.value) {
      result.status = LearnStatus::NotRealizable;
      result.detail = "replay mismatch on sample " + std::to_string(j);
      return result;
    }
  }
  result.hypothesis = std::move(h);
  return result;
}

Rational CtsgHypothesis::predict(const Coalition& s) const {
  if (s.is_empty()) return 0;
  std::vector<char> have(skill_count, 0);
  for (auto i : s.members()) {
    for (auto sk : player_skills[i]) have[sk] = 1;
  }
  for (auto sk : required_skills) {
    if (!have[sk]) return 0;
  }
  return 1;
}

LearnResult<CtsgHypothesis> learn_ctsg(
    const SampleSet& samples, const std::vector<std::vector<std::uint32_t>>& player_skills,
    std::uint32_t skill_count) {
  LearnResult<CtsgHypothesis> result;
  if (player_skills.size() != samples.n) {
    throw std::invalid_argument("learn_ctsg: player skill count does not match samples");
  }
  for (const auto& skills : player_skills) {
    for (auto sk : skills) {
      if (sk >= skill_count) {
        throw std::invalid_argument("learn_ctsg: skill id out of range");
      }
    }
  }
  require_binary_values(samples, "learn_ctsg");

  CtsgHypothesis h;
  h.skill_count = skill_count;
  h.player_skills = player_skills;

  // Most specific consistent hypothesis: required skills start at the full
  // universe and shrink to the intersection over positive examples.
  std::vector<char> required(skill_count, 1);
  for (const auto& s : samples.samples) {
    if (s.value != 1) continue;
    std::vector<char> have(skill_count, 0);
    for (auto i : s.coalition.members()) {
      for (auto sk : player_skills[i]) have[sk] = 1;
    }
    for (std::uint32_t sk = 0; sk < skill_count; ++sk) {
      if (!have[sk]) required[sk] = 0;
    }
  }
  for (std::uint32_t sk = 0; sk < skill_count; ++sk) {
    if (required[sk]) h.required_skills.push_back(sk);
  }

  for (std::size_t j = 0; j < samples.samples.size(); ++j) {
    const auto& s = samples.samples[j];
    if (h.predict(s.coalition) != s.value) {
      result.status = LearnStatus::NotRealizable;
      result.detail = "replay mismatch on sample " + std::to_string(j);
      return result;
    }
  }
  result.hypothesis = std::move(h);
  return result;
}

}  // namespace coopl
