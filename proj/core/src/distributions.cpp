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

#include "coopl/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coopl/errors.hpp"

namespace coopl {
namespace {

constexpr int kWalkRetryCap = 10000;

}  // namespace

std::uint32_t player_count(const CoalitionDistribution& dist) {
  if (const auto* u = std::get_if<UniformDist>(&dist)) return u->n;
  if (const auto* p = std::get_if<ProductDist>(&dist)) {
    return static_cast<std::uint32_t>(p->probs.size());
  }
  if (const auto* e = std::get_if<EmpiricalDist>(&dist)) {
    return e->support.empty() ? 0u : e->support[0].player_count();
  }
  return static_cast<std::uint32_t>(std::get<RandomWalkPathDist>(dist).net.edges.size());
}

void validate(const CoalitionDistribution& dist) {
  if (const auto* u = std::get_if<UniformDist>(&dist)) {
    if (u->n == 0) throw std::invalid_argument("uniform distribution needs players");
  } else if (const auto* p = std::get_if<ProductDist>(&dist)) {
    if (p->probs.empty()) throw std::invalid_argument("product distribution needs players");
    for (double q : p->probs) {
      if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("product probabilities must lie in [0, 1]");
      }
    }
  } else if (const auto* e = std::get_if<EmpiricalDist>(&dist)) {
    if (e->support.empty() || e->support.size() != e->probs.size()) {
      throw std::invalid_argument("empirical support/probability size mismatch");
    }
    double total = 0.0;
    for (double q : e->probs) {
      if (!(q >= 0.0)) throw std::invalid_argument("empirical probabilities must be >= 0");
      total += q;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("empirical probabilities must sum to 1");
    }
    for (const auto& s : e->support) {
      if (s.player_count() != e->support[0].player_count()) {
        throw std::invalid_argument("empirical support mixes player counts");
      }
    }
  } else {
    const auto& w = std::get<RandomWalkPathDist>(dist);
    validate(Game(w.net));
    if (!has_source_sink_path(w.net)) {
      throw std::invalid_argument("walk network has no source-to-sink path");
    }
  }
}

std::vector<std::uint32_t> draw_walk(const RandomWalkPathDist& dist, Rng& rng) {
  const FlowNetwork& net = dist.net;
  std::vector<std::vector<std::uint32_t>> out(net.vertex_count);
  for (std::uint32_t e = 0; e < net.edges.size(); ++e) {
    out[net.edges[e].from].push_back(e);
  }
  for (int attempt = 0; attempt < kWalkRetryCap; ++attempt) {
    std::vector<std::uint32_t> walk;
    std::uint32_t at = net.source;
    std::uint32_t visited = 1;
    while (at != net.sink) {
      if (visited >= net.vertex_count) break;  // next step would exceed |V| vertices
      const auto& options = out[at];
      if (options.empty()) break;
      const auto e = options[rng.below(options.size())];
      walk.push_back(e);
      at = net.edges[e].to;
      ++visited;
    }
    if (at == net.sink && !walk.empty()) return walk;
  }
  throw LimitError("draw_walk: retry cap reached without completing a walk");
}

Coalition draw(const CoalitionDistribution& dist, Rng& rng) {
  if (const auto* u = std::get_if<UniformDist>(&dist)) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < u->n; ++i) {
      if (rng.next_u64() & 1) members.push_back(i);
    }
    return Coalition(u->n, std::move(members));
  }
  if (const auto* p = std::get_if<ProductDist>(&dist)) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < p->probs.size(); ++i) {
      if (rng.bernoulli(p->probs[i])) members.push_back(i);
    }
    return Coalition(static_cast<std::uint32_t>(p->probs.size()), std::move(members));
  }
  if (const auto* e = std::get_if<EmpiricalDist>(&dist)) {
    const double u = rng.uniform_real();
    double acc = 0.0;
    for (std::size_t i = 0; i < e->probs.size(); ++i) {
      acc += e->probs[i];
      if (u < acc) return e->support[i];
    }
    return e->support.back();  // guards against accumulated rounding
  }
  const auto& w = std::get<RandomWalkPathDist>(dist);
  auto walk = draw_walk(w, rng);
  std::sort(walk.begin(), walk.end());
  walk.erase(std::unique(walk.begin(), walk.end()), walk.end());
  return Coalition(static_cast<std::uint32_t>(w.net.edges.size()), std::move(walk));
}

SampleSet sample_game(const Game& game, const CoalitionDistribution& dist, std::uint64_t m,
                      Rng& rng) {
  validate(dist);
  if (player_count(game) != player_count(dist)) {
    throw std::invalid_argument("sample_game: game and distribution player counts differ");
  }
  SampleSet out;
  out.n = player_count(game);
  out.seed = rng.seed();
  out.samples.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    Coalition s = draw(dist, rng);
    Rational v = evaluate(game, s);
    out.samples.push_back({std::move(s), std::move(v)});
  }
  return out;
}

std::uint64_t sample_complexity_finite(double eps, double delta, double log_class_size) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(log_class_size >= 0.0)) throw std::invalid_argument("log_class_size must be >= 0");
  const double m = (log_class_size + std::log(1.0 / delta)) / eps;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(m)));
}

std::uint64_t sample_complexity_ttg_values(std::uint32_t k, double eps, double delta) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  const double m = static_cast<double>(k) * std::log(1.0 / delta) / eps;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(m)));
}

}  // namespace coopl
