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

#include "coopl/games.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "coopl/errors.hpp"

namespace coopl {
namespace {

constexpr int kRejectionCap = 10000;

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

void check_player_count(const Game& g, const Coalition& s) {
  if (player_count(g) != s.player_count()) {
    throw std::invalid_argument("coalition player count does not match game");
  }
}

void require_sorted_unique(const std::vector<std::uint32_t>& v, std::uint32_t bound,
                           const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(v[i] < bound, what);
    if (i > 0) require(v[i - 1] < v[i], what);
  }
}

}  // namespace

std::string to_string(GameClass cls) {
  switch (cls) {
    case GameClass::Wvg: return "wvg";
    case GameClass::VectorWvg: return "vector_wvg";
    case GameClass::Ttg: return "ttg";
    case GameClass::Isg: return "isg";
    case GameClass::Flow: return "flow";
    case GameClass::MinSum: return "minsum";
    case GameClass::McNet: return "mcnet";
    case GameClass::Skill: return "skill";
  }
  throw std::logic_error("unknown game class");
}

GameClass game_class_from_string(const std::string& name) {
  if (name == "wvg") return GameClass::Wvg;
  if (name == "vector_wvg") return GameClass::VectorWvg;
  if (name == "ttg") return GameClass::Ttg;
  if (name == "isg") return GameClass::Isg;
  if (name == "flow") return GameClass::Flow;
  if (name == "minsum") return GameClass::MinSum;
  if (name == "mcnet") return GameClass::McNet;
  if (name == "skill") return GameClass::Skill;
  throw std::invalid_argument("unknown game class: " + name);
}

GameClass game_class(const Game& g) {
  return static_cast<GameClass>(g.index());
}

std::uint32_t player_count(const Game& g) {
  return std::visit(
      [](const auto& game) -> std::uint32_t {
        using T = std::decay_t<decltype(game)>;
        if constexpr (std::is_same_v<T, Wvg>) {
          return static_cast<std::uint32_t>(game.weights.size());
        } else if constexpr (std::is_same_v<T, VectorWvg>) {
          return game.weights.empty() ? 0u
                                      : static_cast<std::uint32_t>(game.weights[0].size());
        } else if constexpr (std::is_same_v<T, Ttg>) {
          return static_cast<std::uint32_t>(game.weights.size());
        } else if constexpr (std::is_same_v<T, Isg>) {
          return game.n;
        } else if constexpr (std::is_same_v<T, FlowNetwork>) {
          return static_cast<std::uint32_t>(game.edges.size());
        } else if constexpr (std::is_same_v<T, MinSum>) {
          return game.vectors.empty() ? 0u
                                      : static_cast<std::uint32_t>(game.vectors[0].size());
        } else if constexpr (std::is_same_v<T, McNet>) {
          return game.n;
        } else {
          return static_cast<std::uint32_t>(game.player_skills.size());
        }
      },
      g);
}

std::size_t isg_pair_count(std::uint32_t n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

std::size_t isg_pair_index(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  if (i >= j || j >= n) throw std::invalid_argument("isg pair index out of range");
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

void validate(const Game& g) {
  require(player_count(g) >= 1, "game must have at least one player");
  if (const auto* w = std::get_if<Wvg>(&g)) {
    for (const auto& wt : w->weights) require(wt >= 0, "wvg weights must be non-negative");
    require(w->quota >= 0, "wvg quota must be non-negative");
  } else if (const auto* vw = std::get_if<VectorWvg>(&g)) {
    require(!vw->weights.empty(), "vector-wvg needs at least one component");
    require(vw->quotas.size() == vw->weights.size(),
            "vector-wvg quota count must match component count");
    for (const auto& row : vw->weights) {
      require(row.size() == vw->weights[0].size(), "vector-wvg weight rows are ragged");
      for (const auto& wt : row) require(wt >= 0, "vector-wvg weights must be non-negative");
    }
    for (const auto& q : vw->quotas) require(q >= 0, "vector-wvg quotas must be non-negative");
  } else if (const auto* t = std::get_if<Ttg>(&g)) {
    for (const auto& wt : t->weights) require(wt >= 0, "ttg weights must be non-negative");
    for (std::size_t i = 0; i < t->tasks.size(); ++i) {
      require(t->tasks[i].threshold > 0, "ttg task thresholds must be positive");
      require(t->tasks[i].value > 0, "ttg task values must be positive");
      if (i > 0) {
        require(t->tasks[i - 1].threshold < t->tasks[i].threshold,
                "ttg task thresholds must strictly increase");
        require(t->tasks[i - 1].value < t->tasks[i].value,
                "ttg task values must strictly increase");
      }
    }
  } else if (const auto* isg = std::get_if<Isg>(&g)) {
    require(isg->pair_weights.size() == isg_pair_count(isg->n),
            "isg pair weight count must be n*(n-1)/2");
  } else if (const auto* f = std::get_if<FlowNetwork>(&g)) {
    require(f->vertex_count >= 2, "flow network needs at least two vertices");
    require(f->source < f->vertex_count && f->sink < f->vertex_count,
            "flow source/sink out of range");
    require(f->source != f->sink, "flow source and sink must differ");
    for (const auto& e : f->edges) {
      require(e.from < f->vertex_count && e.to < f->vertex_count,
              "flow edge endpoint out of range");
      require(e.capacity >= 0, "flow capacities must be non-negative");
    }
  } else if (const auto* ms = std::get_if<MinSum>(&g)) {
    require(!ms->vectors.empty(), "min-sum needs at least one vector");
    for (const auto& row : ms->vectors) {
      require(row.size() == ms->vectors[0].size(), "min-sum vectors are ragged");
      for (auto v : row) require(v >= 0, "min-sum entries must be non-negative");
    }
  } else if (const auto* mc = std::get_if<McNet>(&g)) {
    for (const auto& rule : mc->rules) {
      require_sorted_unique(rule.positives, mc->n, "mc-net literals must be sorted players");
      require_sorted_unique(rule.negatives, mc->n, "mc-net literals must be sorted players");
      std::vector<std::uint32_t> both;
      std::set_intersection(rule.positives.begin(), rule.positives.end(),
                            rule.negatives.begin(), rule.negatives.end(),
                            std::back_inserter(both));
      require(both.empty(), "mc-net rule literals must not overlap");
    }
  } else if (const auto* sk = std::get_if<SkillGame>(&g)) {
    require(sk->skill_count >= 1, "skill game needs at least one skill");
    for (const auto& skills : sk->player_skills) {
      require_sorted_unique(skills, sk->skill_count, "player skills must be sorted skill ids");
    }
    for (const auto& task : sk->tasks) {
      require_sorted_unique(task, sk->skill_count, "task skills must be sorted skill ids");
    }
    require_sorted_unique(sk->starred, static_cast<std::uint32_t>(sk->tasks.size()),
                          "starred entries must be sorted task indices");
    if (sk->mode == SkillMode::Count) {
      require(sk->starred.empty(), "count-mode skill games take no starred tasks");
    }
  }
}

Rational evaluate(const Wvg& g, const Coalition& s) {
  if (s.is_empty()) return 0;
  Rational total;
  for (auto i : s.members()) total += g.weights[i];
  return total >= g.quota ? 1 : 0;
}

Rational evaluate(const VectorWvg& g, const Coalition& s) {
  if (s.is_empty()) return 0;
  for (std::size_t l = 0; l < g.weights.size(); ++l) {
    Rational total;
    for (auto i : s.members()) total += g.weights[l][i];
    if (total < g.quotas[l]) return 0;
  }
  return 1;
}

Rational evaluate(const Ttg& g, const Coalition& s) {
  if (s.is_empty()) return 0;
  Rational total;
  for (auto i : s.members()) total += g.weights[i];
  Rational best = 0;  // the implicit zero task
  for (const auto& task : g.tasks) {
    if (task.threshold <= total && task.value > best) best = task.value;
  }
  return best;
}

Rational evaluate(const Isg& g, const Coalition& s) {
  Rational total;
  const auto& m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      total += g.pair_weights[isg_pair_index(g.n, m[a], m[b])];
    }
  }
  return total;
}

namespace {

// Edmonds-Karp over the subnetwork of active edges. BFS order follows arc
// insertion order, which follows edge index order, so results and work are
// deterministic. Augmentation count is bounded by O(V * E) independent of
// capacity magnitudes, so rational capacities terminate.
Rational max_flow_subset(const FlowNetwork& net, const std::vector<char>& active) {
  struct Arc {
    std::uint32_t to;
    Rational cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> g(net.vertex_count);
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (!active[e]) continue;
    const auto& edge = net.edges[e];
    if (edge.from == edge.to) continue;  // self-loops carry no flow
    g[edge.from].push_back({edge.to, edge.capacity, g[edge.to].size()});
    g[edge.to].push_back({edge.from, Rational(0), g[edge.from].size() - 1});
  }
  Rational flow;
  for (;;) {
    std::vector<std::pair<std::uint32_t, std::size_t>> parent(
        net.vertex_count, {UINT32_MAX, 0});
    std::deque<std::uint32_t> queue{net.source};
    parent[net.source] = {net.source, 0};
    while (!queue.empty() && parent[net.sink].first == UINT32_MAX) {
      const auto u = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < g[u].size(); ++a) {
        const Arc& arc = g[u][a];
        if (arc.cap == 0 || parent[arc.to].first != UINT32_MAX) continue;
        parent[arc.to] = {u, a};
        queue.push_back(arc.to);
      }
    }
    if (parent[net.sink].first == UINT32_MAX) break;
    Rational bottleneck = -1;
    for (std::uint32_t v = net.sink; v != net.source;) {
      const auto [u, a] = parent[v];
      if (bottleneck < 0 || g[u][a].cap < bottleneck) bottleneck = g[u][a].cap;
      v = u;
    }
    for (std::uint32_t v = net.sink; v != net.source;) {
      const auto [u, a] = parent[v];
      Arc& arc = g[u][a];
      arc.cap -= bottleneck;
      g[arc.to][arc.rev].cap += bottleneck;
      v = u;
    }
    flow += bottleneck;
  }
  return flow;
}

}  // namespace

Rational evaluate(const FlowNetwork& g, const Coalition& s) {
  std::vector<char> active(g.edges.size(), 0);
  for (auto e : s.members()) active[e] = 1;
  return max_flow_subset(g, active);
}

Rational evaluate(const MinSum& g, const Coalition& s) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& row : g.vectors) {
    std::int64_t total = 0;
    for (auto i : s.members()) total += row[i];
    best = std::min(best, total);
  }
  return Rational(best);
}

Rational evaluate(const McNet& g, const Coalition& s) {
  Rational total;
  for (const auto& rule : g.rules) {
    bool applies = true;
    for (auto p : rule.positives) {
      if (!s.contains(p)) {
        applies = false;
        break;
      }
    }
    if (!applies) continue;
    for (auto q : rule.negatives) {
      if (s.contains(q)) {
        applies = false;
        break;
      }
    }
    if (applies) total += rule.value;
  }
  return total;
}

namespace {

std::vector<std::uint32_t> skill_union(const SkillGame& g, const Coalition& s) {
  std::vector<char> have(g.skill_count, 0);
  for (auto i : s.members()) {
    for (auto sk : g.player_skills[i]) have[sk] = 1;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t sk = 0; sk < g.skill_count; ++sk) {
    if (have[sk]) out.push_back(sk);
  }
  return out;
}

bool covers(const std::vector<std::uint32_t>& have, const std::vector<std::uint32_t>& need) {
  return std::includes(have.begin(), have.end(), need.begin(), need.end());
}

}  // namespace

Rational evaluate(const SkillGame& g, const Coalition& s) {
  if (s.is_empty()) return 0;
  const auto have = skill_union(g, s);
  if (g.mode == SkillMode::Count) {
    std::int64_t done = 0;
    for (const auto& task : g.tasks) {
      if (covers(have, task)) ++done;
    }
    return Rational(done);
  }
  for (auto t : g.starred) {
    if (!covers(have, g.tasks[t])) return 0;
  }
  return 1;
}

Rational evaluate(const Game& g, const Coalition& s) {
  check_player_count(g, s);
  return std::visit([&s](const auto& game) { return evaluate(game, s); }, g);
}

Rational path_value(const FlowNetwork& net, const std::vector<std::uint32_t>& edge_sequence) {
  if (edge_sequence.empty()) {
    throw std::invalid_argument("path_value: empty edge sequence");
  }
  std::uint32_t at = net.source;
  Rational bottleneck = -1;
  for (auto e : edge_sequence) {
    if (e >= net.edges.size()) {
      throw std::invalid_argument("path_value: edge index out of range");
    }
    const auto& edge = net.edges[e];
    if (edge.from != at) {
      throw std::invalid_argument("path_value: edge sequence is not connected");
    }
    at = edge.to;
    if (bottleneck < 0 || edge.capacity < bottleneck) bottleneck = edge.capacity;
  }
  if (at != net.sink) {
    throw std::invalid_argument("path_value: edge sequence does not end at the sink");
  }
  return bottleneck;
}

bool has_source_sink_path(const FlowNetwork& net) {
  std::vector<char> seen(net.vertex_count, 0);
  std::deque<std::uint32_t> queue{net.source};
  seen[net.source] = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    if (u == net.sink) return true;
    for (const auto& e : net.edges) {
      if (e.from == u && !seen[e.to]) {
        seen[e.to] = 1;
        queue.push_back(e.to);
      }
    }
  }
  return false;
}

namespace {

Rational draw_weight(const GameClassSpec& spec, Rng& rng) {
  require(spec.weight_lo <= spec.weight_hi, "random_game: empty weight range");
  return Rational(rng.uniform_int(spec.weight_lo, spec.weight_hi));
}

// k distinct integers from [lo, hi], ascending; rejection with a bounded
// number of redraws.
std::vector<std::int64_t> draw_distinct_sorted(std::int64_t lo, std::int64_t hi,
                                               std::uint32_t k, Rng& rng) {
  require(lo <= hi, "random_game: empty value range");
  require(static_cast<std::uint64_t>(hi - lo) + 1 >= k,
          "random_game: range too small for k distinct values");
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    std::vector<std::int64_t> vals(k);
    for (auto& v : vals) v = rng.uniform_int(lo, hi);
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) == vals.end()) return vals;
  }
  throw LimitError("random_game: rejection cap reached drawing distinct values");
}

Wvg random_wvg(const GameClassSpec& spec, Rng& rng) {
  Wvg g;
  g.weights.reserve(spec.n);
  std::int64_t total = 0;
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    const std::int64_t w = rng.uniform_int(spec.weight_lo, spec.weight_hi);
    total += w;
    g.weights.emplace_back(w);
  }
  const auto range = spec.quota_range.value_or(
      std::pair<std::int64_t, std::int64_t>(1, std::max<std::int64_t>(1, total)));
  require(range.first <= range.second, "random_game: empty quota range");
  g.quota = Rational(rng.uniform_int(range.first, range.second));
  return g;
}

Game random_game_impl(const GameClassSpec& spec, Rng& rng) {
  require(spec.n >= 1, "random_game: need at least one player");
  require(spec.weight_lo <= spec.weight_hi, "random_game: empty weight range");
  switch (spec.cls) {
    case GameClass::Wvg:
      return random_wvg(spec, rng);
    case GameClass::VectorWvg: {
      require(spec.k >= 1, "random_game: vector-wvg needs k >= 1");
      VectorWvg g;
      GameClassSpec row = spec;
      row.cls = GameClass::Wvg;
      for (std::uint32_t l = 0; l < spec.k; ++l) {
        Wvg w = random_wvg(row, rng);
        g.weights.push_back(std::move(w.weights));
        g.quotas.push_back(std::move(w.quota));
      }
      return g;
    }
    case GameClass::Ttg: {
      require(spec.k >= 1, "random_game: ttg needs k >= 1");
      Ttg g;
      std::int64_t total = 0;
      for (std::uint32_t i = 0; i < spec.n; ++i) {
        const std::int64_t w = rng.uniform_int(spec.weight_lo, spec.weight_hi);
        total += w;
        g.weights.emplace_back(w);
      }
      const std::int64_t thresh_hi = std::max<std::int64_t>(total, spec.k);
      const auto thresholds = draw_distinct_sorted(1, thresh_hi, spec.k, rng);
      require(spec.value_lo >= 1, "random_game: ttg task values must be positive");
      const auto values = draw_distinct_sorted(spec.value_lo, spec.value_hi, spec.k, rng);
      for (std::uint32_t t = 0; t < spec.k; ++t) {
        g.tasks.push_back({Rational(thresholds[t]), Rational(values[t])});
      }
      return g;
    }
    case GameClass::Isg: {
      Isg g;
      g.n = spec.n;
      const auto pairs = isg_pair_count(spec.n);
      g.pair_weights.reserve(pairs);
      for (std::size_t p = 0; p < pairs; ++p) g.pair_weights.push_back(draw_weight(spec, rng));
      return g;
    }
    case GameClass::Flow: {
      require(spec.k >= 1, "random_game: flow needs k >= 1 layers");
      require(spec.n >= spec.k, "random_game: flow needs at least one edge per layer");
      FlowNetwork g;
      g.vertex_count = spec.k + 1;
      g.source = 0;
      g.sink = spec.k;
      const std::uint32_t base = spec.n / spec.k;
      const std::uint32_t extra = spec.n % spec.k;
      for (std::uint32_t layer = 0; layer < spec.k; ++layer) {
        const std::uint32_t width = base + (layer < extra ? 1 : 0);
        for (std::uint32_t slot = 0; slot < width; ++slot) {
          g.edges.push_back({layer, layer + 1, draw_weight(spec, rng)});
        }
      }
      return g;
    }
    case GameClass::MinSum: {
      require(spec.k >= 1, "random_game: min-sum needs k >= 1");
      require(spec.weight_hi >= 0, "random_game: min-sum entries must be non-negative");
      const std::int64_t lo = std::max<std::int64_t>(0, spec.weight_lo);
      MinSum g;
      g.vectors.assign(spec.k, std::vector<std::int64_t>(spec.n));
      for (auto& row : g.vectors) {
        for (auto& v : row) v = rng.uniform_int(lo, spec.weight_hi);
      }
      return g;
    }
    case GameClass::McNet: {
      require(spec.k >= 1, "random_game: mc-net needs k >= 1");
      McNet g;
      g.n = spec.n;
      for (std::uint32_t r = 0; r < spec.k; ++r) {
        McNetRule rule;
        for (int attempt = 0;; ++attempt) {
          if (attempt >= kRejectionCap) {
            throw LimitError("random_game: rejection cap reached drawing mc-net rule");
          }
          rule.positives.clear();
          rule.negatives.clear();
          for (std::uint32_t i = 0; i < spec.n; ++i) {
            const double u = rng.uniform_real();
            if (u < 0.3) {
              rule.positives.push_back(i);
            } else if (u < 0.5) {
              rule.negatives.push_back(i);
            }
          }
          // Empty positive sets are rejected so that generated games keep
          // v({}) = 0 and stay usable as stabilizer corpora.
          if (!rule.positives.empty()) break;
        }
        require(spec.value_lo <= spec.value_hi, "random_game: empty value range");
        rule.value = Rational(rng.uniform_int(spec.value_lo, spec.value_hi));
        g.rules.push_back(std::move(rule));
      }
      return g;
    }
    case GameClass::Skill: {
      require(spec.k >= 1, "random_game: skill needs k >= 1 tasks");
      require(spec.skill_count >= 1, "random_game: skill needs a non-empty skill set");
      SkillGame g;
      g.skill_count = spec.skill_count;
      g.mode = spec.skill_mode;
      auto draw_subset = [&](std::uint32_t bound, const char* what) {
        for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
          std::vector<std::uint32_t> out;
          for (std::uint32_t s = 0; s < bound; ++s) {
            if (rng.bernoulli(0.5)) out.push_back(s);
          }
          if (!out.empty()) return out;
        }
        throw LimitError(std::string("random_game: rejection cap reached drawing ") + what);
      };
      for (std::uint32_t i = 0; i < spec.n; ++i) {
        g.player_skills.push_back(draw_subset(spec.skill_count, "player skills"));
      }
      for (std::uint32_t t = 0; t < spec.k; ++t) {
        g.tasks.push_back(draw_subset(spec.skill_count, "task skills"));
      }
      if (spec.skill_mode == SkillMode::Conjunctive) {
        g.starred = draw_subset(spec.k, "starred tasks");
      }
      return g;
    }
  }
  throw std::logic_error("unknown game class");
}

}  // namespace

Game random_game(const GameClassSpec& spec, Rng& rng) {
  Game g = random_game_impl(spec, rng);
  validate(g);
  return g;
}

}  // namespace coopl
