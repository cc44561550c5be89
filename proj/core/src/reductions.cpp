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

#include "coopl/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace coopl {

void validate(const Formula& phi) {
  if (phi.n_vars == 0) throw std::invalid_argument("formula needs at least one variable");
  for (const auto& clause : phi.clauses) {
    if (clause.empty()) throw std::invalid_argument("formula has an empty clause");
    std::vector<std::uint32_t> vars;
    for (const auto& lit : clause) {
      if (lit.var >= phi.n_vars) throw std::invalid_argument("literal variable out of range");
      vars.push_back(lit.var);
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
      throw std::invalid_argument("variable repeated within a clause");
    }
  }
}

bool eval_cnf(const Formula& phi, const std::vector<bool>& assignment) {
  if (assignment.size() != phi.n_vars) {
    throw std::invalid_argument("assignment width does not match formula");
  }
  for (const auto& clause : phi.clauses) {
    bool satisfied = false;
    for (const auto& lit : clause) {
      if (assignment[lit.var] == lit.positive) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;  // the empty conjunction is true
}

bool eval_dnf(const Formula& phi, const std::vector<bool>& assignment) {
  if (assignment.size() != phi.n_vars) {
    throw std::invalid_argument("assignment width does not match formula");
  }
  for (const auto& term : phi.clauses) {
    bool satisfied = true;
    for (const auto& lit : term) {
      if (assignment[lit.var] != lit.positive) {
        satisfied = false;
        break;
      }
    }
    if (satisfied) return true;
  }
  return false;  // the empty disjunction is false
}

std::uint32_t literal_player(const Literal& lit) {
  return 2 * lit.var + (lit.positive ? 0 : 1);
}

std::uint32_t y_player(const Formula& phi) { return 2 * phi.n_vars; }

MinSum cnf_to_minsum(const Formula& phi) {
  validate(phi);
  const std::uint32_t players = 2 * phi.n_vars + 1;
  MinSum game;
  game.vectors.reserve(phi.clauses.size() + 1);
  for (const auto& clause : phi.clauses) {
    std::vector<std::int64_t> row(players, 0);
    for (const auto& lit : clause) row[literal_player(lit)] = 1;
    game.vectors.push_back(std::move(row));
  }
  std::vector<std::int64_t> y_row(players, 0);
  y_row[y_player(phi)] = 1;
  game.vectors.push_back(std::move(y_row));
  return game;
}

Coalition cnf_assignment_to_coalition(const Formula& phi, const std::vector<bool>& assignment) {
  if (assignment.size() != phi.n_vars) {
    throw std::invalid_argument("assignment width does not match formula");
  }
  std::vector<std::uint32_t> members;
  members.reserve(phi.n_vars + 1);
  for (std::uint32_t i = 0; i < phi.n_vars; ++i) {
    members.push_back(2 * i + (assignment[i] ? 0 : 1));
  }
  members.push_back(y_player(phi));
  return Coalition(2 * phi.n_vars + 1, std::move(members));
}

McNet dnf_to_mcnet(const Formula& phi) {
  validate(phi);
  McNet game;
  game.n = phi.n_vars;
  game.rules.reserve(phi.clauses.size());
  for (const auto& term : phi.clauses) {
    McNetRule rule;
    for (const auto& lit : term) {
      (lit.positive ? rule.positives : rule.negatives).push_back(lit.var);
    }
    std::sort(rule.positives.begin(), rule.positives.end());
    std::sort(rule.negatives.begin(), rule.negatives.end());
    rule.value = 1;
    game.rules.push_back(std::move(rule));
  }
  return game;
}

Coalition dnf_assignment_to_coalition(const Formula& phi, const std::vector<bool>& assignment) {
  if (assignment.size() != phi.n_vars) {
    throw std::invalid_argument("assignment width does not match formula");
  }
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < phi.n_vars; ++i) {
    if (assignment[i]) members.push_back(i);
  }
  return Coalition(phi.n_vars, std::move(members));
}

FlowNetwork minsum_to_flow(const MinSum& game) {
  validate(Game(game));
  const std::uint32_t k = static_cast<std::uint32_t>(game.vectors.size());
  const std::uint32_t n = static_cast<std::uint32_t>(game.vectors[0].size());
  FlowNetwork net;
  net.vertex_count = k + 1;
  net.source = 0;
  net.sink = k;
  net.edges.reserve(static_cast<std::size_t>(k) * n);
  for (std::uint32_t l = 0; l < k; ++l) {
    for (std::uint32_t i = 0; i < n; ++i) {
      net.edges.push_back({l, l + 1, Rational(game.vectors[l][i])});
    }
  }
  return net;
}

Coalition minsum_edge_coalition(const MinSum& game, const Coalition& s) {
  const std::uint32_t k = static_cast<std::uint32_t>(game.vectors.size());
  const std::uint32_t n = static_cast<std::uint32_t>(game.vectors[0].size());
  if (s.player_count() != n) {
    throw std::invalid_argument("coalition player count does not match min-sum game");
  }
  std::vector<std::uint32_t> edges;
  edges.reserve(static_cast<std::size_t>(k) * s.size());
  for (std::uint32_t l = 0; l < k; ++l) {
    for (auto i : s.members()) edges.push_back(l * n + i);
  }
  return Coalition(k * n, std::move(edges));
}

}  // namespace coopl
