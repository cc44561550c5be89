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

#include "oracles.hpp"

#include <stdexcept>

namespace coopl::testing {
namespace {

// Solves a square rational system in place; false when singular.
bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& out) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] /= inv;
    b[col] /= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  out = std::move(b);
  return true;
}

}  // namespace

Rational oracle_min_total_payment(const std::vector<CoverRow>& rows, std::uint32_t n) {
  // Hyperplane list: one indicator row per cover constraint, then the n
  // axis planes x_i = 0.
  std::vector<std::vector<Rational>> normals;
  std::vector<Rational> offsets;
  for (const auto& row : rows) {
    std::vector<Rational> a(n, Rational(0));
    for (auto i : row.s.members()) a[i] = 1;
    normals.push_back(std::move(a));
    offsets.push_back(row.v);
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<Rational> a(n, Rational(0));
    a[i] = 1;
    normals.push_back(std::move(a));
    offsets.push_back(Rational(0));
  }

  const std::size_t total = normals.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  // Enumerate all n-subsets of the hyperplanes.
  auto consider = [&]() {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t idx : pick) {
      a.push_back(normals[idx]);
      b.push_back(offsets[idx]);
    }
    std::vector<Rational> x;
    if (!solve_square(std::move(a), std::move(b), x)) return;
    for (const auto& xi : x) {
      if (xi < 0) return;
    }
    for (const auto& row : rows) {
      Rational lhs;
      for (auto i : row.s.members()) lhs += x[i];
      if (lhs < row.v) return;
    }
    Rational obj;
    for (const auto& xi : x) obj += xi;
    if (!best || obj < *best) best = obj;
  };
  // Iterative combination enumeration.
  for (std::uint32_t i = 0; i < n; ++i) pick[i] = i;
  if (n == 0) throw std::invalid_argument("oracle: n must be positive");
  if (total < n) throw std::invalid_argument("oracle: not enough hyperplanes");
  for (;;) {
    consider();
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!best) throw std::logic_error("oracle: pointed polyhedron without a feasible vertex");
  return *best;
}

Rational oracle_full_cover_optimum(const Game& game) {
  const std::uint32_t n = player_count(game);
  if (n > 16) throw std::invalid_argument("oracle: player count too large");
  std::vector<CoverRow> rows;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Coalition s = Coalition::from_mask(mask, n);
    Rational v = evaluate(game, s);
    rows.push_back({std::move(s), std::move(v)});
  }
  return oracle_min_total_payment(rows, n);
}

Rational oracle_max_flow_mincut(const FlowNetwork& net, const std::vector<bool>& edge_in) {
  if (edge_in.size() != net.edges.size()) {
    throw std::invalid_argument("oracle: edge flag count mismatch");
  }
  const std::uint32_t v = net.vertex_count;
  if (v > 20) throw std::invalid_argument("oracle: vertex count too large");
  std::optional<Rational> best;
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << v); ++side) {
    if (!((side >> net.source) & 1) || ((side >> net.sink) & 1)) continue;
    Rational cut;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
      if (!edge_in[e]) continue;
      const auto& edge = net.edges[e];
      if (((side >> edge.from) & 1) && !((side >> edge.to) & 1)) cut += edge.capacity;
    }
    if (!best || cut < *best) best = cut;
  }
  return best.value();
}

Rational oracle_max_flow_mincut(const FlowNetwork& net, const Coalition& edges) {
  std::vector<bool> edge_in(net.edges.size(), false);
  for (auto e : edges.members()) edge_in.at(e) = true;
  return oracle_max_flow_mincut(net, edge_in);
}

Rational oracle_minsum_value(const MinSum& game, const Coalition& s) {
  std::optional<Rational> best;
  for (const auto& row : game.vectors) {
    Rational sum;
    for (auto i : s.members()) sum += row[i];
    if (!best || sum < *best) best = sum;
  }
  return best.value();
}

bool oracle_eval_cnf(const Formula& phi, const std::vector<bool>& assignment) {
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
  return true;
}

bool oracle_eval_dnf(const Formula& phi, const std::vector<bool>& assignment) {
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
  return false;
}

std::optional<std::array<Rational, 3>> oracle_cramer3(
    const std::array<std::array<Rational, 3>, 3>& a, const std::array<Rational, 3>& b) {
  auto det3 = [](const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const Rational d = det3(a);
  if (d == 0) return std::nullopt;
  std::array<Rational, 3> x;
  for (int col = 0; col < 3; ++col) {
    auto m = a;
    for (int row = 0; row < 3; ++row) m[row][col] = b[row];
    x[col] = det3(m) / d;
  }
  return x;
}

std::vector<Coalition> all_coalitions(std::uint32_t n) {
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back(Coalition::from_mask(mask, n));
  }
  return out;
}

Rational payoff_on(const PayoffVector& x, const Coalition& s) {
  Rational total;
  for (auto i : s.members()) total += x.x[i];
  return total;
}

}  // namespace coopl::testing
