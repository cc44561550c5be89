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

#include "coopl/lp.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace coopl {
namespace {

using Row = std::vector<Rational>;

// Problem after the lower-bound shift x = y + lb, y >= 0. shift_const is
// objective . lb and is added back to reported optima.
struct Shifted {
  std::size_t n = 0;
  std::vector<Row> coeffs;
  std::vector<Relation> rels;
  std::vector<Rational> rhs;
  Row c;
  Row lb;
  Rational shift_const;
};

Shifted shift_lower_bounds(const LinearProgram& lp) {
  Shifted s;
  s.n = lp.objective.size();
  s.c = lp.objective;
  s.lb = lp.lower_bounds;
  if (s.lb.empty()) s.lb.assign(s.n, Rational(0));
  if (s.lb.size() != s.n) {
    throw std::invalid_argument("lower_bounds size does not match objective");
  }
  for (std::size_t j = 0; j < s.n; ++j) s.shift_const += s.c[j] * s.lb[j];
  s.coeffs.reserve(lp.constraints.size());
  for (const auto& con : lp.constraints) {
    if (con.coeffs.size() != s.n) {
      throw std::invalid_argument("constraint width does not match objective");
    }
    Rational b = con.rhs;
    for (std::size_t j = 0; j < s.n; ++j) b -= con.coeffs[j] * s.lb[j];
    s.coeffs.push_back(con.coeffs);
    s.rels.push_back(con.rel);
    s.rhs.push_back(std::move(b));
  }
  return s;
}

struct Tableau {
  std::size_t ncols = 0;             // excludes the rhs column
  std::vector<Row> a;                // each row has ncols + 1 entries
  std::vector<std::size_t> basis;    // basis[i] = column basic in row i
  std::vector<char> can_enter;
  std::uint64_t pivots = 0;

  void pivot(std::size_t r, std::size_t c, Row& cost) {
    Row& pr = a[r];
    const Rational p = pr[c];
    for (auto& v : pr) v /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      const Rational f = a[i][c];
      if (f == 0) continue;
      Row& ri = a[i];
      for (std::size_t j = 0; j <= ncols; ++j) ri[j] -= f * pr[j];
    }
    const Rational f = cost[c];
    if (f != 0) {
      for (std::size_t j = 0; j <= ncols; ++j) cost[j] -= f * pr[j];
    }
    basis[r] = c;
    ++pivots;
  }

  // Bland's rule throughout; returns false when the column chosen to enter
  // has no positive entry (objective unbounded below).
  bool run(Row& cost) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (can_enter[j] && cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols) return true;
      std::size_t leave = a.size();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter] <= 0) continue;
        if (leave == a.size()) {
          leave = i;
          continue;
        }
        // ratio a[i][ncols]/a[i][enter] vs the incumbent, cross-multiplied
        const Rational lhs = a[i][ncols] * a[leave][enter];
        const Rational rhs = a[leave][ncols] * a[i][enter];
        if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
      }
      if (leave == a.size()) return false;
      pivot(leave, enter, cost);
    }
  }

  Row reduced_costs(const Row& column_costs) const {
    Row cost(ncols + 1, Rational(0));
    for (std::size_t j = 0; j < ncols; ++j) cost[j] = column_costs[j];
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational cb = column_costs[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols; ++j) cost[j] -= cb * a[i][j];
    }
    return cost;
  }
};

// Exact recheck of a candidate optimum against the original program; a
// violation here means the solver itself is broken, so it throws.
void verify_assignment(const LinearProgram& lp, const std::vector<Rational>& x) {
  const std::size_t n = lp.objective.size();
  if (x.size() != n) throw std::logic_error("lp: assignment width mismatch");
  if (!lp.lower_bounds.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < lp.lower_bounds[j]) throw std::logic_error("lp: lower bound violated");
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < 0) throw std::logic_error("lp: nonnegativity violated");
    }
  }
  for (const auto& con : lp.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j) lhs += con.coeffs[j] * x[j];
    const bool ok = con.rel == Relation::Geq   ? lhs >= con.rhs
                    : con.rel == Relation::Leq ? lhs <= con.rhs
                                               : lhs == con.rhs;
    if (!ok) throw std::logic_error("lp: constraint violated by reported optimum");
  }
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x) {
  Rational v;
  for (std::size_t j = 0; j < lp.objective.size(); ++j) v += lp.objective[j] * x[j];
  return v;
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  Shifted s = shift_lower_bounds(lp);
  const std::size_t m = s.coeffs.size();

  // Normalize every row to rhs >= 0 so slack/artificial columns can start
  // as an identity basis.
  for (std::size_t i = 0; i < m; ++i) {
    if (s.rhs[i] < 0) {
      for (auto& v : s.coeffs[i]) v = -v;
      s.rhs[i] = -s.rhs[i];
      if (s.rels[i] == Relation::Geq) {
        s.rels[i] = Relation::Leq;
      } else if (s.rels[i] == Relation::Leq) {
        s.rels[i] = Relation::Geq;
      }
    }
  }

  std::size_t n_slack = 0;
  for (auto rel : s.rels) {
    if (rel != Relation::Eq) ++n_slack;
  }
  std::size_t n_art = 0;
  for (auto rel : s.rels) {
    if (rel != Relation::Leq) ++n_art;
  }
  const std::size_t slack_begin = s.n;
  const std::size_t art_begin = s.n + n_slack;

  Tableau t;
  t.ncols = s.n + n_slack + n_art;
  t.a.assign(m, Row(t.ncols + 1, Rational(0)));
  t.basis.assign(m, 0);
  t.can_enter.assign(t.ncols, 1);
  for (std::size_t j = art_begin; j < t.ncols; ++j) t.can_enter[j] = 0;

  std::size_t slack_at = slack_begin;
  std::size_t art_at = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) t.a[i][j] = s.coeffs[i][j];
    t.a[i][t.ncols] = s.rhs[i];
    if (s.rels[i] == Relation::Leq) {
      t.a[i][slack_at] = 1;
      t.basis[i] = slack_at++;
    } else if (s.rels[i] == Relation::Geq) {
      t.a[i][slack_at] = -1;
      ++slack_at;
      t.a[i][art_at] = 1;
      t.basis[i] = art_at++;
    } else {
      t.a[i][art_at] = 1;
      t.basis[i] = art_at++;
    }
  }

  if (n_art > 0) {
    Row art_costs(t.ncols, Rational(0));
    for (std::size_t j = art_begin; j < t.ncols; ++j) art_costs[j] = 1;
    Row cost = t.reduced_costs(art_costs);
    if (!t.run(cost)) throw std::logic_error("lp: phase 1 reported unbounded");
    Rational infeas;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] >= art_begin) infeas += t.a[i][t.ncols];
    }
    if (infeas != 0) {
      LpOutcome out;
      out.status = LpStatus::Infeasible;
      out.pivots = t.pivots;
      return out;
    }
    // Drive still-basic artificials out with degenerate pivots; rows that
    // offer no pivot column are redundant and are dropped.
    std::vector<char> drop(t.a.size(), 0);
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.basis[i] < art_begin) continue;
      std::size_t col = art_begin;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (t.a[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == art_begin) {
        drop[i] = 1;
      } else {
        t.pivot(i, col, cost);
      }
    }
    Tableau t2;
    t2.ncols = art_begin;
    t2.can_enter.assign(art_begin, 1);
    t2.pivots = t.pivots;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (drop[i]) continue;
      Row row(t.a[i].begin(), t.a[i].begin() + art_begin);
      row.push_back(t.a[i][t.ncols]);
      t2.a.push_back(std::move(row));
      t2.basis.push_back(t.basis[i]);
    }
    t = std::move(t2);
  }

  Row full_costs(t.ncols, Rational(0));
  for (std::size_t j = 0; j < s.n; ++j) full_costs[j] = s.c[j];
  Row cost = t.reduced_costs(full_costs);
  if (!t.run(cost)) {
    LpOutcome out;
    out.status = LpStatus::Unbounded;
    out.pivots = t.pivots;
    return out;
  }

  std::vector<Rational> x = s.lb;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    if (t.basis[i] < s.n) x[t.basis[i]] += t.a[i][t.ncols];
  }
  verify_assignment(lp, x);

  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.assignment = std::move(x);
  out.objective = objective_value(lp, out.assignment);
  out.pivots = t.pivots;
  return out;
}

LpOutcome solve_lp_via_dual(const LinearProgram& lp) {
  Shifted s = shift_lower_bounds(lp);
  for (std::size_t j = 0; j < s.n; ++j) {
    if (s.c[j] < 0) {
      throw std::invalid_argument(
          "solve_lp_via_dual requires a non-negative shifted objective");
    }
  }
  const std::size_t m = s.coeffs.size();
  // Bring every row to >= form; the dual then reads
  //   max rhs . lambda  s.t.  coeffs^T lambda <= c,  lambda >= 0,
  // whose slack basis is feasible because c >= 0.
  for (std::size_t i = 0; i < m; ++i) {
    if (s.rels[i] == Relation::Eq) {
      throw std::invalid_argument("solve_lp_via_dual does not accept equality rows");
    }
    if (s.rels[i] == Relation::Leq) {
      for (auto& v : s.coeffs[i]) v = -v;
      s.rhs[i] = -s.rhs[i];
      s.rels[i] = Relation::Geq;
    }
  }

  Tableau t;
  t.ncols = m + s.n;
  t.a.assign(s.n, Row(t.ncols + 1, Rational(0)));
  t.basis.assign(s.n, 0);
  t.can_enter.assign(t.ncols, 1);
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = 0; j < m; ++j) t.a[i][j] = s.coeffs[j][i];
    t.a[i][m + i] = 1;
    t.basis[i] = m + i;
    t.a[i][t.ncols] = s.c[i];
  }
  Row cost(t.ncols + 1, Rational(0));
  for (std::size_t j = 0; j < m; ++j) cost[j] = -s.rhs[j];  // minimize -rhs . lambda

  LpOutcome out;
  out.pivots = 0;
  if (!t.run(cost)) {
    // Dual unbounded; the primal is infeasible (it is never unbounded here
    // since the objective is non-negative over the non-negative orthant).
    out.status = LpStatus::Infeasible;
    out.pivots = t.pivots;
    return out;
  }

  // At dual optimality the reduced cost of slack column i equals the value
  // of primal variable i; complementary slackness makes the pair optimal.
  std::vector<Rational> x = s.lb;
  for (std::size_t i = 0; i < s.n; ++i) x[i] += cost[m + i];
  verify_assignment(lp, x);

  Rational dual_value;
  for (std::size_t i = 0; i < s.n; ++i) {
    if (t.basis[i] < m) dual_value += s.rhs[t.basis[i]] * t.a[i][t.ncols];
  }
  const Rational primal_value = objective_value(lp, x);
  if (primal_value != dual_value + s.shift_const) {
    throw std::logic_error("lp: dual and primal optima disagree");
  }

  out.status = LpStatus::Optimal;
  out.assignment = std::move(x);
  out.objective = primal_value;
  out.pivots = t.pivots;
  return out;
}

LinearSystemResult solve_linear_system(const std::vector<std::vector<Rational>>& rows,
                                       const std::vector<Rational>& rhs) {
  if (rows.size() != rhs.size()) {
    throw std::invalid_argument("linear system: row/rhs count mismatch");
  }
  LinearSystemResult res;
  if (rows.empty()) {
    res.consistent = true;
    return res;
  }
  const std::size_t m = rows.size();
  const std::size_t n = rows[0].size();
  std::vector<Row> a(m, Row(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("linear system: ragged rows");
    }
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
    a[i][n] = rhs[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < n && prow < m; ++col) {
    std::size_t sel = m;
    for (std::size_t i = prow; i < m; ++i) {
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == m) continue;
    std::swap(a[prow], a[sel]);
    const Rational p = a[prow][col];
    for (auto& v : a[prow]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == prow) continue;
      const Rational f = a[i][col];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= n; ++j) a[i][j] -= f * a[prow][j];
    }
    pivot_col.push_back(col);
    ++prow;
  }
  for (std::size_t i = prow; i < m; ++i) {
    if (a[i][n] != 0) {
      res.consistent = false;
      return res;
    }
  }
  res.consistent = true;
  res.assignment.assign(n, Rational(0));
  for (std::size_t i = 0; i < prow; ++i) res.assignment[pivot_col[i]] = a[i][n];
  return res;
}

}  // namespace coopl
