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
// Exact linear programming and linear-system solving over rationals.
//
// solve_lp minimizes objective . x subject to the given constraint rows and
// per-variable lower bounds (default 0) using two-phase primal simplex with
// Bland's rule: the entering column is the lowest-index one with a negative
// reduced cost and ratio-test ties leave by the lowest basis index, which
// guarantees termination without magnitude heuristics. All pivoting is exact,
// so reported optima are exact rationals, never approximations.
//
// solve_lp_via_dual solves the same problem through its dual. The LPs this
// library builds (core relaxations, threshold fitting, weighted-voting
// fitting) have few variables and up to thousands of inequality rows; their
// duals start from a feasible slack basis and need no phase 1, which is
// decisively cheaper. Preconditions: no equality rows and a componentwise
// non-negative objective after the lower-bound shift. The primal assignment
// is recovered from the reduced costs of the dual slack columns and verified
// against every constraint before it is returned.

#ifndef COOPL_LP_HPP_
#define COOPL_LP_HPP_

#include <cstdint>
#include <vector>

#include "coopl/rational.hpp"

namespace coopl {

enum class Relation { Geq, Leq, Eq };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::Geq;
  Rational rhs;
};

struct LinearProgram {
  std::vector<Rational> objective;  // minimized
  std::vector<LinearConstraint> constraints;
  // Optional per-variable lower bounds; empty means all zero. Variables are
  // otherwise unbounded above.
  std::vector<Rational> lower_bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> assignment;  // meaningful only when Optimal
  Rational objective;                // meaningful only when Optimal
  std::uint64_t pivots = 0;
};

LpOutcome solve_lp(const LinearProgram& lp);
LpOutcome solve_lp_via_dual(const LinearProgram& lp);

struct LinearSystemResult {
  bool consistent = false;
  std::vector<Rational> assignment;  // meaningful only when consistent
};

// Gaussian elimination with a fixed elimination order (columns left to
// right, first usable pivot row from the top); underdetermined systems get
// their free variables set to 0, so equal inputs yield equal outputs.
LinearSystemResult solve_linear_system(const std::vector<std::vector<Rational>>& rows,
                                       const std::vector<Rational>& rhs);

}  // namespace coopl

#endif  // COOPL_LP_HPP_
