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
// Formula-to-game constructions. A CNF formula over n variables becomes a
// min-sum game over 2n + 1 players (one per literal plus a shared player y)
// whose value on the coalition encoding an assignment equals the formula's
// truth value; a min-sum game becomes a layered flow network whose max flow
// restricted to a column selection matches the min-sum value; a DNF formula
// becomes a rule game with one rule per term.

#ifndef COOPL_REDUCTIONS_HPP_
#define COOPL_REDUCTIONS_HPP_

#include <cstdint>
#include <vector>

#include "coopl/coalition.hpp"
#include "coopl/games.hpp"

namespace coopl {

struct Literal {
  std::uint32_t var = 0;  // 0-based variable index
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// Clauses are disjunctions for CNF and conjunctions (terms) for DNF; the
// formula is their conjunction resp. disjunction. A variable may appear at
// most once per clause.
struct Formula {
  std::uint32_t n_vars = 0;
  std::vector<std::vector<Literal>> clauses;
  friend bool operator==(const Formula&, const Formula&) = default;
};

// Throws std::invalid_argument on out-of-range variables, empty clauses,
// or a variable repeated within a clause.
void validate(const Formula& phi);

bool eval_cnf(const Formula& phi, const std::vector<bool>& assignment);
bool eval_dnf(const Formula& phi, const std::vector<bool>& assignment);

// Literal players: variable i maps to players 2i (positive) and 2i + 1
// (negated); the shared player y is player 2 * n_vars.
std::uint32_t literal_player(const Literal& lit);
std::uint32_t y_player(const Formula& phi);

// One 0/1 vector per clause marking its literals, plus one vector marking
// y alone; the min-sum over the assignment coalition (true literals, false
// literals, and y) is exactly the formula's truth value.
MinSum cnf_to_minsum(const Formula& phi);

// The coalition encoding assignment T: player 2i when T[i], player 2i + 1
// when not, plus y.
Coalition cnf_assignment_to_coalition(const Formula& phi, const std::vector<bool>& assignment);

// One rule per DNF term over n_vars players: the term's positive literals
// are required, its negated ones forbidden, value 1. The game value on an
// assignment coalition is the number of satisfied terms, so it is positive
// exactly when the formula is.
McNet dnf_to_mcnet(const Formula& phi);

// The coalition of true variables, over n_vars players.
Coalition dnf_assignment_to_coalition(const Formula& phi, const std::vector<bool>& assignment);

// Layered network: k + 1 vertices in a chain, vector l contributing one
// edge per player between vertices l and l + 1 with capacity equal to the
// player's entry. Edge indices are layer-major: edge l * n + i belongs to
// vector l, player i.
FlowNetwork minsum_to_flow(const MinSum& game);

// Edges selected by coalition S in the layered network: every layer's copy
// of every member of S.
Coalition minsum_edge_coalition(const MinSum& game, const Coalition& s);

}  // namespace coopl

#endif  // COOPL_REDUCTIONS_HPP_
