// Copyright 2026 The Coopl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Formula-to-game constructions and the min-sum-to-flow transformation.

#include <stdexcept>
#include <vector>

#include "coopl/reductions.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace coopl;
using namespace coopl::testing;

namespace {

// All 2^n assignments in mask order, bit i = variable i.
std::vector<std::vector<bool>> all_assignments(std::uint32_t n_vars) {
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_vars); ++mask) {
    std::vector<bool> t(n_vars);
    for (std::uint32_t i = 0; i < n_vars; ++i) t[i] = (mask >> i) & 1;
    out.push_back(std::move(t));
  }
  return out;
}

Formula random_formula(Rng& rng, std::uint32_t n_vars, std::uint32_t n_clauses,
                       std::uint32_t max_width) {
  Formula phi;
  phi.n_vars = n_vars;
  for (std::uint32_t c = 0; c < n_clauses; ++c) {
    std::vector<Literal> clause;
    std::vector<std::uint32_t> vars(n_vars);
    for (std::uint32_t i = 0; i < n_vars; ++i) vars[i] = i;
    for (std::uint32_t pick = 0; pick < max_width && !vars.empty(); ++pick) {
      const auto at = rng.uniform_int(0, static_cast<std::uint32_t>(vars.size()) - 1);
      clause.push_back({vars[at], rng.bernoulli(0.5)});
      vars.erase(vars.begin() + at);
    }
    phi.clauses.push_back(std::move(clause));
  }
  return phi;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("formula validation rejects malformed clauses") {
  CHECK_THROWS_AS(validate(Formula{2, {{}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Formula{2, {{{2, true}}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Formula{2, {{{0, true}, {0, false}}}}),
                  std::invalid_argument);
  CHECK_NOTHROW(validate(Formula{2, {{{0, true}, {1, false}}}}));
}

TEST_CASE("literal players are laid out pairwise with y last") {
  const Formula phi{3, {{{0, true}}}};
  CHECK(literal_player({0, true}) == 0);
  CHECK(literal_player({0, false}) == 1);
  CHECK(literal_player({2, true}) == 4);
  CHECK(literal_player({2, false}) == 5);
  CHECK(y_player(phi) == 6);
}

TEST_CASE("assignment coalitions pick one literal per variable plus y") {
  const Formula phi{2, {{{0, true}, {1, true}}}};
  CHECK(cnf_assignment_to_coalition(phi, {true, false}) ==
        Coalition(5, {0, 3, 4}));
  CHECK(cnf_assignment_to_coalition(phi, {true, true}) == Coalition(5, {0, 2, 4}));
  for (const auto& t : all_assignments(2))
    CHECK(cnf_assignment_to_coalition(phi, t).size() == 3);
  CHECK_THROWS_AS(cnf_assignment_to_coalition(phi, {true}), std::invalid_argument);
}

TEST_CASE("clause game forces the shared player") {
  // (x0 or x1): one vector per clause plus the y vector.
  const Formula phi{2, {{{0, true}, {1, true}}}};
  const MinSum f = cnf_to_minsum(phi);
  REQUIRE(f.vectors.size() == 2);
  const std::uint32_t y = y_player(phi);
  CHECK(evaluate(f, Coalition(5, {0, y})) == Rational(1));
  CHECK(evaluate(f, Coalition(5, {0})) == Rational(0));
  // Without y the min always includes the zero y-row.
  Rng rng(606);
  const Formula rand_phi = random_formula(rng, 3, 2, 2);
  const MinSum rand_f = cnf_to_minsum(rand_phi);
  for (const auto& t : all_assignments(3)) {
    Coalition with_y = cnf_assignment_to_coalition(rand_phi, t);
    std::vector<std::uint32_t> members;
    for (auto p : with_y.members())
      if (p != y_player(rand_phi)) members.push_back(p);
    CHECK(evaluate(rand_f, Coalition(with_y.player_count(), members)) == Rational(0));
  }
}

TEST_CASE("clause game truth-tables match the formula") {
  Rng rng(707);
  for (int inst = 0; inst < 15; ++inst) {
    const std::uint32_t n_vars = 2 + rng.uniform_int(0, 2);
    const Formula phi = random_formula(rng, n_vars, 1 + rng.uniform_int(0, 2), 3);
    validate(phi);
    const MinSum f = cnf_to_minsum(phi);
    CHECK(f.vectors.size() == phi.clauses.size() + 1);
    for (const auto& t : all_assignments(n_vars)) {
      const Rational v = evaluate(f, cnf_assignment_to_coalition(phi, t));
      CHECK(v == Rational(oracle_eval_cnf(phi, t) ? 1 : 0));
      CHECK(eval_cnf(phi, t) == oracle_eval_cnf(phi, t));
    }
  }
}

TEST_CASE("rule game mirrors a disjunctive formula") {
  // (x0 and not x2) or x1.
  const Formula phi{3, {{{0, true}, {2, false}}, {{1, true}}}};
  const McNet net = dnf_to_mcnet(phi);
  REQUIRE(net.rules.size() == 2);
  CHECK(net.rules[0].positives == std::vector<std::uint32_t>{0});
  CHECK(net.rules[0].negatives == std::vector<std::uint32_t>{2});
  CHECK(net.rules[0].value == Rational(1));
  CHECK(net.rules[1].positives == std::vector<std::uint32_t>{1});
  CHECK(net.rules[1].negatives.empty());
  CHECK(evaluate(net, Coalition(3, {0})) == Rational(1));
}

TEST_CASE("empty rule list evaluates to zero everywhere") {
  const McNet net = dnf_to_mcnet(Formula{2, {}});
  for (const Coalition& s : all_coalitions(2)) CHECK(evaluate(net, s) == Rational(0));
}

TEST_CASE("rule game positivity tracks satisfaction exhaustively") {
  Rng rng(808);
  for (int inst = 0; inst < 15; ++inst) {
    const std::uint32_t n_vars = 3 + rng.uniform_int(0, 2);
    const Formula phi = random_formula(rng, n_vars, 3, 2);
    validate(phi);
    const McNet net = dnf_to_mcnet(phi);
    for (const auto& t : all_assignments(n_vars)) {
      const Coalition s = dnf_assignment_to_coalition(phi, t);
      CHECK((evaluate(net, s) > 0) == oracle_eval_dnf(phi, t));
      CHECK(eval_dnf(phi, t) == oracle_eval_dnf(phi, t));
    }
  }
}

TEST_CASE("layered network reproduces the worked three-vector example") {
  const MinSum g{{{5, 2, 3}, {2, 1, 9}, {3, 4, 1}}};
  const FlowNetwork net = minsum_to_flow(g);
  CHECK(net.vertex_count == 4);
  CHECK(net.source == 0);
  CHECK(net.sink == 3);
  REQUIRE(net.edges.size() == 9);
  for (std::size_t l = 0; l < 3; ++l) {
    for (std::size_t i = 0; i < 3; ++i) {
      const FlowEdge& e = net.edges[l * 3 + i];
      CHECK(e.from == l);
      CHECK(e.to == l + 1);
      CHECK(e.capacity == g.vectors[l][i]);
    }
  }
  CHECK(evaluate(net, Coalition::full(9)) == Rational(8));
}

TEST_CASE("single-vector min-sum becomes parallel source-sink edges") {
  const FlowNetwork net = minsum_to_flow(MinSum{{{4, 7}}});
  CHECK(net.vertex_count == 2);
  REQUIRE(net.edges.size() == 2);
  CHECK(net.edges[0].capacity == Rational(4));
  CHECK(net.edges[1].capacity == Rational(7));
  CHECK(evaluate(net, Coalition(2, {1})) == Rational(7));
}

TEST_CASE("column selections carry min-sum values through the network") {
  Rng rng(909);
  for (int inst = 0; inst < 12; ++inst) {
    GameClassSpec spec;
    spec.cls = GameClass::MinSum;
    spec.n = 2 + rng.uniform_int(0, 4);  // players 2..6
    spec.k = 1 + rng.uniform_int(0, 2);  // vectors 1..3
    const Game game = random_game(spec, rng);
    const MinSum& g = std::get<MinSum>(game);
    const FlowNetwork net = minsum_to_flow(g);
    for (const Coalition& s : all_coalitions(spec.n)) {
      const Coalition edges = minsum_edge_coalition(g, s);
      CHECK(evaluate(net, edges) == evaluate(g, s));
      CHECK(evaluate(net, edges) == oracle_minsum_value(g, s));
    }
  }
}

TEST_CASE("edge selection enumerates every layer copy of each member") {
  const MinSum g{{{1, 2}, {3, 4}}};
  CHECK(minsum_edge_coalition(g, Coalition(2, {1})) == Coalition(4, {1, 3}));
  CHECK(minsum_edge_coalition(g, Coalition(2, {0, 1})) == Coalition::full(4));
  CHECK(minsum_edge_coalition(g, Coalition(2)) == Coalition(4));
}

}  // TEST_SUITE
