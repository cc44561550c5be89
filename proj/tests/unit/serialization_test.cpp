// Copyright 2026 The Coopl Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON document round-trips: games, distributions, sample files, payoffs,
// formulas, and learned-hypothesis documents.

#include <sstream>
#include <vector>

#include "coopl/errors.hpp"
#include "coopl/serialization.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace coopl;
using namespace coopl::testing;

TEST_SUITE("serialization") {

TEST_CASE("rationals serialize as integers or p/q strings") {
  CHECK(rational_to_json(Rational(3)) == Json(3));
  CHECK(rational_to_json(Rational(-7)) == Json(-7));
  CHECK(rational_to_json(Rational(3, 2)) == Json("3/2"));
  CHECK(rational_from_json(Json("3/2")) == Rational(3, 2));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK(rational_from_json(Json(2.0)) == Rational(2));
  CHECK_THROWS_AS(rational_from_json(Json(0.1)), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("abc")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json::array()), ParseError);
  // Values beyond 64-bit integers survive through the string form.
  const Rational huge = Rational(BigInt(1) << 80, 3);
  CHECK(rational_from_json(rational_to_json(huge)) == huge);
}

TEST_CASE("every game class round-trips through its document") {
  Rng rng(1001);
  const GameClass classes[] = {GameClass::Wvg,  GameClass::VectorWvg, GameClass::Ttg,
                               GameClass::Isg,  GameClass::Flow,      GameClass::MinSum,
                               GameClass::McNet, GameClass::Skill};
  for (const GameClass cls : classes) {
    GameClassSpec spec;
    spec.cls = cls;
    spec.n = 4;
    spec.k = 2;
    // Only pairwise-interaction weights may go negative.
    spec.weight_lo = cls == GameClass::Isg ? -2 : 0;
    spec.weight_hi = 6;
    for (int rep = 0; rep < 3; ++rep) {
      const Game game = random_game(spec, rng);
      const Json doc = game_to_json(game);
      CHECK(doc.contains("class"));
      CHECK(doc.at("n").get<std::uint32_t>() == player_count(game));
      const Game back = game_from_json(doc);
      CHECK(back == game);
      // Canonical writers: serializing again yields identical bytes.
      CHECK(game_to_json(back).dump() == doc.dump());
    }
  }
}

TEST_CASE("game documents carry the class names of the file contract") {
  CHECK(game_to_json(Game(Wvg{{1, 2}, 2})).at("class") == "wvg");
  CHECK(game_to_json(Game(VectorWvg{{{1, 0}, {0, 1}}, {1, 1}})).at("class") ==
        "vector_wvg");
  CHECK(game_to_json(Game(Ttg{{1}, {{1, 2}}})).at("class") == "ttg");
  CHECK(game_to_json(Game(Isg{3, {1, 2, 3}})).at("class") == "isg");
  CHECK(game_to_json(Game(MinSum{{{1, 2}}})).at("class") == "minsum");
  CHECK(game_to_json(Game(McNet{2, {{{0}, {}, 1}}})).at("class") == "mcnet");
  const FlowNetwork net{2, 0, 1, {{0, 1, 3}}};
  CHECK(game_to_json(Game(net)).at("class") == "flow");
}

TEST_CASE("game reader rejects malformed documents") {
  CHECK_THROWS_AS(game_from_json(Json{{"class", "sudoku"}, {"n", 2}}), ParseError);
  CHECK_THROWS_AS(game_from_json(Json{{"n", 2}}), ParseError);
  CHECK_THROWS_AS(game_from_json(Json::array()), ParseError);
  // Payload inconsistent with the declared player count.
  Json doc = game_to_json(Game(Wvg{{1, 2, 3}, 2}));
  doc["n"] = 7;
  CHECK_THROWS_AS(game_from_json(doc), ParseError);
  // Payload that violates a class invariant (negative weight).
  Json bad = game_to_json(Game(Wvg{{1, 2}, 2}));
  bad["weights"][0] = -1;
  CHECK_THROWS_AS(game_from_json(bad), std::exception);
}

TEST_CASE("distributions round-trip") {
  std::vector<CoalitionDistribution> dists;
  dists.push_back(UniformDist{5});
  dists.push_back(ProductDist{{0.25, 0.5, 1.0}});
  dists.push_back(EmpiricalDist{{Coalition(3, {0}), Coalition(3, {1, 2})}, {0.4, 0.6}});
  FlowNetwork net{3, 0, 2, {{0, 1, 2}, {1, 2, 5}}};
  dists.push_back(RandomWalkPathDist{net});
  for (const auto& dist : dists) {
    const Json doc = dist_to_json(dist);
    const CoalitionDistribution back = dist_from_json(doc);
    CHECK(dist_to_json(back).dump() == doc.dump());
    CHECK(player_count(back) == player_count(dist));
  }
  CHECK_THROWS_AS(dist_from_json(Json{{"kind", "mystery"}}), ParseError);
}

TEST_CASE("sample files round-trip through the line format") {
  SampleSet set;
  set.n = 3;
  set.seed = 42;
  set.dist_descriptor = dist_to_json(CoalitionDistribution(UniformDist{3})).dump();
  set.samples = {{Coalition(3, {0, 2}), Rational(5, 2)}, {Coalition(3), 0}};
  std::ostringstream out;
  write_samples_jsonl(out, set);
  std::istringstream in(out.str());
  const SampleSet back = read_samples_jsonl(in);
  CHECK(back == set);
  // Writer is canonical.
  std::ostringstream again;
  write_samples_jsonl(again, back);
  CHECK(again.str() == out.str());
}

TEST_CASE("sample reader rejects garbage") {
  std::istringstream missing_header("{\"S\": [0], \"v\": 1}\n");
  CHECK_THROWS_AS(read_samples_jsonl(missing_header), ParseError);
  std::istringstream bad_line("{\"format\":\"coopl-samples\",\"n\":2,\"seed\":0,"
                              "\"version\":1,\"dist\":{\"kind\":\"uniform\",\"n\":2}}\n"
                              "not json\n");
  CHECK_THROWS_AS(read_samples_jsonl(bad_line), ParseError);
  std::istringstream out_of_range("{\"format\":\"coopl-samples\",\"n\":2,\"seed\":0,"
                                  "\"version\":1,\"dist\":{\"kind\":\"uniform\",\"n\":2}}\n"
                                  "{\"S\":[5],\"v\":1}\n");
  CHECK_THROWS_AS(read_samples_jsonl(out_of_range), std::exception);
}

TEST_CASE("payoffs and stability reports serialize faithfully") {
  const PayoffVector x{{Rational(1, 2), Rational(0), Rational(3)}};
  const Json doc = payoff_to_json(x);
  CHECK(payoff_from_json(doc) == x);
  CHECK_THROWS_AS(payoff_from_json(Json{{"totally", "wrong"}}), ParseError);

  StabilityReport report;
  report.tested = 100;
  report.violations = 3;
  report.empirical_rate = 0.03;
  report.epsilon = 0.05;
  report.passed = true;
  const Json rj = stability_report_to_json(report);
  CHECK(rj.at("tested") == 100);
  CHECK(rj.at("violations") == 3);
  CHECK(rj.at("passed") == true);
}

TEST_CASE("formulas use signed one-based literals") {
  const Formula phi{3, {{{0, true}, {2, false}}, {{1, true}}}};
  const Json doc = formula_to_json(phi);
  CHECK(doc.at("n") == 3);
  CHECK(doc.at("clauses") == Json::parse("[[1, -3], [2]]"));
  CHECK(formula_from_json(doc) == phi);
  CHECK_THROWS_AS(formula_from_json(Json{{"n", 2}, {"clauses", {{0}}}}), ParseError);
  CHECK_THROWS_AS(formula_from_json(Json{{"n", 2}, {"clauses", {{3}}}}),
                  std::exception);
}

TEST_CASE("learned hypotheses reread as plain game documents") {
  const FlowNetwork topology{3, 0, 2, {{0, 1, 0}, {1, 2, 0}}};
  LearnedEdgeWeights h;
  h.edge_weights = {Rational(3), Rational(5)};
  const Game hyp_game = flow_hypothesis_game(h, topology);
  const auto& net = std::get<FlowNetwork>(hyp_game);
  CHECK(net.edges[0].capacity == Rational(3));
  CHECK(net.edges[1].capacity == Rational(5));

  const Json doc = learned_game_to_json(hyp_game, Json{{"replay", "exact"}});
  CHECK(doc.at("learned") == true);
  CHECK(doc.at("fit").at("replay") == "exact");
  CHECK(game_from_json(doc) == hyp_game);

  CtsgHypothesis ch;
  ch.skill_count = 3;
  ch.player_skills = {{0, 1}, {2}};
  ch.required_skills = {0, 2};
  const Game skill_game = ctsg_hypothesis_game(ch);
  const auto& sg = std::get<SkillGame>(skill_game);
  CHECK(sg.mode == SkillMode::Conjunctive);
  const Json sdoc = learned_game_to_json(skill_game, Json::object());
  CHECK(game_from_json(sdoc) == skill_game);
}

}  // TEST_SUITE
