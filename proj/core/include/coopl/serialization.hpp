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
// JSON documents for games, distributions, sample files, payoffs, learned
// hypotheses, and formulas. Writers are canonical (sorted keys, rationals
// as integers or "p/q" strings), so equal values serialize to equal bytes;
// readers reject malformed documents with ParseError.

#ifndef COOPL_SERIALIZATION_HPP_
#define COOPL_SERIALIZATION_HPP_

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "coopl/distributions.hpp"
#include "coopl/games.hpp"
#include "coopl/learners.hpp"
#include "coopl/rational.hpp"
#include "coopl/reductions.hpp"
#include "coopl/stabilizer.hpp"

namespace coopl {

using Json = nlohmann::json;

// Integers stay integers when the denominator is 1 and the numerator fits
// in 64 bits; everything else becomes a "p/q" string. Readers additionally
// accept integral-valued floats; fractional floats are rejected (write
// "1/10", not 0.1, to keep values exact).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json game_to_json(const Game& game);
Game game_from_json(const Json& j);

Json dist_to_json(const CoalitionDistribution& dist);
CoalitionDistribution dist_from_json(const Json& j);

// JSON-lines: a header object carrying n, seed, and the source distribution,
// then one {"S": [...], "v": ...} object per sample.
void write_samples_jsonl(std::ostream& os, const SampleSet& samples);
SampleSet read_samples_jsonl(std::istream& is);

Json payoff_to_json(const PayoffVector& x);
PayoffVector payoff_from_json(const Json& j);

Json stability_report_to_json(const StabilityReport& report);

// Clause literals are signed 1-based variable indices (-3 means "not x3").
Json formula_to_json(const Formula& phi);
Formula formula_from_json(const Json& j);

// Hypotheses serialize as the equivalent game document plus a
// "learned": true marker and a free-form "fit" object (sample count,
// tolerance exponent, replay status, ...). game_from_json reads them back,
// ignoring the extra keys.
Game flow_hypothesis_game(const LearnedEdgeWeights& h, const FlowNetwork& topology);
Game ctsg_hypothesis_game(const CtsgHypothesis& h);
Json learned_game_to_json(const Game& hypothesis_game, const Json& fit);

}  // namespace coopl

#endif  // COOPL_SERIALIZATION_HPP_
