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

#include "coopl/serialization.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "coopl/errors.hpp"

namespace coopl {
namespace {

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

std::uint32_t u32_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string("field must be a non-negative integer: ") + key);
  }
  return v.get<std::uint32_t>();
}

std::vector<std::uint32_t> u32_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      throw ParseError(std::string(what) + " entries must be integers");
    }
    const auto x = v.get<std::int64_t>();
    if (x < 0) throw ParseError(std::string(what) + " entries must be >= 0");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

std::vector<Rational> rational_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) {
    const BigInt num = numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return Json(num.convert_to<std::int64_t>());
    }
  }
  return Json(rational_to_string(r));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (!std::isfinite(d) || d != std::floor(d)) {
      throw ParseError("fractional floats are inexact; write rationals as \"p/q\" strings");
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(0) << d;
    return Rational(BigInt(os.str()));
  }
  if (j.is_string()) {
    try {
      return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected a rational (integer or \"p/q\" string)");
}

Json game_to_json(const Game& game) {
  Json j;
  j["class"] = to_string(game_class(game));
  if (const auto* w = std::get_if<Wvg>(&game)) {
    Json weights = Json::array();
    for (const auto& wt : w->weights) weights.push_back(rational_to_json(wt));
    j["weights"] = std::move(weights);
    j["quota"] = rational_to_json(w->quota);
  } else if (const auto* vw = std::get_if<VectorWvg>(&game)) {
    Json rows = Json::array();
    for (const auto& row : vw->weights) {
      Json r = Json::array();
      for (const auto& wt : row) r.push_back(rational_to_json(wt));
      rows.push_back(std::move(r));
    }
    j["weights"] = std::move(rows);
    Json quotas = Json::array();
    for (const auto& q : vw->quotas) quotas.push_back(rational_to_json(q));
    j["quotas"] = std::move(quotas);
  } else if (const auto* t = std::get_if<Ttg>(&game)) {
    Json weights = Json::array();
    for (const auto& wt : t->weights) weights.push_back(rational_to_json(wt));
    j["weights"] = std::move(weights);
    Json tasks = Json::array();
    for (const auto& task : t->tasks) {
      tasks.push_back(Json{{"threshold", rational_to_json(task.threshold)},
                           {"value", rational_to_json(task.value)}});
    }
    j["tasks"] = std::move(tasks);
  } else if (const auto* isg = std::get_if<Isg>(&game)) {
    Json pw = Json::array();
    for (const auto& w : isg->pair_weights) pw.push_back(rational_to_json(w));
    j["pair_weights"] = std::move(pw);  // pairs (i, j), i < j, lexicographic
  } else if (const auto* f = std::get_if<FlowNetwork>(&game)) {
    j["vertices"] = f->vertex_count;
    j["source"] = f->source;
    j["sink"] = f->sink;
    Json edges = Json::array();
    for (const auto& e : f->edges) {
      edges.push_back(Json::array({e.from, e.to, rational_to_json(e.capacity)}));
    }
    j["edges"] = std::move(edges);
  } else if (const auto* ms = std::get_if<MinSum>(&game)) {
    j["vectors"] = ms->vectors;
  } else if (const auto* mc = std::get_if<McNet>(&game)) {
    Json rules = Json::array();
    for (const auto& rule : mc->rules) {
      rules.push_back(Json{{"positives", rule.positives},
                           {"negatives", rule.negatives},
                           {"value", rational_to_json(rule.value)}});
    }
    j["rules"] = std::move(rules);
  } else if (const auto* sk = std::get_if<SkillGame>(&game)) {
    j["skills"] = sk->skill_count;
    j["player_skills"] = sk->player_skills;
    j["tasks"] = sk->tasks;
    j["mode"] = sk->mode == SkillMode::Count ? "count" : "conjunctive";
    j["starred"] = sk->starred;
  }
  j["n"] = player_count(game);
  return j;
}

Game game_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("game document must be a JSON object");
  const GameClass cls = [&] {
    try {
      return game_class_from_string(field(j, "class").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }();
  Game game = [&]() -> Game {
    switch (cls) {
      case GameClass::Wvg: {
        Wvg g;
        g.weights = rational_list(field(j, "weights"), "weights");
        g.quota = rational_from_json(field(j, "quota"));
        return g;
      }
      case GameClass::VectorWvg: {
        VectorWvg g;
        for (const auto& row : field(j, "weights")) {
          g.weights.push_back(rational_list(row, "weights row"));
        }
        g.quotas = rational_list(field(j, "quotas"), "quotas");
        return g;
      }
      case GameClass::Ttg: {
        Ttg g;
        g.weights = rational_list(field(j, "weights"), "weights");
        for (const auto& task : field(j, "tasks")) {
          g.tasks.push_back({rational_from_json(field(task, "threshold")),
                             rational_from_json(field(task, "value"))});
        }
        return g;
      }
      case GameClass::Isg: {
        Isg g;
        g.n = u32_field(j, "n");
        g.pair_weights = rational_list(field(j, "pair_weights"), "pair_weights");
        return g;
      }
      case GameClass::Flow: {
        FlowNetwork g;
        g.vertex_count = u32_field(j, "vertices");
        g.source = u32_field(j, "source");
        g.sink = u32_field(j, "sink");
        for (const auto& e : field(j, "edges")) {
          if (!e.is_array() || e.size() != 3) {
            throw ParseError("flow edges must be [from, to, capacity] triples");
          }
          FlowEdge edge;
          edge.from = e[0].get<std::uint32_t>();
          edge.to = e[1].get<std::uint32_t>();
          edge.capacity = rational_from_json(e[2]);
          g.edges.push_back(std::move(edge));
        }
        return g;
      }
      case GameClass::MinSum: {
        MinSum g;
        for (const auto& row : field(j, "vectors")) {
          std::vector<std::int64_t> r;
          for (const auto& v : row) {
            if (!v.is_number_integer() && !v.is_number_unsigned()) {
              throw ParseError("min-sum entries must be integers");
            }
            r.push_back(v.get<std::int64_t>());
          }
          g.vectors.push_back(std::move(r));
        }
        return g;
      }
      case GameClass::McNet: {
        McNet g;
        g.n = u32_field(j, "n");
        for (const auto& rule : field(j, "rules")) {
          McNetRule r;
          r.positives = u32_list(field(rule, "positives"), "positives");
          r.negatives = u32_list(field(rule, "negatives"), "negatives");
          r.value = rational_from_json(field(rule, "value"));
          g.rules.push_back(std::move(r));
        }
        return g;
      }
      case GameClass::Skill: {
        SkillGame g;
        g.skill_count = u32_field(j, "skills");
        for (const auto& row : field(j, "player_skills")) {
          g.player_skills.push_back(u32_list(row, "player_skills"));
        }
        for (const auto& row : field(j, "tasks")) {
          g.tasks.push_back(u32_list(row, "tasks"));
        }
        const auto mode = field(j, "mode").get<std::string>();
        if (mode == "count") {
          g.mode = SkillMode::Count;
        } else if (mode == "conjunctive") {
          g.mode = SkillMode::Conjunctive;
        } else {
          throw ParseError("skill mode must be \"count\" or \"conjunctive\"");
        }
        g.starred = u32_list(field(j, "starred"), "starred");
        return g;
      }
    }
    throw ParseError("unknown game class");
  }();
  try {
    validate(game);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  // "n" is load-bearing for isg/mcnet (read above); elsewhere it is derived
  // from the payload, so when present it just has to agree.
  if (j.contains("n") && u32_field(j, "n") != player_count(game)) {
    throw ParseError("game document \"n\" does not match its payload");
  }
  return game;
}

Json dist_to_json(const CoalitionDistribution& dist) {
  Json j;
  if (const auto* u = std::get_if<UniformDist>(&dist)) {
    j["kind"] = "uniform";
    j["n"] = u->n;
  } else if (const auto* p = std::get_if<ProductDist>(&dist)) {
    j["kind"] = "product";
    j["probs"] = p->probs;
  } else if (const auto* e = std::get_if<EmpiricalDist>(&dist)) {
    j["kind"] = "empirical";
    j["n"] = e->support.empty() ? 0 : e->support[0].player_count();
    Json support = Json::array();
    for (const auto& s : e->support) support.push_back(s.members());
    j["support"] = std::move(support);
    j["probs"] = e->probs;
  } else {
    const auto& w = std::get<RandomWalkPathDist>(dist);
    j["kind"] = "random-walk-path";
    j["network"] = game_to_json(Game(w.net));
  }
  return j;
}

CoalitionDistribution dist_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("distribution document must be a JSON object");
  const auto kind = field(j, "kind").get<std::string>();
  CoalitionDistribution dist = [&]() -> CoalitionDistribution {
    if (kind == "uniform") {
      return UniformDist{u32_field(j, "n")};
    }
    if (kind == "product") {
      ProductDist d;
      d.probs = field(j, "probs").get<std::vector<double>>();
      return d;
    }
    if (kind == "empirical") {
      EmpiricalDist d;
      const std::uint32_t n = u32_field(j, "n");
      for (const auto& row : field(j, "support")) {
        d.support.emplace_back(n, u32_list(row, "support coalition"));
      }
      d.probs = field(j, "probs").get<std::vector<double>>();
      return d;
    }
    if (kind == "random-walk-path") {
      const Game net = game_from_json(field(j, "network"));
      if (!std::holds_alternative<FlowNetwork>(net)) {
        throw ParseError("walk distribution network must be a flow game");
      }
      return RandomWalkPathDist{std::get<FlowNetwork>(net)};
    }
    throw ParseError("unknown distribution kind: " + kind);
  }();
  try {
    validate(dist);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return dist;
}

void write_samples_jsonl(std::ostream& os, const SampleSet& samples) {
  Json header;
  header["format"] = "coopl-samples";
  header["version"] = 1;
  header["n"] = samples.n;
  header["seed"] = samples.seed;
  if (!samples.dist_descriptor.empty()) {
    header["dist"] = Json::parse(samples.dist_descriptor);
  }
  os << header.dump() << '\n';
  for (const auto& s : samples.samples) {
    Json line;
    line["S"] = s.coalition.members();
    line["v"] = rational_to_json(s.value);
    os << line.dump() << '\n';
  }
}

SampleSet read_samples_jsonl(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("sample file is empty");
  Json header;
  try {
    header = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bad sample header: ") + e.what());
  }
  if (!header.is_object() || field(header, "format") != "coopl-samples") {
    throw ParseError("not a coopl sample file");
  }
  SampleSet out;
  out.n = u32_field(header, "n");
  if (header.contains("seed")) out.seed = header["seed"].get<std::uint64_t>();
  if (header.contains("dist")) out.dist_descriptor = header["dist"].dump();
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError("bad sample on line " + std::to_string(lineno) + ": " + e.what());
    }
    Sample s{Coalition(out.n, u32_list(field(j, "S"), "S")),
             rational_from_json(field(j, "v"))};
    out.samples.push_back(std::move(s));
  }
  return out;
}

Json payoff_to_json(const PayoffVector& x) {
  Json j;
  j["format"] = "coopl-payoff";
  j["n"] = x.x.size();
  Json entries = Json::array();
  for (const auto& v : x.x) {
    entries.push_back(Json{{"num", numerator(v).str()},
                           {"den", denominator(v).str()},
                           {"float", to_double(v)}});
  }
  j["x"] = std::move(entries);
  const Rational total = x.total();
  j["total"] = Json{{"num", numerator(total).str()},
                    {"den", denominator(total).str()},
                    {"float", to_double(total)}};
  return j;
}

PayoffVector payoff_from_json(const Json& j) {
  PayoffVector x;
  for (const auto& entry : field(j, "x")) {
    const BigInt num(field(entry, "num").get<std::string>());
    const BigInt den(field(entry, "den").get<std::string>());
    if (den <= 0) throw ParseError("payoff denominator must be positive");
    x.x.emplace_back(num, den);
  }
  return x;
}

Json stability_report_to_json(const StabilityReport& report) {
  Json j;
  j["format"] = "coopl-stability";
  j["tested"] = report.tested;
  j["violations"] = report.violations;
  j["empirical_rate"] = report.empirical_rate;
  j["epsilon"] = report.epsilon;
  j["passed"] = report.passed;
  return j;
}

Json formula_to_json(const Formula& phi) {
  Json j;
  j["n"] = phi.n_vars;
  Json clauses = Json::array();
  for (const auto& clause : phi.clauses) {
    Json c = Json::array();
    for (const auto& lit : clause) {
      const std::int64_t v = static_cast<std::int64_t>(lit.var) + 1;
      c.push_back(lit.positive ? v : -v);
    }
    clauses.push_back(std::move(c));
  }
  j["clauses"] = std::move(clauses);
  return j;
}

Formula formula_from_json(const Json& j) {
  Formula phi;
  phi.n_vars = u32_field(j, "n");
  for (const auto& clause : field(j, "clauses")) {
    if (!clause.is_array()) throw ParseError("clauses must be arrays of signed integers");
    std::vector<Literal> lits;
    for (const auto& v : clause) {
      if (!v.is_number_integer()) throw ParseError("literals must be signed integers");
      const std::int64_t x = v.get<std::int64_t>();
      if (x == 0) throw ParseError("literal 0 is not a variable");
      lits.push_back({static_cast<std::uint32_t>(std::abs(x) - 1), x > 0});
    }
    phi.clauses.push_back(std::move(lits));
  }
  try {
    validate(phi);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return phi;
}

Game flow_hypothesis_game(const LearnedEdgeWeights& h, const FlowNetwork& topology) {
  FlowNetwork net = topology;
  if (h.edge_weights.size() != net.edges.size()) {
    throw std::invalid_argument("hypothesis edge count does not match topology");
  }
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    net.edges[e].capacity = h.edge_weights[e];
  }
  return net;
}

Game ctsg_hypothesis_game(const CtsgHypothesis& h) {
  SkillGame g;
  g.skill_count = h.skill_count;
  g.player_skills = h.player_skills;
  g.tasks = {h.required_skills};
  g.mode = SkillMode::Conjunctive;
  g.starred = {0};
  return g;
}

Json learned_game_to_json(const Game& hypothesis_game, const Json& fit) {
  Json j = game_to_json(hypothesis_game);
  j["learned"] = true;
  j["fit"] = fit;
  return j;
}

}  // namespace coopl
