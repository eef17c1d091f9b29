#pragma once
// Group specifications: a model, n and generators given as translations and dictionary
// symbols, with JSON reading and writing.

#include <fstream>

#include "json.hpp"
#include "terminvar/group.hpp"

namespace terminvar {

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeneratorSpec {
  std::optional<std::array<Rational, 4>> t;
  std::optional<std::string> m;
};

struct GroupSpec {
  std::string model;
  int n = 2;
  std::vector<GeneratorSpec> generators;
};

// Shorthand used by the catalogue: t given as numerators over n + 1.
inline GeneratorSpec gen(std::string m) { return {std::nullopt, std::move(m)}; }
inline GeneratorSpec gen(std::array<int, 4> t, int den, std::string m = {}) {
  std::array<Rational, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = Rational(t[i], den);
  GeneratorSpec g{q, std::nullopt};
  if (!m.empty()) g.m = std::move(m);
  return g;
}

inline Code resolve_generator(const Ambient &amb, const GeneratorSpec &g) {
  const SurfaceModel &model = amb.model();
  int lin = model.group.identity;
  if (g.m) {
    if (!model.dictionary.count(*g.m)) throw SpecError("unknown generator symbol '" + *g.m + "' for model " + model.name);
    lin = model.group.index_of(model.generator(*g.m).int_matrix);
  }
  int t = 0;
  if (g.t) {
    std::array<int, 4> c{};
    for (int i = 0; i < 4; ++i) {
      Rational s = (*g.t)[i] * amb.modulus();
      if (boost::multiprecision::denominator(s) != 1)
        throw SpecError("translation coordinate " + to_string((*g.t)[i]) + " does not have denominator dividing " +
                        std::to_string(amb.modulus()));
      c[i] = static_cast<int>(floor_mod(static_cast<int64_t>(boost::multiprecision::numerator(s)), amb.modulus()));
    }
    t = amb.index(c);
  }
  if (!g.t && !g.m) throw SpecError("generator needs a translation 't' or a symbol 'm'");
  // tau_t o m
  return amb.compose(amb.code(t, model.group.identity), amb.code(0, lin));
}

inline const Ambient &spec_ambient(const GroupSpec &spec) {
  if (spec.n != 2 && spec.n != 3) throw SpecError("n must be 2 or 3");
  try {
    return ambient_context(build_model(spec.model), spec.n);
  } catch (const std::invalid_argument &e) {
    throw SpecError(e.what());
  }
}

inline ActionGroup build_group(const GroupSpec &spec) {
  const Ambient &amb = spec_ambient(spec);
  std::vector<Code> gens;
  for (auto &g : spec.generators) gens.push_back(resolve_generator(amb, g));
  return closure(amb, gens);
}

//===----------------------------------------------------------------------===//
// JSON
//===----------------------------------------------------------------------===//

inline nlohmann::json to_json(const GroupSpec &spec) {
  nlohmann::json j;
  j["model"] = spec.model;
  j["n"] = spec.n;
  j["generators"] = nlohmann::json::array();
  for (auto &g : spec.generators) {
    nlohmann::json e = nlohmann::json::object();
    if (g.t) {
      e["t"] = nlohmann::json::array();
      for (auto &q : *g.t) e["t"].push_back(to_string(q));
    }
    if (g.m) e["m"] = *g.m;
    j["generators"].push_back(e);
  }
  return j;
}

inline GroupSpec parse_group_spec(const nlohmann::json &j) {
  GroupSpec s;
  try {
    s.model = j.at("model").get<std::string>();
    s.n = j.value("n", 2);
    for (auto &e : j.at("generators")) {
      GeneratorSpec g;
      if (e.contains("t")) {
        auto &t = e.at("t");
        if (!t.is_array() || t.size() != 4) throw SpecError("'t' must be an array of 4 rationals");
        std::array<Rational, 4> q;
        for (int i = 0; i < 4; ++i)
          q[i] = t[i].is_string() ? parse_rational(t[i].get<std::string>()) : Rational(t[i].get<int64_t>());
        g.t = q;
      }
      if (e.contains("m")) g.m = e.at("m").get<std::string>();
      s.generators.push_back(g);
    }
  } catch (const nlohmann::json::exception &e) {
    throw SpecError(std::string("malformed group spec: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw SpecError(std::string("malformed group spec: ") + e.what());
  }
  return s;
}

inline GroupSpec parse_group_spec(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  return parse_group_spec(j);
}

inline GroupSpec parse_group_spec(const char *text) { return parse_group_spec(std::string(text)); }

inline GroupSpec load_group_spec(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_spec(ss.str());
}

} // namespace terminvar
