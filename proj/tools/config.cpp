// Config documents for `simulate` (and the grid part of `sweep`).
//
// {
//   "alpha": 0.6, "n": 4, "horizon": 2000,
//   "coupling": {"type": "logistic-cubic", "mu": 0.05, "delta": -0.1},
//   "initial": {"type": "perturbation", "base": 0, "amplitude": 0.01, "seed": 42},
//   "reference": 0.0,
//   "window": 100
// }
//
// coupling.type: linear (a0, a1, a2) | symmetric (a1, a2) | asymmetric (a1, a2)
//   | logistic-cubic (mu, delta) | logistic-circle (mu, delta)
//   | logistic-diffusive (mu, eps) | maps (f0, f1, f2)
// map.kind: linear (a) | logistic (mu) | cubic (delta) | circle (delta)
//   | scaled (c, map) | negation (map)
// initial.type: perturbation (base, amplitude, seed) | explicit (values)
// "equilibrium": {"guess": g} may replace "reference" to solve for it.

#include <string>

#include "cli.hpp"

namespace fracml::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(path + ": missing key '" + key + "'");
  return *it;
}

double number_at(const json& obj, const std::string& key,
                 const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number()) throw ConfigError(path + "/" + key + ": expected a number");
  return v.get<double>();
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& path) {
  if (!obj.contains(key)) return std::nullopt;
  return number_at(obj, key, path);
}

std::size_t count_at(const json& obj, const std::string& key,
                     const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(path + "/" + key + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string string_at(const json& obj, const std::string& key,
                      const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw ConfigError(path + "/" + key + ": expected a string");
  return v.get<std::string>();
}

template <class T>
T pick(const std::optional<T>& flag, const json& obj, const std::string& key,
       const std::string& path) {
  if (flag) return *flag;
  return static_cast<T>(number_at(obj, key, path));
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError("config parse error at line " + std::to_string(line) +
                      ", column " + std::to_string(column) + ": " + e.what());
  }
}

MapSpec parse_map(const json& j, const std::string& path) {
  const std::string kind = string_at(j, "kind", path);
  if (kind == "linear") return MapSpec::linear(number_at(j, "a", path));
  if (kind == "logistic") return MapSpec::logistic(number_at(j, "mu", path));
  if (kind == "cubic") return MapSpec::cubic(number_at(j, "delta", path));
  if (kind == "circle") return MapSpec::circle(number_at(j, "delta", path));
  if (kind == "scaled") {
    return MapSpec::scaled(number_at(j, "c", path),
                           parse_map(require(j, "map", path), path + "/map"));
  }
  if (kind == "negation") {
    return MapSpec::negation(parse_map(require(j, "map", path), path + "/map"));
  }
  throw ConfigError(path + "/kind: unknown map kind '" + kind + "'");
}

namespace {

Coupling parse_coupling(const json& doc, const SimulationOverrides& o,
                        std::size_t n) {
  const json empty = json::object();
  const json& c = doc.contains("coupling") ? doc["coupling"] : empty;
  const std::string path = "/coupling";
  std::string type;
  if (o.mode) {
    type = *o.mode;
  } else {
    type = string_at(c, "type", path);
  }
  if (type == "linear" || type == "circulant") {
    return CirculantSpec{pick(o.a0, c, "a0", path), pick(o.a1, c, "a1", path),
                         pick(o.a2, c, "a2", path), n};
  }
  if (type == "symmetric") {
    const double a2 = pick(o.a2, c, "a2", path);
    return CirculantSpec{a2, pick(o.a1, c, "a1", path), a2, n};
  }
  if (type == "asymmetric") {
    const double a2 = pick(o.a2, c, "a2", path);
    return CirculantSpec{-a2, pick(o.a1, c, "a1", path), a2, n};
  }
  if (type == "logistic-cubic") {
    return logistic_cubic(pick(o.mu, c, "mu", path), pick(o.delta, c, "delta", path));
  }
  if (type == "logistic-circle") {
    return logistic_circle(pick(o.mu, c, "mu", path),
                           pick(o.delta, c, "delta", path));
  }
  if (type == "logistic-diffusive") {
    return logistic_diffusive(pick(o.mu, c, "mu", path), pick(o.eps, c, "eps", path));
  }
  if (type == "maps") {
    return MapTriple{parse_map(require(c, "f0", path), path + "/f0"),
                     parse_map(require(c, "f1", path), path + "/f1"),
                     parse_map(require(c, "f2", path), path + "/f2")};
  }
  throw ConfigError(path + "/type: unknown coupling type '" + type + "'");
}

InitialCondition parse_initial(const json& doc, const SimulationOverrides& o) {
  UniformPerturbation p;
  if (!doc.contains("initial")) {
    if (o.seed) p.seed = *o.seed;
    return p;
  }
  const json& ic = doc["initial"];
  const std::string path = "/initial";
  const std::string type = string_at(ic, "type", path);
  if (type == "explicit") {
    const json& v = require(ic, "values", path);
    if (!v.is_array()) throw ConfigError(path + "/values: expected an array");
    std::vector<double> values;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) {
        throw ConfigError(path + "/values/" + std::to_string(i) +
                          ": expected a number");
      }
      values.push_back(v[i].get<double>());
    }
    return values;
  }
  if (type == "perturbation") {
    p.base = optional_number(ic, "base", path).value_or(0.0);
    p.amplitude = optional_number(ic, "amplitude", path).value_or(kDefaultPerturbation);
    if (ic.contains("seed")) p.seed = count_at(ic, "seed", path);
    if (o.seed) p.seed = *o.seed;
    return p;
  }
  throw ConfigError(path + "/type: unknown initial condition '" + type + "'");
}

}  // namespace

SimulationConfig load_simulation(const json& doc,
                                 const SimulationOverrides& o) {
  if (!doc.is_object()) throw ConfigError("/: config must be a JSON object");
  SimulationConfig cfg;
  SystemSpec& s = cfg.system;
  s.alpha = pick(o.alpha, doc, "alpha", "");
  s.n = o.n ? *o.n : count_at(doc, "n", "");
  s.horizon = o.horizon ? *o.horizon : count_at(doc, "horizon", "");
  if (doc.contains("divergence_cutoff")) {
    s.divergence_cutoff = number_at(doc, "divergence_cutoff", "");
  }
  s.coupling = parse_coupling(doc, o, s.n);
  s.initial = parse_initial(doc, o);
  if (doc.contains("window")) cfg.window = count_at(doc, "window", "");
  if (doc.contains("equilibrium")) {
    const json& eq = doc["equilibrium"];
    const double guess = number_at(eq, "guess", "/equilibrium");
    const auto* maps = std::get_if<MapTriple>(&s.coupling);
    cfg.reference =
        maps ? find_homogeneous_equilibrium(*maps, guess).x_star : 0.0;
  } else if (doc.contains("reference")) {
    cfg.reference = number_at(doc, "reference", "");
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

}  // namespace fracml::cli
