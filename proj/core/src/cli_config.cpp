// Copyright 2026 The lcexact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lcexact/cli_io.hpp"
#include "lcexact/error.hpp"
#include "lcexact/nonshrink.hpp"

namespace lcexact::cli {
namespace {

using json = nlohmann::ordered_json;

struct FamilyInfo {
  const char* name;
  std::vector<std::string> keys;
};

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> f{
      {"constant", {"value"}},
      {"gaussian-bump", {"center", "amplitude", "sigma"}},
      {"tanh-step", {"inner", "outer", "radius", "width"}},
      {"swirl-gaussian", {"amplitude", "sigma"}},
      {"staircase", {"c", "p", "cycles", "low", "high"}},
      {"table", {}},
  };
  return f;
}

const FamilyInfo* find_family(const std::string& name) {
  for (const auto& f : families()) {
    if (name == f.name) return &f;
  }
  return nullptr;
}

class Reader {
 public:
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& reason) {
    errors.push_back(path + ": " + reason);
  }

  // True when j is an object; keys outside `allowed` are reported.
  bool object(const json& j, const std::string& path, const std::vector<std::string>& allowed) {
    if (!j.is_object()) {
      fail(path, "must be an object");
      return false;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
        fail(sub(path, it.key()), "unknown key");
      }
    }
    return true;
  }

  static std::string sub(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  std::optional<double> number(const json& obj, const std::string& path, const std::string& key,
                               bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(sub(path, key), "missing");
      return std::nullopt;
    }
    if (!it->is_number()) {
      fail(sub(path, key), "must be a number");
      return std::nullopt;
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
      fail(sub(path, key), "must be finite");
      return std::nullopt;
    }
    return v;
  }

  std::optional<int> integer(const json& obj, const std::string& path, const std::string& key,
                             bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(sub(path, key), "missing");
      return std::nullopt;
    }
    if (!it->is_number_integer()) {
      fail(sub(path, key), "must be an integer");
      return std::nullopt;
    }
    const auto v = it->get<long long>();
    if (v < -1000000000LL || v > 1000000000LL) {
      fail(sub(path, key), "out of range");
      return std::nullopt;
    }
    return static_cast<int>(v);
  }

  std::optional<std::vector<double>> numbers(const json& obj, const std::string& path,
                                             const std::string& key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(sub(path, key), "missing");
      return std::nullopt;
    }
    if (!it->is_array()) {
      fail(sub(path, key), "must be an array of numbers");
      return std::nullopt;
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& e = (*it)[i];
      if (!e.is_number() || !std::isfinite(e.get<double>())) {
        fail(sub(path, key) + "[" + std::to_string(i) + "]", "must be a finite number");
        return std::nullopt;
      }
      out.push_back(e.get<double>());
    }
    return out;
  }

  std::optional<std::string> string(const json& obj, const std::string& path,
                                    const std::string& key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(sub(path, key), "missing");
      return std::nullopt;
    }
    if (!it->is_string()) {
      fail(sub(path, key), "must be a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }
};

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

ProfileSpec read_profile(Reader& rd, const json& j, const std::string& path) {
  ProfileSpec spec;
  if (!j.is_object()) {
    rd.fail(path, "must be an object");
    return spec;
  }
  const auto family = rd.string(j, path, "family", true);
  if (!family) return spec;
  const FamilyInfo* info = find_family(*family);
  if (info == nullptr) {
    rd.fail(Reader::sub(path, "family"), "unknown family '" + *family + "'");
    return spec;
  }
  spec.family = *family;
  spec.params.clear();
  std::vector<std::string> allowed{"family"};
  if (spec.family == "table") {
    allowed.insert(allowed.end(), {"r", "values"});
  } else {
    allowed.insert(allowed.end(), info->keys.begin(), info->keys.end());
  }
  rd.object(j, path, allowed);
  if (spec.family == "table") {
    const auto r = rd.numbers(j, path, "r", true);
    const auto v = rd.numbers(j, path, "values", true);
    if (r && v) {
      spec.table_r = *r;
      spec.table_values = *v;
      if (r->size() != v->size() || r->size() < 2) {
        rd.fail(path, "table needs r and values of equal length >= 2");
      } else if (!strictly_increasing(*r) || r->front() != 0.0) {
        rd.fail(Reader::sub(path, "r"), "must start at 0 and increase strictly");
      }
    }
    return spec;
  }
  for (const auto& key : info->keys) {
    if (key == "cycles") {
      if (const auto c = rd.integer(j, path, key, true)) {
        if (*c < 0) rd.fail(Reader::sub(path, key), "must be >= 0");
        spec.params[key] = *c;
      }
    } else if (const auto v = rd.number(j, path, key, true)) {
      spec.params[key] = *v;
    }
  }
  const auto& p = spec.params;
  const auto has = [&](const char* k) { return p.count(k) > 0; };
  if (has("sigma") && !(p.at("sigma") > 0.0)) rd.fail(Reader::sub(path, "sigma"), "must be > 0");
  if (has("width") && !(p.at("width") > 0.0)) rd.fail(Reader::sub(path, "width"), "must be > 0");
  if (spec.family == "staircase") {
    if (has("c") && !(p.at("c") > 0.0)) rd.fail(Reader::sub(path, "c"), "must be > 0");
    if (has("p") && !(p.at("p") > 0.0)) rd.fail(Reader::sub(path, "p"), "must be > 0");
  }
  return spec;
}

// Bounds [lo, hi] of the values a profile family can take.
std::optional<std::pair<double, double>> value_bounds(const ProfileSpec& s) {
  const auto& p = s.params;
  if (s.family == "constant" && p.count("value")) return std::pair{p.at("value"), p.at("value")};
  if (s.family == "gaussian-bump" && p.count("center") && p.count("amplitude")) {
    const double c = p.at("center"), a = std::abs(p.at("amplitude"));
    return std::pair{c - a, c + a};
  }
  if (s.family == "tanh-step" && p.count("inner") && p.count("outer")) {
    return std::minmax(p.at("inner"), p.at("outer"));
  }
  if (s.family == "staircase" && p.count("low") && p.count("high")) {
    return std::minmax(p.at("low"), p.at("high"));
  }
  if (s.family == "table" && !s.table_values.empty()) {
    const auto [lo, hi] = std::minmax_element(s.table_values.begin(), s.table_values.end());
    return std::pair{*lo, *hi};
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json profile_json(const ProfileSpec& s) {
  json j;
  j["family"] = s.family;
  if (s.family == "table") {
    j["r"] = s.table_r;
    j["values"] = s.table_values;
    return j;
  }
  const FamilyInfo* info = find_family(s.family);
  if (info == nullptr) throw InvalidArgument("unknown profile family '" + s.family + "'");
  for (const auto& key : info->keys) {
    const auto it = s.params.find(key);
    if (it == s.params.end()) throw InvalidArgument("profile is missing '" + key + "'");
    if (key == "cycles") {
      j[key] = static_cast<long long>(it->second);
    } else {
      j[key] = it->second;
    }
  }
  return j;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  // Duplicate keys are collected while parsing; nlohmann keeps the last one.
  std::vector<std::set<std::string>> seen;
  std::vector<std::string> duplicates;
  const json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) {
      seen.emplace_back();
    } else if (ev == json::parse_event_t::object_end) {
      seen.pop_back();
    } else if (ev == json::parse_event_t::key) {
      const std::string key = parsed.get<std::string>();
      if (!seen.back().insert(key).second) duplicates.push_back(key);
    }
    return true;
  };
  json root;
  try {
    root = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    throw ConfigurationError("syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " +
                             (pos == std::string::npos ? what : what.substr(pos)));
  }

  Reader rd;
  for (const auto& d : duplicates) rd.fail(d, "duplicate key");
  RunConfig cfg;
  if (!rd.object(root, "(root)", {"model", "initial", "grid", "tolerances", "outputs", "verify",
                                  "counterexample"})) {
    throw ConfigurationError(rd.errors.front());
  }

  if (const auto it = root.find("model"); it != root.end()) {
    if (rd.object(*it, "model", {"beta", "delta1"})) {
      if (auto v = rd.number(*it, "model", "beta", true)) cfg.model.beta = *v;
      if (auto v = rd.number(*it, "model", "delta1", true)) cfg.model.delta1 = *v;
    }
  }
  bool model_ok = true;
  if (!(cfg.model.beta > 1.0)) {
    rd.fail("model.beta", "beta must exceed 1");
    model_ok = false;
  } else if (!(cfg.model.delta1 > 0.0) || !(cfg.model.delta1 < std::numbers::pi / 2)) {
    rd.fail("model.delta1", "must lie in (0, pi/2)");
    model_ok = false;
  } else {
    const double s = std::sin(cfg.model.delta1);
    if (!(cfg.model.beta * s * s > 1.0)) {
      rd.fail("model", "beta sin^2(delta1) must exceed 1");
      model_ok = false;
    }
  }

  if (const auto it = root.find("initial"); it == root.end()) {
    rd.fail("initial", "missing");
  } else if (rd.object(*it, "initial", {"u0", "psi0", "far_field_psi"})) {
    for (const char* key : {"u0", "psi0"}) {
      const auto p = it->find(key);
      if (p == it->end()) {
        rd.fail(std::string("initial.") + key, "missing");
        continue;
      }
      (key[0] == 'u' ? cfg.initial.u0 : cfg.initial.psi0) =
          read_profile(rd, *p, std::string("initial.") + key);
    }
    cfg.initial.far_field_psi = rd.number(*it, "initial", "far_field_psi", false);
    if (model_ok) {
      const double lo = cfg.model.delta1, hi = std::numbers::pi - cfg.model.delta1;
      if (const auto b = value_bounds(cfg.initial.psi0)) {
        if (!(b->first > lo && b->second < hi)) {
          rd.fail("initial.psi0", "values must stay inside (delta1, pi - delta1)");
        }
      }
      if (cfg.initial.far_field_psi &&
          !(*cfg.initial.far_field_psi > lo && *cfg.initial.far_field_psi < hi)) {
        rd.fail("initial.far_field_psi", "must lie inside (delta1, pi - delta1)");
      }
    }
  }

  if (const auto it = root.find("grid"); it != root.end()) {
    if (rd.object(*it, "grid", {"r_max", "n_r", "times"})) {
      if (auto v = rd.number(*it, "grid", "r_max", false)) cfg.grid.r_max = *v;
      if (auto v = rd.integer(*it, "grid", "n_r", false)) cfg.grid.n_r = *v;
      if (auto v = rd.numbers(*it, "grid", "times", false)) cfg.grid.times = *v;
    }
  }
  if (!(cfg.grid.r_max > 0.0)) rd.fail("grid.r_max", "must be > 0");
  if (cfg.grid.n_r < 16) rd.fail("grid.n_r", "must be >= 16");
  if (cfg.grid.times.empty()) rd.fail("grid.times", "must not be empty");
  if (!cfg.grid.times.empty() && cfg.grid.times.front() < 0.0) {
    rd.fail("grid.times", "must be non-negative");
  }
  if (!strictly_increasing(cfg.grid.times)) rd.fail("grid.times", "must increase strictly");

  if (const auto it = root.find("tolerances"); it != root.end()) {
    if (rd.object(*it, "tolerances", {"quadrature_abs", "residual_h", "residual_tau"})) {
      for (auto [key, dst] : {std::pair{"quadrature_abs", &cfg.tolerances.quadrature_abs},
                              std::pair{"residual_h", &cfg.tolerances.residual_h},
                              std::pair{"residual_tau", &cfg.tolerances.residual_tau}}) {
        if (auto v = rd.number(*it, "tolerances", key, false)) {
          *dst = *v;
          if (!(*v > 0.0)) rd.fail(std::string("tolerances.") + key, "must be > 0");
        }
      }
    }
  }

  if (const auto it = root.find("outputs"); it != root.end()) {
    if (rd.object(*it, "outputs", {"directory", "formats"})) {
      if (auto v = rd.string(*it, "outputs", "directory", false)) cfg.outputs.directory = *v;
      if (const auto f = it->find("formats"); f != it->end()) {
        cfg.outputs.formats.clear();
        if (!f->is_array()) {
          rd.fail("outputs.formats", "must be an array of strings");
        } else {
          for (const auto& e : *f) {
            if (!e.is_string()) {
              rd.fail("outputs.formats", "must be an array of strings");
              break;
            }
            const std::string s = e.get<std::string>();
            if (s != "csv" && s != "json" && s != "svg") {
              rd.fail("outputs.formats", "unknown format '" + s + "'");
            } else if (std::find(cfg.outputs.formats.begin(), cfg.outputs.formats.end(), s) !=
                       cfg.outputs.formats.end()) {
              rd.fail("outputs.formats", "duplicate format '" + s + "'");
            } else {
              cfg.outputs.formats.push_back(s);
            }
          }
        }
      }
    }
  }
  if (cfg.outputs.directory.empty()) rd.fail("outputs.directory", "must not be empty");

  if (const auto it = root.find("verify"); it != root.end()) {
    if (rd.object(*it, "verify", {"time", "r_min", "r_max"})) {
      cfg.verify.time = rd.number(*it, "verify", "time", false);
      if (auto v = rd.number(*it, "verify", "r_min", false)) cfg.verify.r_min = *v;
      if (auto v = rd.number(*it, "verify", "r_max", false)) cfg.verify.r_max = *v;
    }
  }
  if (cfg.verify.time && !(*cfg.verify.time > 0.0)) rd.fail("verify.time", "must be > 0");
  if (!(cfg.verify.r_min > 0.0) || !(cfg.verify.r_max > cfg.verify.r_min)) {
    rd.fail("verify", "needs 0 < r_min < r_max");
  }

  if (const auto it = root.find("counterexample"); it != root.end()) {
    if (rd.object(*it, "counterexample", {"c", "p", "cycles", "probe_count"})) {
      CounterexampleSection ce;
      if (auto v = rd.number(*it, "counterexample", "c", false)) ce.c = *v;
      if (auto v = rd.number(*it, "counterexample", "p", false)) ce.p = *v;
      if (auto v = rd.integer(*it, "counterexample", "cycles", false)) ce.cycles = *v;
      if (auto v = rd.integer(*it, "counterexample", "probe_count", false)) ce.probe_count = *v;
      if (!(ce.c > 0.0)) rd.fail("counterexample.c", "must be > 0");
      if (!(ce.p > 0.0)) rd.fail("counterexample.p", "must be > 0");
      if (ce.cycles < 0) rd.fail("counterexample.cycles", "must be >= 0");
      if (ce.probe_count < 1) rd.fail("counterexample.probe_count", "must be >= 1");
      cfg.counterexample = ce;
    }
  }

  if (!rd.errors.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& e : rd.errors) msg += "\n  " + e;
    throw ConfigurationError(msg);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  json j;
  j["model"] = {{"beta", c.model.beta}, {"delta1", c.model.delta1}};
  j["initial"]["u0"] = profile_json(c.initial.u0);
  j["initial"]["psi0"] = profile_json(c.initial.psi0);
  if (c.initial.far_field_psi) j["initial"]["far_field_psi"] = *c.initial.far_field_psi;
  j["grid"] = {{"r_max", c.grid.r_max}, {"n_r", c.grid.n_r}, {"times", c.grid.times}};
  j["tolerances"] = {{"quadrature_abs", c.tolerances.quadrature_abs},
                     {"residual_h", c.tolerances.residual_h},
                     {"residual_tau", c.tolerances.residual_tau}};
  j["outputs"] = {{"directory", c.outputs.directory}, {"formats", c.outputs.formats}};
  j["verify"] = json::object();
  if (c.verify.time) j["verify"]["time"] = *c.verify.time;
  j["verify"]["r_min"] = c.verify.r_min;
  j["verify"]["r_max"] = c.verify.r_max;
  if (c.counterexample) {
    j["counterexample"] = {{"c", c.counterexample->c},
                           {"p", c.counterexample->p},
                           {"cycles", c.counterexample->cycles},
                           {"probe_count", c.counterexample->probe_count}};
  }
  return j.dump(2) + "\n";
}

RadialProfile build_profile(const ProfileSpec& s) {
  const auto get = [&](const char* k) {
    const auto it = s.params.find(k);
    if (it == s.params.end()) {
      throw InvalidArgument("profile family '" + s.family + "' needs '" + k + "'");
    }
    return it->second;
  };
  if (s.family == "constant") return RadialProfile::constant(get("value"));
  if (s.family == "gaussian-bump") {
    return RadialProfile::gaussian_bump(get("center"), get("amplitude"), get("sigma"));
  }
  if (s.family == "tanh-step") {
    return RadialProfile::tanh_step(get("inner"), get("outer"), get("radius"), get("width"));
  }
  if (s.family == "swirl-gaussian") {
    return RadialProfile::swirl_gaussian(get("amplitude"), get("sigma"));
  }
  if (s.family == "table") return RadialProfile::table(s.table_r, s.table_values);
  if (s.family == "staircase") {
    const double lo = get("low"), hi = get("high");
    const RadialProfile v0 = build_v0(StaircaseSchedule::power_law(
        get("c"), get("p"), static_cast<int>(get("cycles"))));
    return v0.mapped([lo, hi](double v) { return lo + (hi - lo) * v; });
  }
  throw InvalidArgument("unknown profile family '" + s.family + "'");
}

InitialData build_initial(const RunConfig& c) {
  return {ModelParams::create(c.model.beta, c.model.delta1), build_profile(c.initial.u0),
          build_profile(c.initial.psi0), c.initial.far_field_psi};
}

std::vector<double> radial_grid(const GridSection& g) {
  if (g.n_r < 2 || !(g.r_max > 0.0)) throw InvalidArgument("radial grid needs n_r >= 2, r_max > 0");
  std::vector<double> r(static_cast<std::size_t>(g.n_r));
  const double n1 = static_cast<double>(g.n_r - 1);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = g.r_max * (static_cast<double>(j) / n1);
  r.back() = g.r_max;
  return r;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace lcexact::cli
