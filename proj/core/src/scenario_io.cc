// Copyright 2026 The qfd Authors
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

#include "qfd/scenario_io.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qfd/errors.h"

namespace qfd {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ValidationError("unknown key '" + key + "' in " + where);
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ValidationError("missing key '" + key + "' in " + where);
  return obj.at(key);
}

Angle parse_angle(const json& v, const std::string& where) {
  if (v.is_string()) return Angle::parse(v.get<std::string>());
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    return x == 0 ? Angle::pi_multiple(0) : Angle::from_radians(static_cast<double>(x));
  }
  if (v.is_number()) return Angle::from_radians(v.get<double>());
  throw ValidationError(where + " must be a number of radians or a string like \"3pi/2\"");
}

json angle_json(const Angle& a) {
  if (a.exact()) return a.to_string();
  return a.radians();
}

Symbol parse_symbol(const json& obj, const std::string& where, const std::string& default_label) {
  reject_unknown(obj, {"label", "segments"}, where);
  const std::string label = obj.contains("label") ? obj.at("label").get<std::string>() : default_label;
  const json& segs = require(obj, "segments", where);
  if (!segs.is_array()) throw ValidationError(where + ".segments must be an array");
  std::vector<Segment> out;
  for (size_t i = 0; i < segs.size(); ++i) {
    const std::string w = where + ".segments[" + std::to_string(i) + "]";
    reject_unknown(segs[i], {"start_radians", "end_radians", "value"}, w);
    const json& value = require(segs[i], "value", w);
    if (!value.is_number()) throw ValidationError(w + ".value must be a number");
    out.push_back(Segment{parse_angle(require(segs[i], "start_radians", w), w + ".start_radians"),
                          parse_angle(require(segs[i], "end_radians", w), w + ".end_radians"), value.get<double>()});
  }
  return Symbol(std::move(out), label);
}

json symbol_json(const Symbol& s) {
  json segs = json::array();
  for (const Segment& seg : s.segments()) {
    segs.push_back({{"start_radians", angle_json(seg.start)}, {"end_radians", angle_json(seg.end)}, {"value", seg.value}});
  }
  return {{"label", s.label()}, {"segments", segs}};
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    reject_unknown(root, {"name", "symbol_q", "symbol_r", "window", "n_values", "bound_only", "precision"}, "config");
    ScenarioConfig cfg;
    if (root.contains("name")) cfg.name = root.at("name").get<std::string>();
    cfg.symbol_q = parse_symbol(require(root, "symbol_q", "config"), "symbol_q", "q");
    cfg.symbol_r = parse_symbol(require(root, "symbol_r", "config"), "symbol_r", "r");

    const json& w = require(root, "window", "config");
    reject_unknown(w, {"alpha", "omega", "delta"}, "window");
    const Angle alpha = parse_angle(require(w, "alpha", "window"), "window.alpha");
    const Angle omega = parse_angle(require(w, "omega", "window"), "window.omega");
    cfg.window = w.contains("delta") ? FejerWindow(alpha, omega, parse_angle(w.at("delta"), "window.delta"), 0.0)
                                     : FejerWindow::with_default_margin(alpha, omega, 0.0);

    if (root.contains("n_values")) cfg.n_values = root.at("n_values").get<std::vector<int>>();
    if (root.contains("bound_only")) cfg.bound_only = root.at("bound_only").get<bool>();
    if (root.contains("precision")) {
      const json& p = root.at("precision");
      reject_unknown(p, {"escalate", "max_bits"}, "precision");
      if (p.contains("escalate")) cfg.precision.escalate = p.at("escalate").get<bool>();
      if (p.contains("max_bits")) cfg.precision.max_bits = p.at("max_bits").get<int>();
    }
    return cfg;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config has a value of the wrong type: ") + e.what());
  }
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const ScenarioConfig& cfg) {
  json root;
  root["name"] = cfg.name;
  root["symbol_q"] = symbol_json(cfg.symbol_q);
  root["symbol_r"] = symbol_json(cfg.symbol_r);
  root["window"] = {{"alpha", angle_json(cfg.window.alpha())},
                    {"omega", angle_json(cfg.window.omega())},
                    {"delta", angle_json(cfg.window.delta())}};
  root["n_values"] = cfg.n_values;
  root["bound_only"] = cfg.bound_only;
  root["precision"] = {{"escalate", cfg.precision.escalate}, {"max_bits", cfg.precision.max_bits}};
  return root.dump();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string config_hash(const ScenarioConfig& cfg) { return fnv1a_hex(scenario_to_json(cfg)); }

}  // namespace qfd
