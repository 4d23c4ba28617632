// Copyright 2026 The gsmve Authors
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

#include "gsmve/protocol_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef GSMVE_VERSION
#define GSMVE_VERSION "dev"
#endif

namespace gsmve {

namespace {

using nlohmann::json;

std::size_t parse_count(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("ms", "bad length '" + s + "' in '" + whole + "'");
  return static_cast<std::size_t>(std::stoull(s));
}

ErrorModelSpec error_model_from(const json& j) {
  if (!j.is_object()) throw ParseError("error_model", "expected an object");
  ErrorModelSpec spec;
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("error_model.kind", "expected a string");
  try {
    spec.kind = error_kind_from_string(j["kind"].get<std::string>());
  } catch (const InvalidArgument& e) {
    throw ParseError("error_model.kind", e.what());
  }
  int found = 0;
  for (const char* name : {"r", "theta", "gamma"}) {
    if (!j.contains(name)) continue;
    if (!j[name].is_number()) throw ParseError(std::string("error_model.") + name, "expected a number");
    spec.parameter_name = name;
    spec.value = j[name].get<double>();
    ++found;
  }
  if (found != 1) throw ParseError("error_model", "exactly one of r, theta, gamma is required");
  try {
    spec.build();
  } catch (const InvalidArgument& e) {
    throw ParseError("error_model", e.what());
  }
  return spec;
}

}  // namespace

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_count(item, text));
      continue;
    }
    const std::size_t lo = parse_count(item.substr(0, dots), text);
    std::string rest = item.substr(dots + 2);
    std::size_t step = 1;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      step = parse_count(rest.substr(colon + 1), text);
      rest = rest.substr(0, colon);
    }
    const std::size_t hi = parse_count(rest, text);
    if (step == 0 || hi < lo) throw ParseError("ms", "bad range '" + item + "'");
    for (std::size_t m = lo; m <= hi; m += step) out.push_back(m);
  }
  if (out.empty()) throw ParseError("ms", "no lengths in '" + text + "'");
  return out;
}

ProtocolConfig protocol_config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("document", "expected an object");

  ProtocolConfig cfg;
  cfg.source_text = text;
  if (!doc.contains("ms")) throw ParseError("document", "missing field 'ms'");
  const json& ms = doc["ms"];
  if (ms.is_string()) {
    cfg.ms = parse_lengths(ms.get<std::string>());
  } else if (ms.is_array()) {
    for (const auto& v : ms) {
      if (!v.is_number_unsigned()) throw ParseError("ms", "lengths must be non-negative integers");
      cfg.ms.push_back(v.get<std::size_t>());
    }
  } else {
    throw ParseError("ms", "expected an array or a range string");
  }

  if (doc.contains("n_circuits")) {
    if (!doc["n_circuits"].is_number_unsigned() || doc["n_circuits"].get<std::size_t>() == 0)
      throw ParseError("n_circuits", "expected a positive integer");
    cfg.n_circuits = doc["n_circuits"].get<std::size_t>();
  }
  if (doc.contains("shots")) {
    const json& s = doc["shots"];
    if (s.is_string() && s.get<std::string>() == "exact") {
      cfg.shots.reset();
    } else if (s.is_number_integer() && s.get<std::int64_t>() > 0) {
      cfg.shots = s.get<std::int64_t>();
    } else {
      throw ParseError("shots", "expected a positive integer or \"exact\"");
    }
  }
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ParseError("mode", "expected a string");
    try {
      cfg.mode = circuit_mode_from_string(doc["mode"].get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError("mode", e.what());
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ParseError("seed", "expected a non-negative integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("error_model")) cfg.error_model = error_model_from(doc["error_model"]);
  return cfg;
}

ProtocolConfig load_protocol_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return protocol_config_from_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.where(), e.message());
  }
}

std::string error_model_to_json(const ErrorModelSpec& spec) {
  json j{{"kind", to_string(spec.kind)}, {spec.parameter_name, spec.value}};
  return j.dump();
}

const char* library_version() { return GSMVE_VERSION; }

std::string provenance_json(const MveCurve& curve) {
  const auto& c = curve.config;
  json doc;
  doc["library_version"] = library_version();
  doc["seed"] = c.seed;
  doc["ms"] = c.ms;
  doc["n_circuits"] = c.n_circuits;
  if (c.shots)
    doc["shots"] = *c.shots;
  else
    doc["shots"] = "exact";
  doc["mode"] = to_string(c.mode);
  doc["error_model"] = json::parse(error_model_to_json(c.error_model));
  doc["config_text"] = c.source_text;
  doc["points"] = json::array();
  for (const auto& p : curve.points)
    doc["points"].push_back({{"m", p.m},
                             {"mean", p.mean},
                             {"std", p.std},
                             {"n_circuits", p.n_circuits},
                             {"exact_probabilities", p.exact_probabilities}});
  return doc.dump(2);
}

}  // namespace gsmve
