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

#include "gsmve/gateset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gsmve {

namespace {

using nlohmann::json;

json vector_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

Eigen::VectorXd vector_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError(where + "[" + std::to_string(i) + "]", "expected a number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string label_of(const json& obj, const std::string& where) {
  const json& l = field(obj, "label", where);
  if (!l.is_string()) throw ParseError(where + ".label", "expected a string");
  return l.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& a = field(obj, key, where);
  if (!a.is_array()) throw ParseError(where + "." + key, "expected an array");
  return a;
}

// Rewraps construction-time InvalidArgument with the element location.
template <typename F>
auto located(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw ParseError(where, e.what());
  }
}

}  // namespace

std::string gateset_to_json(const GateSet& gs, int indent) {
  json doc;
  doc["n_qubits"] = gs.n_qubits();
  doc["states"] = json::array();
  for (const auto& s : gs.states()) doc["states"].push_back({{"label", s.label}, {"coords", vector_json(s.vec.coords())}});
  doc["gates"] = json::array();
  for (const auto& g : gs.gates()) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < g.ptm.dim(); ++i) rows.push_back(vector_json(g.ptm.mat().row(i).transpose()));
    doc["gates"].push_back({{"label", g.label}, {"matrix", rows}});
  }
  doc["povms"] = json::array();
  for (const auto& p : gs.povms()) {
    json effects = json::array();
    for (const auto& e : p.effects) effects.push_back(vector_json(e.coords()));
    doc["povms"].push_back({{"label", p.label}, {"effects", effects}});
  }
  return doc.dump(indent);
}

GateSet gateset_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  const json& nq = field(doc, "n_qubits", "document");
  if (!nq.is_number_integer() || nq.get<int>() < 1) throw ParseError("n_qubits", "expected a positive integer");
  const int n = nq.get<int>();
  if (n > 6) throw ParseError("n_qubits", "at most 6 qubits are supported");

  std::vector<LabeledState> states;
  const json& js = array_field(doc, "states", "document");
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string where = "states[" + std::to_string(i) + "]";
    std::string label = label_of(js[i], where);
    Eigen::VectorXd c = vector_from(field(js[i], "coords", where), where + ".coords");
    states.push_back(located(where + " '" + label + "'", [&] { return LabeledState{label, PLVector(n, c)}; }));
  }

  std::vector<LabeledGate> gates;
  const json& jg = array_field(doc, "gates", "document");
  for (std::size_t i = 0; i < jg.size(); ++i) {
    const std::string where = "gates[" + std::to_string(i) + "]";
    std::string label = label_of(jg[i], where);
    const json& rows = array_field(jg[i], "matrix", where);
    const Eigen::Index d = liouville_dim(n);
    if (static_cast<Eigen::Index>(rows.size()) != d)
      throw ParseError(where + " '" + label + "'", "matrix must have " + std::to_string(d) + " rows");
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      Eigen::VectorXd row = vector_from(rows[static_cast<std::size_t>(r)], where + ".matrix[" + std::to_string(r) + "]");
      if (row.size() != d)
        throw ParseError(where + " '" + label + "'", "row " + std::to_string(r) + " has wrong length");
      m.row(r) = row.transpose();
    }
    gates.push_back(located(where + " '" + label + "'", [&] { return LabeledGate{label, Ptm(n, m)}; }));
  }

  std::vector<Povm> povms;
  const json& jp = array_field(doc, "povms", "document");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string where = "povms[" + std::to_string(i) + "]";
    std::string label = label_of(jp[i], where);
    const json& je = array_field(jp[i], "effects", where);
    std::vector<PLDual> effects;
    for (std::size_t k = 0; k < je.size(); ++k) {
      const std::string ew = where + ".effects[" + std::to_string(k) + "]";
      Eigen::VectorXd c = vector_from(je[k], ew);
      effects.push_back(located(ew, [&] { return PLDual(n, c); }));
    }
    povms.push_back(located(where + " '" + label + "'", [&] { return Povm(label, effects); }));
  }

  return located("document", [&] { return GateSet(n, std::move(states), std::move(gates), std::move(povms)); });
}

GateSet load_gateset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return gateset_from_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.where(), e.message());
  }
}

void save_gateset(const GateSet& gs, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << gateset_to_json(gs) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace gsmve
