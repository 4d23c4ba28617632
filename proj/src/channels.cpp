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

#include "gsmve/channels.hpp"

#include <algorithm>
#include <cmath>

namespace gsmve {

namespace {

void require_range(double value, double lo, double hi, const char* name) {
  if (!(value >= lo && value <= hi))
    throw InvalidArgument(std::string(name) + " = " + std::to_string(value) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
}

bool lex_less(const Eigen::Matrix4i& a, const Eigen::Matrix4i& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

Eigen::Matrix4i rounded(const Ptm& p) {
  Eigen::Matrix4i out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = static_cast<int>(std::lround(p.mat()(i, j)));
  return out;
}

}  // namespace

const char* to_string(ErrorModel::Kind kind) {
  switch (kind) {
    case ErrorModel::Kind::depolarizing: return "depolarizing";
    case ErrorModel::Kind::unitary_z: return "unitary_z";
    case ErrorModel::Kind::amplitude_damping: return "amplitude_damping";
    case ErrorModel::Kind::custom: return "custom";
  }
  return "?";
}

ErrorModel::Kind error_kind_from_string(const std::string& name) {
  if (name == "depolarizing") return ErrorModel::Kind::depolarizing;
  if (name == "unitary_z" || name == "unitary") return ErrorModel::Kind::unitary_z;
  if (name == "amplitude_damping") return ErrorModel::Kind::amplitude_damping;
  if (name == "custom") return ErrorModel::Kind::custom;
  throw InvalidArgument("unknown error model '" + name + "'");
}

ErrorModel depolarizing(double r) {
  require_range(r, 0.0, 0.5, "r");
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.diagonal().tail<3>().setConstant(1.0 - 2.0 * r);
  return {ErrorModel::Kind::depolarizing, r, Ptm(1, m)};
}

double theta_from_infidelity(double r) {
  require_range(r, 0.0, 2.0 / 3.0, "r");
  return std::acos(std::sqrt(1.0 - 1.5 * r));
}

ErrorModel unitary_z_error(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("theta must be finite");
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
  u(0, 0) = std::polar(1.0, -theta);
  u(1, 1) = std::polar(1.0, theta);
  return {ErrorModel::Kind::unitary_z, theta, ptm_from_unitary(u)};
}

ErrorModel amplitude_damping_error(double gamma) {
  return {ErrorModel::Kind::amplitude_damping, gamma, amplitude_damping_ptm(gamma, 1.0)};
}

ErrorModel custom_error(Ptm ptm) { return {ErrorModel::Kind::custom, 0.0, std::move(ptm)}; }

GateSet apply_error_model(const GateSet& gs, const ErrorModel& em) {
  if (em.ptm.n_qubits() != gs.n_qubits()) throw InvalidArgument("apply_error_model: qubit-count mismatch");
  std::vector<LabeledGate> gates;
  gates.reserve(gs.gates().size());
  for (const auto& g : gs.gates()) gates.push_back({g.label, em.ptm * g.ptm});
  return GateSet(gs.n_qubits(), gs.states(), std::move(gates), gs.povms());
}

double avg_gate_fidelity(const Ptm& a, const Ptm& target) {
  if (a.n_qubits() != target.n_qubits()) throw InvalidArgument("avg_gate_fidelity: qubit-count mismatch");
  const Eigen::MatrixXd& v = target.mat();
  if ((v * v.transpose() - Eigen::MatrixXd::Identity(v.rows(), v.cols())).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("avg_gate_fidelity: target is not a unitary channel");
  const auto d = static_cast<double>(hilbert_dim(a.n_qubits()));
  return ((v.transpose() * a.mat()).trace() + d) / (d * d + d);
}

GroupTable::GroupTable(std::size_t identity, std::vector<std::size_t> inverse, std::vector<std::size_t> products)
    : identity_(identity), inverse_(std::move(inverse)), products_(std::move(products)) {
  if (products_.size() != inverse_.size() * inverse_.size()) throw InvalidArgument("group table has wrong size");
  if (identity_ >= inverse_.size()) throw InvalidArgument("group identity out of range");
}

std::size_t GroupTable::compose_sequence(std::span<const std::size_t> chronological) const {
  std::size_t acc = identity_;
  for (std::size_t g : chronological) acc = compose(g, acc);
  return acc;
}

std::optional<GroupTable> find_group_table(std::span<const LabeledGate> gates, double tol) {
  const std::size_t n = gates.size();
  if (n == 0) return std::nullopt;
  const int nq = gates.front().ptm.n_qubits();
  auto lookup = [&](const Eigen::MatrixXd& m) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < n; ++k)
      if ((gates[k].ptm.mat() - m).cwiseAbs().maxCoeff() <= tol) return k;
    return std::nullopt;
  };
  const auto identity = lookup(Ptm::identity(nq).mat());
  if (!identity) return std::nullopt;

  std::vector<std::size_t> products(n * n);
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto idx = lookup(gates[a].ptm.mat() * gates[b].ptm.mat());
      if (!idx) return std::nullopt;
      products[a * n + b] = *idx;
      if (*idx == *identity) inverse[a] = b;
    }
    if (inverse[a] == n) return std::nullopt;
  }
  return GroupTable(*identity, std::move(inverse), std::move(products));
}

CliffordGroup clifford_group_1q() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  Eigen::Matrix2cd phase = Eigen::Matrix2cd::Identity();
  phase(1, 1) = Complex(0.0, 1.0);
  const std::vector<Eigen::Matrix4i> generators{rounded(ptm_from_unitary(h)), rounded(ptm_from_unitary(phase))};

  std::vector<Eigen::Matrix4i> elements{Eigen::Matrix4i::Identity()};
  std::vector<Eigen::Matrix4i> layer = elements;
  auto known = [&](const Eigen::Matrix4i& m) {
    return std::any_of(elements.begin(), elements.end(), [&](const Eigen::Matrix4i& e) { return e == m; });
  };
  while (!layer.empty()) {
    std::vector<Eigen::Matrix4i> next;
    for (const auto& e : layer)
      for (const auto& g : generators) {
        Eigen::Matrix4i p = g * e;
        if (!known(p) && std::none_of(next.begin(), next.end(), [&](const Eigen::Matrix4i& x) { return x == p; }))
          next.push_back(p);
      }
    std::sort(next.begin(), next.end(), lex_less);
    elements.insert(elements.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  const std::size_t n = elements.size();
  auto index_of = [&](const Eigen::Matrix4i& m) {
    for (std::size_t k = 0; k < n; ++k)
      if (elements[k] == m) return k;
    throw std::logic_error("Clifford closure violated");
  };
  std::vector<std::size_t> products(n * n);
  std::vector<std::size_t> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) products[a * n + b] = index_of(elements[a] * elements[b]);
    inverse[a] = index_of(elements[a].transpose());
  }

  CliffordGroup group{elements, {}, GroupTable(0, std::move(inverse), std::move(products))};
  for (const auto& e : elements) group.elements.emplace_back(1, e.cast<double>());
  return group;
}

GateSet clifford_gateset(const CliffordGroup& group) {
  const double s = 1.0 / std::sqrt(2.0);
  const PLVector zero(1, Eigen::Vector4d(s, 0.0, 0.0, s));
  std::vector<LabeledGate> gates;
  for (std::size_t k = 0; k < group.size(); ++k) gates.push_back({"C" + std::to_string(k), group.elements[k]});
  Povm z("Z", {PLDual(1, Eigen::Vector4d(s, 0.0, 0.0, s)), PLDual(1, Eigen::Vector4d(s, 0.0, 0.0, -s))});
  return GateSet(1, {{"zero", zero}}, std::move(gates), {std::move(z)});
}

}  // namespace gsmve
