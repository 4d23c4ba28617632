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

#include "gsmve/gateset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace gsmve {

namespace {

template <typename Items>
void require_unique_labels(const Items& items, const char* what) {
  std::set<std::string> seen;
  for (const auto& item : items)
    if (!seen.insert(item.label).second)
      throw InvalidArgument(std::string("duplicate ") + what + " label '" + item.label + "'");
}

Eigen::VectorXd hermitian_eigenvalues(const HermMat& m) {
  const HermMat sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<HermMat> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double eig_slack(const Eigen::VectorXd& eigs) {
  return kTolEig * std::max(1.0, eigs.cwiseAbs().maxCoeff());
}

PLDual identity_dual(int n_qubits) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(liouville_dim(n_qubits));
  c[0] = std::sqrt(static_cast<double>(hilbert_dim(n_qubits)));
  return PLDual(n_qubits, std::move(c));
}

void require_range(double value, double lo, double hi, const char* name) {
  if (!(value >= lo && value <= hi))
    throw InvalidArgument(std::string(name) + " = " + std::to_string(value) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
}

}  // namespace

Povm::Povm(std::string label_, std::vector<PLDual> effects_) : label(std::move(label_)), effects(std::move(effects_)) {
  if (effects.size() < 2) throw InvalidArgument("POVM '" + label + "' needs at least two outcomes");
  for (const auto& e : effects)
    if (e.n_qubits() != effects.front().n_qubits())
      throw InvalidArgument("POVM '" + label + "' mixes qubit counts");
}

Povm povm_from_observable(std::string label, const HermMat& observable) {
  const Eigen::Index d = observable.rows();
  const HermMat id = HermMat::Identity(d, d);
  return Povm(std::move(label), {to_pl_dual((id + observable) / 2.0), to_pl_dual((id - observable) / 2.0)});
}

GateSet::GateSet(int n_qubits, std::vector<LabeledState> states, std::vector<LabeledGate> gates,
                 std::vector<Povm> povms)
    : n_qubits_(n_qubits), states_(std::move(states)), gates_(std::move(gates)), povms_(std::move(povms)) {
  if (n_qubits_ < 1) throw InvalidArgument("gate-set needs n_qubits >= 1");
  for (const auto& s : states_)
    if (s.vec.n_qubits() != n_qubits_) throw InvalidArgument("state '" + s.label + "' has wrong qubit count");
  for (const auto& g : gates_)
    if (g.ptm.n_qubits() != n_qubits_) throw InvalidArgument("gate '" + g.label + "' has wrong qubit count");
  for (const auto& p : povms_)
    if (p.effects.front().n_qubits() != n_qubits_)
      throw InvalidArgument("POVM '" + p.label + "' has wrong qubit count");
  require_unique_labels(states_, "state");
  require_unique_labels(gates_, "gate");
  require_unique_labels(povms_, "POVM");
}

GaugeTransform::GaugeTransform(Eigen::MatrixXd b) : b_(std::move(b)) {
  if (b_.rows() != b_.cols()) throw InvalidArgument("gauge matrix must be square");
  qubits_for_liouville_dim(b_.rows());
  if (!b_.allFinite()) throw InvalidArgument("gauge matrix must be finite");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(b_);
  if (!lu.isInvertible()) throw SingularGauge("gauge matrix is singular");
  b_inv_ = lu.inverse();
  const Eigen::Index d = b_.rows();
  if ((b_ * b_inv_ - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
    throw SingularGauge("gauge matrix is numerically singular");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b_);
  const auto& sv = svd.singularValues();
  condition_ = sv[0] / sv[sv.size() - 1];
}

GaugeTransform GaugeTransform::affine(const Eigen::VectorXd& x, const Eigen::MatrixXd& y) {
  const Eigen::Index k = y.rows();
  if (y.cols() != k || x.size() != k) throw InvalidArgument("affine gauge: x must be k-vector and y k x k");
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(k + 1, k + 1);
  b(0, 0) = 1.0;
  b.block(1, 0, k, 1) = x;
  b.block(1, 1, k, k) = y;
  return GaugeTransform(std::move(b));
}

GaugeTransform GaugeTransform::identity(int n_qubits) {
  const Eigen::Index d = liouville_dim(n_qubits);
  return GaugeTransform(Eigen::MatrixXd::Identity(d, d));
}

GaugeTransform GaugeTransform::after(const GaugeTransform& inner) const {
  if (b_.rows() != inner.b_.rows()) throw InvalidArgument("gauge composition: dimension mismatch");
  return GaugeTransform(b_ * inner.b_);
}

GateSet apply_gauge(const GateSet& gs, const GaugeTransform& t) {
  if (t.b().rows() != liouville_dim(gs.n_qubits())) throw InvalidArgument("apply_gauge: dimension mismatch");
  const int n = gs.n_qubits();
  std::vector<LabeledState> states;
  for (const auto& s : gs.states()) states.push_back({s.label, PLVector(n, t.b() * s.vec.coords())});
  std::vector<LabeledGate> gates;
  for (const auto& g : gs.gates()) gates.push_back({g.label, Ptm(n, t.b() * g.ptm.mat() * t.b_inv())});
  std::vector<Povm> povms;
  for (const auto& p : gs.povms()) {
    std::vector<PLDual> effects;
    for (const auto& e : p.effects) effects.emplace_back(n, t.b_inv().transpose() * e.coords());
    povms.emplace_back(p.label, std::move(effects));
  }
  return GateSet(n, std::move(states), std::move(gates), std::move(povms));
}

OutcomeProbabilities circuit_probabilities(const GateSet& gs, const ExperimentSpec& spec) {
  if (spec.state_index >= gs.states().size()) throw InvalidArgument("state index out of range");
  if (spec.povm_index >= gs.povms().size()) throw InvalidArgument("POVM index out of range");
  Eigen::VectorXd v = gs.states()[spec.state_index].vec.coords();
  for (std::size_t g : spec.gate_indices) {
    if (g >= gs.gates().size()) throw InvalidArgument("gate index " + std::to_string(g) + " out of range");
    v = gs.gates()[g].ptm.mat() * v;
  }
  const auto& effects = gs.povms()[spec.povm_index].effects;
  OutcomeProbabilities out;
  out.probs.resize(static_cast<Eigen::Index>(effects.size()));
  for (std::size_t i = 0; i < effects.size(); ++i) out.probs[static_cast<Eigen::Index>(i)] = effects[i].coords().dot(v);

  const auto& p = out.probs;
  if (p.minCoeff() < -kTolProb || p.maxCoeff() > 1.0 + kTolProb || std::abs(p.sum() - 1.0) > kTolProb) {
    out.out_of_range = true;
  } else if (p.minCoeff() < 0.0 || p.maxCoeff() > 1.0) {
    out.probs = out.probs.cwiseMax(0.0).cwiseMin(1.0);
    out.probs /= out.probs.sum();
    out.clamped = true;
  }
  return out;
}

const char* to_string(ElementCheck::Kind kind) {
  switch (kind) {
    case ElementCheck::Kind::state: return "state";
    case ElementCheck::Kind::gate: return "gate";
    case ElementCheck::Kind::povm: return "povm";
  }
  return "?";
}

ElementCheck check_density(const std::string& label, const PLVector& state) {
  ElementCheck c{label, ElementCheck::Kind::state};
  const HermMat rho = from_pl(state);
  const Eigen::VectorXd eigs = hermitian_eigenvalues(rho);
  c.worst_eigenvalue = eigs.minCoeff();
  c.trace_deviation = std::abs(rho.trace().real() - 1.0);
  c.passed = c.worst_eigenvalue >= -eig_slack(eigs) && c.trace_deviation <= kTolEig;
  return c;
}

ElementCheck check_cptp(const std::string& label, const Ptm& gate) {
  ElementCheck c{label, ElementCheck::Kind::gate};
  const Eigen::VectorXd eigs = hermitian_eigenvalues(choi_from_ptm(gate));
  c.worst_eigenvalue = eigs.minCoeff();
  Eigen::VectorXd tp_row = Eigen::VectorXd::Zero(gate.dim());
  tp_row[0] = 1.0;
  c.trace_deviation = (gate.mat().row(0).transpose() - tp_row).cwiseAbs().maxCoeff();
  c.passed = c.worst_eigenvalue >= -eig_slack(eigs) && c.trace_deviation <= kTolEig;
  return c;
}

ElementCheck check_povm(const Povm& povm) {
  ElementCheck c{povm.label, ElementCheck::Kind::povm};
  const int n = povm.effects.front().n_qubits();
  const Eigen::Index d = hilbert_dim(n);
  bool bounded = true;
  double worst = std::numeric_limits<double>::infinity();
  Eigen::VectorXd total = Eigen::VectorXd::Zero(liouville_dim(n));
  for (const auto& e : povm.effects) {
    total += e.coords();
    const HermMat m = from_pl(e);
    const Eigen::VectorXd lower = hermitian_eigenvalues(m);
    const Eigen::VectorXd upper = hermitian_eigenvalues(HermMat::Identity(d, d) - m);
    worst = std::min({worst, lower.minCoeff(), upper.minCoeff()});
    bounded = bounded && lower.minCoeff() >= -eig_slack(lower) && upper.minCoeff() >= -eig_slack(upper);
  }
  c.worst_eigenvalue = worst;
  c.trace_deviation = (total - identity_dual(n).coords()).cwiseAbs().maxCoeff();
  c.passed = bounded && c.trace_deviation <= kTolEig;
  return c;
}

bool ValidationReport::all_passed() const {
  return std::all_of(elements.begin(), elements.end(), [](const ElementCheck& c) { return c.passed; });
}

std::vector<const ElementCheck*> ValidationReport::failures() const {
  std::vector<const ElementCheck*> out;
  for (const auto& c : elements)
    if (!c.passed) out.push_back(&c);
  return out;
}

ValidationReport validate_gateset(const GateSet& gs) {
  ValidationReport report;
  for (const auto& s : gs.states()) report.elements.push_back(check_density(s.label, s.vec));
  for (const auto& g : gs.gates()) report.elements.push_back(check_cptp(g.label, g.ptm));
  for (const auto& p : gs.povms()) report.elements.push_back(check_povm(p));
  return report;
}

PLVector polarized_state(double eps1) {
  require_range(eps1, -1.0, 1.0, "eps1");
  return PLVector(1, Eigen::Vector4d(1.0, 0.0, 0.0, eps1) / std::sqrt(2.0));
}

PLDual noisy_measurement_row(double eps2) {
  require_range(eps2, -1.0, 1.0, "eps2");
  return PLDual(1, Eigen::Vector4d(0.0, 0.0, 0.0, eps2 / std::sqrt(2.0)));
}

Ptm amplitude_damping_ptm(double gamma, double q) {
  require_range(gamma, 0.0, 1.0, "gamma");
  require_range(q, -1.0, 1.0, "q");
  const double s = std::sqrt(1.0 - gamma);
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  a.diagonal() << 1.0, s, s, 1.0 - gamma;
  a(3, 0) = q * gamma;
  return Ptm(1, a);
}

GateSet build_theta(double eps1, double eps2, double gamma, std::span<const Eigen::Matrix2cd> unitaries) {
  const PLVector state = polarized_state(eps1);
  const PLDual row = noisy_measurement_row(eps2);
  const Ptm damping = amplitude_damping_ptm(gamma);

  std::vector<LabeledGate> gates;
  for (std::size_t k = 0; k < unitaries.size(); ++k) {
    const Eigen::Matrix2cd& u = unitaries[k];
    if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10)
      throw InvalidArgument("gate " + std::to_string(k) + " is not unitary");
    gates.push_back({"G" + std::to_string(k), ptm_from_unitary(u) * damping});
  }

  const PLDual id_half(1, identity_dual(1).coords() / 2.0);
  std::vector<PLDual> effects{PLDual(1, id_half.coords() + row.coords()), PLDual(1, id_half.coords() - row.coords())};
  return GateSet(1, {{"rho", state}}, std::move(gates), {Povm("Z", std::move(effects))});
}

GaugeTransform gauge_matrix_q(double q) {
  if (q == 0.0) throw SingularGauge("gauge parameter q = 0 gives a singular gauge");
  if (!std::isfinite(q)) throw InvalidArgument("gauge parameter q must be finite");
  Eigen::Matrix4d b = Eigen::Matrix4d::Identity();
  b.diagonal().tail<3>().setConstant(q);
  return GaugeTransform(b);
}

CanonicalQRange canonical_q_range(double eps2, const QScanOptions& opts) {
  require_range(eps2, -1.0, 1.0, "eps2");
  if (!(opts.step > 0.0) || !(opts.q_max > 0.0)) throw InvalidArgument("q scan needs positive step and q_max");
  CanonicalQRange out;
  out.claimed = {std::abs(eps2), 1.0};
  out.degenerate = eps2 == 0.0;
  out.step = opts.step;

  const std::vector<Eigen::Matrix2cd> gates{Eigen::Matrix2cd::Identity()};
  const GateSet theta = build_theta(opts.eps1, eps2, opts.gamma, gates);
  const auto steps = static_cast<long>(std::floor(opts.q_max / opts.step + 1e-9));
  for (long k = 1; k <= steps; ++k) {
    const double q = static_cast<double>(k) * opts.step;
    const bool ok = validate_gateset(apply_gauge(theta, gauge_matrix_q(q))).all_passed();
    if (!ok) continue;
    if (!out.empirical) out.empirical = QInterval{q, q};
    out.empirical->hi = q;
  }
  return out;
}

}  // namespace gsmve
