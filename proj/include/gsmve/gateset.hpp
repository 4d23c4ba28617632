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

#pragma once

// Gate-sets {states, gates, measurements} in the Pauli-Liouville picture,
// gauge transformations acting on them, and the canonical-constraint checks
// (density matrices, CPTP maps, POVMs).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gsmve/pl_core.hpp"

namespace gsmve {

inline constexpr double kTolProb = 1e-9;
inline constexpr double kTolEig = 1e-10;

struct LabeledState {
  std::string label;
  PLVector vec;
};

struct LabeledGate {
  std::string label;
  Ptm ptm;
};

// A measurement with one effect per outcome.
struct Povm {
  Povm(std::string label, std::vector<PLDual> effects);

  std::string label;
  std::vector<PLDual> effects;

  std::size_t outcomes() const { return effects.size(); }
};

// Two-outcome POVM of a bounded observable O: E_+- = (I +- O)/2.
Povm povm_from_observable(std::string label, const HermMat& observable);

class GateSet {
 public:
  GateSet(int n_qubits, std::vector<LabeledState> states, std::vector<LabeledGate> gates,
          std::vector<Povm> povms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<LabeledState>& states() const { return states_; }
  const std::vector<LabeledGate>& gates() const { return gates_; }
  const std::vector<Povm>& povms() const { return povms_; }

 private:
  int n_qubits_;
  std::vector<LabeledState> states_;
  std::vector<LabeledGate> gates_;
  std::vector<Povm> povms_;
};

// One experiment: prepare states[state_index], apply gate_indices in
// chronological order, measure povms[povm_index].
struct ExperimentSpec {
  std::size_t state_index = 0;
  std::vector<std::size_t> gate_indices;
  std::size_t povm_index = 0;

  std::size_t length() const { return gate_indices.size(); }
  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

// Invertible real Liouville-space matrix with its cached inverse.
class GaugeTransform {
 public:
  explicit GaugeTransform(Eigen::MatrixXd b);

  // Trace-preserving affine form [[1, 0], [x, y]].
  static GaugeTransform affine(const Eigen::VectorXd& x, const Eigen::MatrixXd& y);
  static GaugeTransform identity(int n_qubits);

  const Eigen::MatrixXd& b() const { return b_; }
  const Eigen::MatrixXd& b_inv() const { return b_inv_; }
  double condition_number() const { return condition_; }
  int n_qubits() const { return qubits_for_liouville_dim(b_.rows()); }

  // outer.after(inner) acts as inner first, then outer: B_outer * B_inner.
  GaugeTransform after(const GaugeTransform& inner) const;

 private:
  Eigen::MatrixXd b_;
  Eigen::MatrixXd b_inv_;
  double condition_;
};

// |rho>> -> B|rho>>, <<M| -> <<M|B^-1, G -> B G B^-1. Labels are kept.
GateSet apply_gauge(const GateSet& gs, const GaugeTransform& t);

struct OutcomeProbabilities {
  Eigen::VectorXd probs;
  // Entries within kTolProb of [0, 1] were clamped and the vector renormalized.
  bool clamped = false;
  // Not a distribution beyond kTolProb; probs are left untouched.
  bool out_of_range = false;
};

OutcomeProbabilities circuit_probabilities(const GateSet& gs, const ExperimentSpec& spec);

// Canonical-constraint predicates.
struct ElementCheck {
  enum class Kind { state, gate, povm };

  std::string label;
  Kind kind;
  bool passed = false;
  // Smallest eigenvalue of rho (state), of the Choi matrix (gate), or of
  // E and I - E over all effects (povm).
  double worst_eigenvalue = 0.0;
  // |Tr rho - 1| (state), max deviation of the first PTM row from (1,0,...,0)
  // (gate), max deviation of sum E from I in PL coordinates (povm).
  double trace_deviation = 0.0;
};

const char* to_string(ElementCheck::Kind kind);

ElementCheck check_density(const std::string& label, const PLVector& state);
ElementCheck check_cptp(const std::string& label, const Ptm& gate);
ElementCheck check_povm(const Povm& povm);

struct ValidationReport {
  std::vector<ElementCheck> elements;

  bool all_passed() const;
  std::vector<const ElementCheck*> failures() const;
};

ValidationReport validate_gateset(const GateSet& gs);

// Amplitude-damping worked example.

// (1, 0, 0, eps1)/sqrt2: Z-polarized state.
PLVector polarized_state(double eps1);

// The measurement row (0, 0, 0, eps2/sqrt2). It is the traceless part of the
// effect E_+ = (I + eps2 Z)/2, which is how build_theta interprets it.
PLDual noisy_measurement_row(double eps2);

// diag(1, sqrt(1-g), sqrt(1-g), 1-g) with q*g in the (Z, I) slot; q = 1 is
// plain amplitude damping towards |0>.
Ptm amplitude_damping_ptm(double gamma, double q = 1.0);

// Noisy gate-set: polarized state, gates U * A_gamma, two-outcome Z-readout
// with effects (I +- eps2 Z)/2. Gates are labelled G0, G1, ...
GateSet build_theta(double eps1, double eps2, double gamma, std::span<const Eigen::Matrix2cd> unitaries);

// diag(1, q, q, q)
GaugeTransform gauge_matrix_q(double q);

struct QInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct CanonicalQRange {
  QInterval claimed;                   // [|eps2|, 1]
  std::optional<QInterval> empirical;  // |q| values passing validation on the scan grid
  bool degenerate = false;             // eps2 == 0: the readout carries no signal
  double step = 0.0;
};

struct QScanOptions {
  double eps1 = 1.0;
  double gamma = 0.1;
  double step = 0.01;
  double q_max = 1.5;
};

CanonicalQRange canonical_q_range(double eps2, const QScanOptions& opts = {});

}  // namespace gsmve
