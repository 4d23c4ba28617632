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

// Error channels, the single-qubit Clifford group and average gate fidelity.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gsmve/gateset.hpp"

namespace gsmve {

struct ErrorModel {
  enum class Kind { depolarizing, unitary_z, amplitude_damping, custom };

  Kind kind;
  double parameter;  // r, theta or gamma; unused for custom
  Ptm ptm;
};

const char* to_string(ErrorModel::Kind kind);
ErrorModel::Kind error_kind_from_string(const std::string& name);

// rho -> (1 - 2r) rho + r I, for r in [0, 1/2].
ErrorModel depolarizing(double r);

// Rotation angle whose Z-rotation error has average infidelity r:
// theta = arccos(sqrt(1 - 3r/2)), r in [0, 2/3].
double theta_from_infidelity(double r);

// Conjugation rho -> e^{-i theta Z} rho e^{i theta Z}.
ErrorModel unitary_z_error(double theta);

ErrorModel amplitude_damping_error(double gamma);
ErrorModel custom_error(Ptm ptm);

// Every gate G becomes E * G (error after the ideal gate). States and
// measurements are untouched.
GateSet apply_error_model(const GateSet& gs, const ErrorModel& em);

// (Tr[V^T A] + d) / (d^2 + d) for a unitary-channel target V (an orthogonal
// PTM), d = 2^n.
double avg_gate_fidelity(const Ptm& a, const Ptm& target);

// Multiplication and inverse tables of a finite group of gates.
// compose(a, b) is the index of gate_a * gate_b (b applied first).
class GroupTable {
 public:
  GroupTable(std::size_t identity, std::vector<std::size_t> inverse, std::vector<std::size_t> products);

  std::size_t size() const { return inverse_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  std::size_t compose(std::size_t a, std::size_t b) const { return products_.at(a * size() + b); }

  // Index of g_k ... g_1 for the chronological sequence g_1..g_k.
  std::size_t compose_sequence(std::span<const std::size_t> chronological) const;

 private:
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> products_;
};

// Recovers the group structure of a gate list by matching PTM products
// (entrywise within tol). Empty when the list is not closed, lacks the
// identity, or lacks inverses.
std::optional<GroupTable> find_group_table(std::span<const LabeledGate> gates, double tol = 1e-9);

// The 24 single-qubit Cliffords as integer PTMs, generated from {H, S}.
// Order: breadth-first from the identity applying H then S on the left; each
// new layer is sorted lexicographically by its row-major entries.
struct CliffordGroup {
  std::vector<Eigen::Matrix4i> integer_ptms;
  std::vector<Ptm> elements;
  GroupTable table;

  std::size_t size() const { return elements.size(); }
};

CliffordGroup clifford_group_1q();

// {|0><0|, Cl_1, Z-basis projective measurement}: the gate-set used for the
// MVE scaling simulations.
GateSet clifford_gateset(const CliffordGroup& group);

}  // namespace gsmve
