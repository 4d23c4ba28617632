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

// Pauli-Liouville representation of n-qubit operators and maps.
//
// Conventions used throughout the library:
//  * Basis: normalized Paulis P = (s_1/sqrt2) (x) ... (x) (s_n/sqrt2), with the
//    single-qubit order (I, X, Y, Z) and multi-qubit index
//    i = i_1*4^{n-1} + ... + i_n (first qubit most significant).
//  * State vectors hold Tr[rho P_i]; dual vectors hold Tr[P_i M]. The pairing
//    dual . vector equals Tr[M^dagger rho].
//  * A PTM has entries (A)_{ij} = Tr[P_i G(P_j)] so that states transform as
//    |G(rho)>> = A |rho>> and a circuit G_1 ... G_m is the product A_m ... A_1.
//  * Choi matrix: J = sum_{ij} |i><j| (x) G(|i><j|), input factor first. For
//    trace-preserving G this gives Tr J = 2^n, and the identity channel maps to
//    the unnormalized maximally entangled projector.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gsmve/errors.hpp"

namespace gsmve {

using Complex = std::complex<double>;

// Hermitian operators are stored as plain dense complex matrices; the
// conversion routines check hermiticity on entry.
using HermMat = Eigen::MatrixXcd;

inline constexpr double kTolHerm = 1e-12;
inline constexpr double kTolImag = 1e-12;
inline constexpr double kTolTp = 1e-10;

// 2^n
inline Eigen::Index hilbert_dim(int n_qubits) { return Eigen::Index{1} << n_qubits; }
// 4^n
inline Eigen::Index liouville_dim(int n_qubits) { return Eigen::Index{1} << (2 * n_qubits); }

// Inverse of hilbert_dim; throws if `dim` is not a positive power of two.
int qubits_for_hilbert_dim(Eigen::Index dim);
// Inverse of liouville_dim; throws if `dim` is not a positive power of four.
int qubits_for_liouville_dim(Eigen::Index dim);

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kTolHerm) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

namespace detail {
struct StateTag {};
struct DualTag {};
}  // namespace detail

// Real coordinate vector of length 4^n in the normalized Pauli basis. The tag
// keeps states (kets) and effects (bras) from being mixed up.
template <typename Tag>
class PLCoords {
 public:
  PLCoords(int n_qubits, Eigen::VectorXd coords) : n_qubits_(n_qubits), coords_(std::move(coords)) {
    if (n_qubits_ < 1) throw InvalidArgument("PL coordinates need n_qubits >= 1");
    if (coords_.size() != liouville_dim(n_qubits_))
      throw InvalidArgument("PL coordinate length " + std::to_string(coords_.size()) +
                            " does not match 4^" + std::to_string(n_qubits_));
    if (!coords_.allFinite()) throw InvalidArgument("PL coordinates must be finite");
  }

  // Infers n from the vector length.
  explicit PLCoords(const Eigen::VectorXd& coords) : PLCoords(qubits_for_liouville_dim(coords.size()), coords) {}

  int n_qubits() const { return n_qubits_; }
  const Eigen::VectorXd& coords() const { return coords_; }
  Eigen::Index size() const { return coords_.size(); }
  double operator[](Eigen::Index i) const { return coords_[i]; }

  friend bool operator==(const PLCoords& a, const PLCoords& b) {
    return a.n_qubits_ == b.n_qubits_ && a.coords_ == b.coords_;
  }

 private:
  int n_qubits_;
  Eigen::VectorXd coords_;
};

using PLVector = PLCoords<detail::StateTag>;
using PLDual = PLCoords<detail::DualTag>;

// Euclidean pairing <<M|rho>> = Tr[M^dagger rho].
double pairing(const PLDual& dual, const PLVector& vec);

// Pauli transfer matrix of a linear map on 2^n x 2^n operators.
class Ptm {
 public:
  Ptm(int n_qubits, Eigen::MatrixXd mat);
  explicit Ptm(const Eigen::MatrixXd& mat);

  static Ptm identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const Eigen::MatrixXd& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

  // Composition: (a * b) applies b first, then a.
  friend Ptm operator*(const Ptm& a, const Ptm& b);
  friend bool operator==(const Ptm& a, const Ptm& b) {
    return a.n_qubits_ == b.n_qubits_ && a.mat_ == b.mat_;
  }

 private:
  int n_qubits_;
  Eigen::MatrixXd mat_;
};

// Kraus decomposition of a channel. Operators are square with a common 2^n
// dimension.
class KrausSet {
 public:
  explicit KrausSet(std::vector<Eigen::MatrixXcd> ops);

  const std::vector<Eigen::MatrixXcd>& ops() const { return ops_; }
  Eigen::Index dim() const { return dim_; }
  int n_qubits() const { return qubits_for_hilbert_dim(dim_); }

  // sum_k K_k^dagger K_k == I within tol
  bool is_trace_preserving(double tol = kTolTp) const;

 private:
  std::vector<Eigen::MatrixXcd> ops_;
  Eigen::Index dim_;
};

// Single-qubit Pauli matrices, unnormalized, index 0..3 = I, X, Y, Z.
Eigen::Matrix2cd pauli_matrix(int index);

// The 4^n normalized Pauli basis in lexicographic order.
std::vector<HermMat> pauli_basis(int n_qubits);

PLVector to_pl_state(const HermMat& rho);
PLDual to_pl_dual(const HermMat& m);

HermMat from_pl(const PLVector& v);
HermMat from_pl(const PLDual& d);

Ptm ptm_from_kraus(const KrausSet& kraus);
Ptm ptm_from_unitary(const Eigen::MatrixXcd& u);

PLVector apply_ptm(const Ptm& a, const PLVector& v);
// <<M| A, i.e. the effect pulled back through the map.
PLDual apply_ptm(const PLDual& d, const Ptm& a);

// Chronological composition: returns list[m-1] * ... * list[0]; identity when
// the list is empty.
Ptm compose_ptms(std::span<const Ptm> list, int n_qubits);

HermMat choi_from_ptm(const Ptm& a);

}  // namespace gsmve
