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

#include "gsmve/pl_core.hpp"

#include <cmath>
#include <string>

namespace gsmve {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Tr[a b] without forming the product.
Complex trace_of_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

int log_base(Eigen::Index value, int bits_per_step, const char* what) {
  if (value < 2) throw InvalidArgument(std::string(what) + " must be at least " + std::to_string(1 << bits_per_step));
  int steps = 0;
  Eigen::Index v = value;
  while (v > 1) {
    if (v % (Eigen::Index{1} << bits_per_step) != 0)
      throw InvalidArgument(std::string(what) + " " + std::to_string(value) + " is not a valid power");
    v >>= bits_per_step;
    ++steps;
  }
  return steps;
}

void require_hermitian(const HermMat& m, const char* what) {
  if (m.rows() != m.cols()) throw InvalidArgument(std::string(what) + ": matrix is not square");
  if (!is_hermitian(m, kTolHerm)) throw InvalidArgument(std::string(what) + ": matrix is not Hermitian");
}

template <typename Coords>
Coords pl_coords_of(const HermMat& m, const char* what) {
  require_hermitian(m, what);
  const int n = qubits_for_hilbert_dim(m.rows());
  const auto basis = pauli_basis(n);
  Eigen::VectorXd coords(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Complex t = trace_of_product(m, basis[i]);
    if (std::abs(t.imag()) > kTolImag)
      throw InvalidArgument(std::string(what) + ": imaginary Pauli component " + std::to_string(t.imag()));
    coords[static_cast<Eigen::Index>(i)] = t.real();
  }
  return Coords(n, std::move(coords));
}

HermMat expand(int n_qubits, const Eigen::VectorXd& coords) {
  const auto basis = pauli_basis(n_qubits);
  HermMat out = HermMat::Zero(hilbert_dim(n_qubits), hilbert_dim(n_qubits));
  for (std::size_t i = 0; i < basis.size(); ++i) out += coords[static_cast<Eigen::Index>(i)] * basis[i];
  return out;
}

}  // namespace

int qubits_for_hilbert_dim(Eigen::Index dim) { return log_base(dim, 1, "Hilbert-space dimension"); }
int qubits_for_liouville_dim(Eigen::Index dim) { return log_base(dim, 2, "Liouville-space dimension"); }

double pairing(const PLDual& dual, const PLVector& vec) {
  if (dual.n_qubits() != vec.n_qubits()) throw InvalidArgument("pairing: qubit-count mismatch");
  return dual.coords().dot(vec.coords());
}

Ptm::Ptm(int n_qubits, Eigen::MatrixXd mat) : n_qubits_(n_qubits), mat_(std::move(mat)) {
  if (n_qubits_ < 1) throw InvalidArgument("PTM needs n_qubits >= 1");
  const Eigen::Index d = liouville_dim(n_qubits_);
  if (mat_.rows() != d || mat_.cols() != d)
    throw InvalidArgument("PTM must be " + std::to_string(d) + "x" + std::to_string(d));
  if (!mat_.allFinite()) throw InvalidArgument("PTM entries must be finite");
}

Ptm::Ptm(const Eigen::MatrixXd& mat) : Ptm(qubits_for_liouville_dim(mat.rows()), mat) {}

Ptm Ptm::identity(int n_qubits) {
  if (n_qubits < 1) throw InvalidArgument("PTM needs n_qubits >= 1");
  const Eigen::Index d = liouville_dim(n_qubits);
  return Ptm(n_qubits, Eigen::MatrixXd::Identity(d, d));
}

Ptm operator*(const Ptm& a, const Ptm& b) {
  if (a.n_qubits_ != b.n_qubits_) throw InvalidArgument("PTM composition: qubit-count mismatch");
  return Ptm(a.n_qubits_, a.mat_ * b.mat_);
}

KrausSet::KrausSet(std::vector<Eigen::MatrixXcd> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw InvalidArgument("Kraus set is empty");
  dim_ = ops_.front().rows();
  for (const auto& k : ops_) {
    if (k.rows() != k.cols()) throw InvalidArgument("Kraus operator is not square");
    if (k.rows() != dim_) throw InvalidArgument("Kraus operators have mismatched dimensions");
  }
  qubits_for_hilbert_dim(dim_);
}

bool KrausSet::is_trace_preserving(double tol) const {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return (sum - Eigen::MatrixXcd::Identity(dim_, dim_)).cwiseAbs().maxCoeff() <= tol;
}

Eigen::Matrix2cd pauli_matrix(int index) {
  const Complex i1{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (index) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i1, i1, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw InvalidArgument("Pauli index must be in 0..3");
  }
  return m;
}

std::vector<HermMat> pauli_basis(int n_qubits) {
  if (n_qubits < 1) throw InvalidArgument("pauli_basis needs n >= 1");
  std::vector<HermMat> single;
  for (int k = 0; k < 4; ++k) single.emplace_back(pauli_matrix(k) / std::sqrt(2.0));

  std::vector<HermMat> basis = single;
  for (int q = 1; q < n_qubits; ++q) {
    std::vector<HermMat> next;
    next.reserve(basis.size() * 4);
    for (const auto& b : basis)
      for (const auto& s : single) next.push_back(kron(b, s));
    basis = std::move(next);
  }
  return basis;
}

PLVector to_pl_state(const HermMat& rho) { return pl_coords_of<PLVector>(rho, "to_pl_state"); }
PLDual to_pl_dual(const HermMat& m) { return pl_coords_of<PLDual>(m, "to_pl_dual"); }

HermMat from_pl(const PLVector& v) { return expand(v.n_qubits(), v.coords()); }
HermMat from_pl(const PLDual& d) { return expand(d.n_qubits(), d.coords()); }

Ptm ptm_from_kraus(const KrausSet& kraus) {
  const int n = kraus.n_qubits();
  const auto basis = pauli_basis(n);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(kraus.dim(), kraus.dim());
    for (const auto& k : kraus.ops()) image += k * basis[j] * k.adjoint();
    for (Eigen::Index i = 0; i < d; ++i) {
      const Complex t = trace_of_product(basis[i], image);
      if (std::abs(t.imag()) > kTolImag * std::max(1.0, std::abs(t.real())))
        throw InvalidArgument("ptm_from_kraus: map is not Hermiticity preserving");
      out(i, j) = t.real();
    }
  }
  return Ptm(n, std::move(out));
}

Ptm ptm_from_unitary(const Eigen::MatrixXcd& u) { return ptm_from_kraus(KrausSet({u})); }

PLVector apply_ptm(const Ptm& a, const PLVector& v) {
  if (a.n_qubits() != v.n_qubits()) throw InvalidArgument("apply_ptm: qubit-count mismatch");
  return PLVector(v.n_qubits(), a.mat() * v.coords());
}

PLDual apply_ptm(const PLDual& d, const Ptm& a) {
  if (a.n_qubits() != d.n_qubits()) throw InvalidArgument("apply_ptm: qubit-count mismatch");
  return PLDual(d.n_qubits(), a.mat().transpose() * d.coords());
}

Ptm compose_ptms(std::span<const Ptm> list, int n_qubits) {
  Eigen::MatrixXd acc = Ptm::identity(n_qubits).mat();
  for (const auto& g : list) {
    if (g.n_qubits() != n_qubits) throw InvalidArgument("compose_ptms: qubit-count mismatch");
    acc = g.mat() * acc;
  }
  return Ptm(n_qubits, std::move(acc));
}

HermMat choi_from_ptm(const Ptm& a) {
  const auto basis = pauli_basis(a.n_qubits());
  const auto d = static_cast<Eigen::Index>(basis.size());
  HermMat j = HermMat::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    // conj(P_b) == P_b^T for Hermitian P_b
    const Eigen::MatrixXcd input = basis[col].transpose();
    for (Eigen::Index row = 0; row < d; ++row) {
      const double w = a.mat()(row, col);
      if (w != 0.0) j += w * kron(input, basis[row]);
    }
  }
  return j;
}

}  // namespace gsmve
