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

// Test-only reference computations. Nothing here calls into the PL machinery
// of the library; values are obtained from explicit 2x2/4x4 matrix algebra so
// that they can check the library independently.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace gsmve::oracle {

using C = std::complex<double>;

inline Eigen::Matrix2cd sigma(int k) {
  Eigen::Matrix2cd m;
  const C i(0, 1);
  if (k == 0) m << 1, 0, 0, 1;
  if (k == 1) m << 0, 1, 1, 0;
  if (k == 2) m << 0, -i, i, 0;
  if (k == 3) m << 1, 0, 0, -1;
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Normalized Pauli basis built by explicit loops.
inline std::vector<Eigen::MatrixXcd> basis(int n) {
  std::vector<Eigen::MatrixXcd> out;
  if (n == 1) {
    for (int a = 0; a < 4; ++a) out.push_back(sigma(a) / std::sqrt(2.0));
  } else {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) out.push_back(kron(sigma(a), sigma(b)) / 2.0);
  }
  return out;
}

inline Eigen::MatrixXcd gaussian_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = C(n(rng), n(rng));
  return m;
}

inline Eigen::MatrixXcd random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
  const Eigen::MatrixXcd g = gaussian_matrix(rng, dim, dim);
  return (g + g.adjoint()) / 2.0;
}

inline Eigen::MatrixXcd random_density(std::mt19937_64& rng, Eigen::Index dim) {
  const Eigen::MatrixXcd g = gaussian_matrix(rng, dim, dim);
  Eigen::MatrixXcd rho = g * g.adjoint();
  return rho / rho.trace();
}

// Haar unitary from the QR decomposition of a Ginibre matrix.
inline Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian_matrix(rng, dim, dim));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

// Random CPTP map as k Kraus operators, cut from a random isometry.
inline std::vector<Eigen::MatrixXcd> random_kraus(std::mt19937_64& rng, Eigen::Index dim, int k) {
  const Eigen::MatrixXcd u = random_unitary(rng, dim * k);
  std::vector<Eigen::MatrixXcd> ops;
  for (int i = 0; i < k; ++i) ops.push_back(u.block(i * dim, 0, dim, dim));
  return ops;
}

inline Eigen::MatrixXcd kraus_apply(const std::vector<Eigen::MatrixXcd>& ops, const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (const auto& k : ops) out += k * rho * k.adjoint();
  return out;
}

// Choi matrix sum_ij |i><j| (x) D(|i><j|) of a single-qubit map given by its
// PTM, expanding each |i><j| in the Pauli basis with complex coefficients.
inline Eigen::Matrix4cd choi_of(const Eigen::Matrix4d& ptm) {
  const auto p = basis(1);
  Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Eigen::Matrix2cd e = Eigen::Matrix2cd::Zero();
      e(r, c) = 1.0;
      Eigen::Vector4cd coef;
      for (int k = 0; k < 4; ++k) coef[k] = (p[k] * e).trace();
      const Eigen::Vector4cd out = ptm.cast<C>() * coef;
      Eigen::Matrix2cd image = Eigen::Matrix2cd::Zero();
      for (int k = 0; k < 4; ++k) image += out[k] * p[k];
      j += kron(e, image);
    }
  return j;
}

inline double half_trace_norm(const Eigen::Matrix4cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline Eigen::Matrix2cd sqrt_density(double r, double polar, double azimuth) {
  const double x = r * std::sin(polar) * std::cos(azimuth);
  const double y = r * std::sin(polar) * std::sin(azimuth);
  const double z = r * std::cos(polar);
  const Eigen::Matrix2cd rho = (sigma(0) + x * sigma(1) + y * sigma(2) + z * sigma(3)) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
  const Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

// (1/2)||A - B||_diamond by brute force: every pure input is a purification of
// some single-qubit density tau, and ||((sqrt tau) (x) I) J ((sqrt tau) (x) I)||_1
// is the output trace norm for that input. Scans the Bloch ball; for maps that
// commute with Z rotations the azimuth can be fixed (azimuth_steps = 1).
inline double diamond_grid(const Eigen::Matrix4d& diff_ptm, int radial = 201, int polar = 201, int azimuth_steps = 1,
                           int refinements = 4) {
  const Eigen::Matrix4cd j = choi_of(diff_ptm);
  auto value = [&](double r, double th, double ph) {
    const Eigen::Matrix4cd s = kron(sqrt_density(r, th, ph), Eigen::Matrix2cd::Identity());
    return half_trace_norm(s * j * s.adjoint());
  };
  double best = -1.0, br = 0.0, bt = 0.0, bp = 0.0;
  for (int a = 0; a < radial; ++a)
    for (int b = 0; b < polar; ++b)
      for (int c = 0; c < azimuth_steps; ++c) {
        const double r = static_cast<double>(a) / (radial - 1);
        const double th = M_PI * b / (polar - 1);
        const double ph = 2 * M_PI * c / azimuth_steps;
        const double v = value(r, th, ph);
        if (v > best) best = v, br = r, bt = th, bp = ph;
      }
  double dr = 1.0 / (radial - 1), dt = M_PI / (polar - 1);
  for (int it = 0; it < refinements; ++it) {
    const double r0 = br, t0 = bt;
    for (int a = -10; a <= 10; ++a)
      for (int b = -10; b <= 10; ++b) {
        const double r = std::clamp(r0 + a * dr / 5, 0.0, 1.0);
        const double th = std::clamp(t0 + b * dt / 5, 0.0, M_PI);
        const double v = value(r, th, bp);
        if (v > best) best = v, br = r, bt = th;
      }
    dr /= 5;
    dt /= 5;
  }
  return best;
}

// 1 - survival after m depolarizing gates that compose to the identity.
inline double depolarizing_self_inverting_mve(double r, int m) { return (1.0 - std::pow(1.0 - 2.0 * r, m)) / 2.0; }

}  // namespace gsmve::oracle
