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

#include <doctest.h>

#include <cmath>
#include <random>

#include "gsmve/gateset.hpp"
#include "gsmve/pl_core.hpp"
#include "support/oracles.hpp"

using namespace gsmve;
namespace orc = gsmve::oracle;

namespace {

const double kRt2 = std::sqrt(2.0);

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return h / kRt2;
}

Eigen::Matrix2cd x90() {
  Eigen::Matrix2cd u;
  u << 1, Complex(0, -1), Complex(0, -1), 1;
  return u / kRt2;
}

Eigen::VectorXd vec4(double a, double b, double c, double d) {
  Eigen::VectorXd v(4);
  v << a, b, c, d;
  return v;
}

}  // namespace

TEST_CASE("pauli basis is orthonormal") {
  for (int n : {1, 2}) {
    const auto p = pauli_basis(n);
    REQUIRE(p.size() == static_cast<std::size_t>(liouville_dim(n)));
    double worst = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        worst = std::max(worst, std::abs((p[i].adjoint() * p[j]).trace() - Complex(i == j ? 1.0 : 0.0)));
    CHECK(worst < 1e-12);
  }
  CHECK((pauli_basis(1)[1] * pauli_basis(1)[1]).trace().real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(pauli_basis(0), InvalidArgument);
}

TEST_CASE("basis ordering: first qubit most significant") {
  const auto lib = pauli_basis(2);
  const auto ref = orc::basis(2);
  for (std::size_t i = 0; i < lib.size(); ++i) CHECK((lib[i] - ref[i]).norm() < 1e-15);
}

TEST_CASE("state coordinates") {
  Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  zero(0, 0) = 1;
  CHECK((to_pl_state(zero).coords() - vec4(1, 0, 0, 1) / kRt2).norm() < 1e-15);
  CHECK((to_pl_state(Eigen::Matrix2cd::Identity() / 2.0).coords() - vec4(1, 0, 0, 0) / kRt2).norm() < 1e-15);

  const Eigen::Matrix2cd rho = (orc::sigma(0) + 0.3 * orc::sigma(1)) / 2.0;
  CHECK((to_pl_state(rho).coords() - vec4(1, 0.3, 0, 0) / kRt2).norm() < 1e-15);
}

TEST_CASE("dual coordinates and pairing") {
  CHECK((to_pl_dual(orc::sigma(3)).coords() - vec4(0, 0, 0, kRt2)).norm() < 1e-15);
  CHECK((to_pl_dual(orc::sigma(0)).coords() - vec4(kRt2, 0, 0, 0)).norm() < 1e-15);
  Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  zero(0, 0) = 1;
  CHECK(pairing(to_pl_dual(orc::sigma(3)), to_pl_state(zero)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("non-Hermitian input is rejected") {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 1) = 1;
  CHECK_THROWS_AS(to_pl_state(m), InvalidArgument);
  CHECK_THROWS_AS(to_pl_dual(m), InvalidArgument);
  CHECK_THROWS_AS(to_pl_state(Eigen::MatrixXcd::Identity(3, 3)), InvalidArgument);
}

TEST_CASE("coordinate invariants") {
  CHECK_THROWS_AS(PLVector(1, Eigen::VectorXd::Zero(3)), InvalidArgument);
  CHECK_THROWS_AS(PLVector(Eigen::VectorXd::Zero(8)), InvalidArgument);
  CHECK_THROWS_AS(PLVector(1, vec4(1, NAN, 0, 0)), InvalidArgument);
  CHECK_THROWS_AS(PLDual(0, Eigen::VectorXd::Zero(1)), InvalidArgument);
  CHECK(PLVector(Eigen::VectorXd::Zero(16)).n_qubits() == 2);
}

TEST_CASE("from_pl inverts the expansion") {
  Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  zero(0, 0) = 1;
  CHECK((from_pl(PLVector(vec4(1, 0, 0, 1) / kRt2)) - zero).norm() < 1e-15);

  const HermMat mixed = from_pl(polarized_state(0.9));
  CHECK(std::abs(mixed(0, 0) - 0.95) < 1e-15);
  CHECK(std::abs(mixed(1, 1) - 0.05) < 1e-15);
  CHECK(std::abs(mixed(0, 1)) < 1e-15);

  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Index dim = k % 2 ? 4 : 2;
    const Eigen::MatrixXcd h = orc::random_hermitian(rng, dim);
    worst = std::max(worst, (from_pl(to_pl_state(h)) - h).cwiseAbs().maxCoeff());
    worst = std::max(worst, (from_pl(to_pl_dual(h)) - h).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("PTM from Kraus operators") {
  CHECK(ptm_from_kraus(KrausSet({Eigen::MatrixXcd::Identity(2, 2)})).mat().isApprox(Eigen::Matrix4d::Identity(),
                                                                                      1e-15));

  const double g = 0.1;
  Eigen::MatrixXcd k0 = Eigen::MatrixXcd::Zero(2, 2), k1 = Eigen::MatrixXcd::Zero(2, 2);
  k0(0, 0) = 1;
  k0(1, 1) = std::sqrt(1 - g);
  k1(0, 1) = std::sqrt(g);
  Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
  expected.diagonal() << 1, std::sqrt(0.9), std::sqrt(0.9), 0.9;
  expected(3, 0) = 0.1;
  CHECK((ptm_from_kraus(KrausSet({k0, k1})).mat() - expected).cwiseAbs().maxCoeff() < 1e-15);

  // Hadamard: conjugate each Pauli explicitly and read off the coefficients.
  const Eigen::Matrix2cd h = hadamard();
  Eigen::Matrix4d oracle;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      oracle(i, j) = 0.5 * (orc::sigma(i) * h * orc::sigma(j) * h.adjoint()).trace().real();
  const Eigen::MatrixXd lib = ptm_from_unitary(h).mat();
  CHECK((lib - oracle).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(lib(1, 3) == doctest::Approx(1.0));
  CHECK(lib(2, 2) == doctest::Approx(-1.0));
  CHECK(lib(3, 1) == doctest::Approx(1.0));

  CHECK_THROWS_AS(KrausSet({Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(4, 4)}), InvalidArgument);
  CHECK_THROWS_AS(KrausSet({}), InvalidArgument);
}

TEST_CASE("KrausSet trace preservation flag") {
  Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(2, 2) * std::sqrt(0.5);
  CHECK(KrausSet({half, half}).is_trace_preserving());
  CHECK_FALSE(KrausSet({half}).is_trace_preserving());
}

TEST_CASE("apply_ptm examples") {
  const PLVector v(vec4(0.3, -0.1, 0.2, 0.7));
  CHECK(apply_ptm(Ptm::identity(1), v) == v);

  const Ptm a = amplitude_damping_ptm(0.36);
  CHECK((apply_ptm(a, PLVector(vec4(1, 0, 0, 1) / kRt2)).coords() - vec4(1, 0, 0, 1) / kRt2).norm() < 1e-15);
  CHECK((apply_ptm(a, PLVector(vec4(1, 0, 0, 0) / kRt2)).coords() - vec4(1, 0, 0, 0.36) / kRt2).norm() < 1e-15);

  CHECK_THROWS_AS(apply_ptm(Ptm::identity(2), v), InvalidArgument);
  CHECK_THROWS_AS(apply_ptm(PLDual(vec4(1, 0, 0, 0)), Ptm::identity(2)), InvalidArgument);
}

TEST_CASE("dual action pulls effects back through the map") {
  std::mt19937_64 rng(5);
  const auto kr = orc::random_kraus(rng, 2, 3);
  const Ptm a = ptm_from_kraus(KrausSet(kr));
  const PLVector rho = to_pl_state(orc::random_density(rng, 2));
  const PLDual m = to_pl_dual(orc::random_hermitian(rng, 2));
  CHECK(pairing(apply_ptm(m, a), rho) == doctest::Approx(pairing(m, apply_ptm(a, rho))).epsilon(1e-13));
}

TEST_CASE("compose_ptms") {
  CHECK(compose_ptms({}, 1).mat() == Eigen::MatrixXd::Identity(4, 4));
  const Ptm h = ptm_from_unitary(hadamard());
  const std::vector<Ptm> hh{h, h};
  CHECK(compose_ptms(hh, 1).mat().isApprox(Eigen::MatrixXd::Identity(4, 4), 1e-14));
  const Ptm x = ptm_from_unitary(x90());
  const std::vector<Ptm> x4{x, x, x, x};
  CHECK((compose_ptms(x4, 1).mat() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);

  // Chronological: the later gate multiplies from the left.
  const Ptm s = ptm_from_unitary((Eigen::Matrix2cd() << 1, 0, 0, Complex(0, 1)).finished());
  const std::vector<Ptm> hs{h, s};
  CHECK(compose_ptms(hs, 1).mat().isApprox((s * h).mat(), 1e-15));
  CHECK((s * h).mat().isApprox(s.mat() * h.mat(), 1e-15));

  const std::vector<Ptm> mixed{h, Ptm::identity(2)};
  CHECK_THROWS_AS(compose_ptms(mixed, 1), InvalidArgument);
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(3);
  std::vector<Ptm> maps;
  for (int k = 0; k < 3; ++k) maps.push_back(ptm_from_kraus(KrausSet(orc::random_kraus(rng, 2, 2))));
  CHECK((((maps[0] * maps[1]) * maps[2]).mat() - (maps[0] * (maps[1] * maps[2])).mat()).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("unitary PTMs are orthogonal") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const Eigen::MatrixXd a = ptm_from_unitary(orc::random_unitary(rng, k % 2 ? 4 : 2)).mat();
    CHECK((a.transpose() * a - Eigen::MatrixXd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Choi matrix") {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> id(choi_from_ptm(Ptm::identity(1)));
  CHECK(id.eigenvalues()[3] == doctest::Approx(2.0));
  CHECK(std::abs(id.eigenvalues()[0]) < 1e-14);
  CHECK(std::abs(id.eigenvalues()[2]) < 1e-14);

  Eigen::Matrix4d dep = Eigen::Matrix4d::Zero();
  dep(0, 0) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> full(choi_from_ptm(Ptm(Eigen::MatrixXd(dep))));
  for (int i = 0; i < 4; ++i) CHECK(full.eigenvalues()[i] == doctest::Approx(0.5));

  for (int k = 0; k <= 20; ++k) {
    const double g = k / 20.0;
    const Ptm a = amplitude_damping_ptm(g);
    const HermMat j = choi_from_ptm(a);
    CHECK((j - orc::choi_of(a.mat())).cwiseAbs().maxCoeff() < 1e-14);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(j);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
    CHECK(j.trace().real() == doctest::Approx(2.0));
  }
}

TEST_CASE("Hilbert-Schmidt duality") {
  std::mt19937_64 rng(21);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Eigen::Index dim = k % 2 ? 4 : 2;
    const Eigen::MatrixXcd s = orc::random_hermitian(rng, dim), r = orc::random_hermitian(rng, dim);
    worst = std::max(worst, std::abs(pairing(to_pl_dual(s), to_pl_state(r)) - (s.adjoint() * r).trace()));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("PTM action matches Kraus conjugation") {
  std::mt19937_64 rng(34);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Eigen::Index dim = k % 2 ? 4 : 2;
    const auto kr = orc::random_kraus(rng, dim, 1 + k % 3);
    const Eigen::MatrixXcd rho = orc::random_density(rng, dim);
    const HermMat via_ptm = from_pl(apply_ptm(ptm_from_kraus(KrausSet(kr)), to_pl_state(rho)));
    worst = std::max(worst, (via_ptm - orc::kraus_apply(kr, rho)).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("dimension helpers") {
  CHECK(qubits_for_hilbert_dim(8) == 3);
  CHECK(qubits_for_liouville_dim(16) == 2);
  CHECK_THROWS_AS(qubits_for_hilbert_dim(3), InvalidArgument);
  CHECK_THROWS_AS(qubits_for_liouville_dim(8), InvalidArgument);
  CHECK_THROWS_AS(Ptm(Eigen::MatrixXd::Identity(4, 3)), InvalidArgument);
}
