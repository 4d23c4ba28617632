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

#include <cmath>
#include <vector>

#include "gsmve/metrics.hpp"
#include "gsmve/rng.hpp"

namespace gsmve {

namespace {

// (A - B) (x) I acting on two-qubit operators, system qubit first.
class LiftedDifference {
 public:
  explicit LiftedDifference(const Eigen::Matrix4d& diff) : basis_(pauli_basis(2)) {
    lift_.setZero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) lift_.block<4, 4>(4 * i, 4 * j) = diff(i, j) * Eigen::Matrix4d::Identity();
  }

  Eigen::Matrix4cd apply(const Eigen::Matrix4cd& x) const { return expand(lift_ * coords(x)); }
  Eigen::Matrix4cd adjoint(const Eigen::Matrix4cd& x) const { return expand(lift_.transpose() * coords(x)); }

 private:
  Eigen::Matrix<double, 16, 1> coords(const Eigen::Matrix4cd& x) const {
    Eigen::Matrix<double, 16, 1> c;
    for (int k = 0; k < 16; ++k) c[k] = x.cwiseProduct(basis_[k].transpose()).sum().real();
    return c;
  }

  Eigen::Matrix4cd expand(const Eigen::Matrix<double, 16, 1>& c) const {
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 16; ++k) out += c[k] * basis_[k];
    return out;
  }

  std::vector<HermMat> basis_;
  Eigen::Matrix<double, 16, 16> lift_;
};

struct Evaluation {
  double value;
  Eigen::Matrix4cd positive_projector;
  bool has_positive_part;
};

Evaluation evaluate(const LiftedDifference& lifted, const Eigen::Vector4cd& psi) {
  const Eigen::Matrix4cd out = lifted.apply(psi * psi.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es((out + out.adjoint()) / 2.0);
  Evaluation ev{0.5 * es.eigenvalues().cwiseAbs().sum(), Eigen::Matrix4cd::Zero(), false};
  for (int k = 0; k < 4; ++k)
    if (es.eigenvalues()[k] > 0.0) {
      ev.positive_projector += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
      ev.has_positive_part = true;
    }
  return ev;
}

Eigen::Vector4cd best_input_for(const LiftedDifference& lifted, const Eigen::Matrix4cd& projector) {
  const Eigen::Matrix4cd w = lifted.adjoint(projector);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es((w + w.adjoint()) / 2.0);
  return es.eigenvectors().col(3);
}

std::vector<Eigen::Vector4cd> starting_inputs(const DiamondOptions& opts) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Eigen::Vector4cd> starts;
  starts.push_back(Eigen::Vector4cd(s, 0, 0, s));    // maximally entangled
  starts.push_back(Eigen::Vector4cd(0, 0, 1, 0));    // |1>|0>
  starts.push_back(Eigen::Vector4cd(s, 0, s, 0));    // |+>|0>
  Stream rng(splitmix64(opts.seed));
  while (static_cast<int>(starts.size()) < std::max(opts.starts, 3)) {
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) {
      // Box-Muller; Gaussian amplitudes give Haar-random pure states.
      const double u1 = 1.0 - rng.uniform01();
      const double u2 = rng.uniform01();
      const double r = std::sqrt(-2.0 * std::log(u1));
      v[k] = Complex(r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2));
    }
    starts.push_back(v.normalized());
  }
  return starts;
}

}  // namespace

DiamondResult diamond_distance(const Ptm& a, const Ptm& b, const DiamondOptions& opts) {
  if (a.n_qubits() != 1 || b.n_qubits() != 1)
    throw UnsupportedDimension("diamond_distance supports single-qubit channels only");
  const LiftedDifference lifted(a.mat() - b.mat());

  DiamondResult best{0.0, Eigen::Vector4cd(1, 0, 0, 0)};
  for (Eigen::Vector4cd psi : starting_inputs(opts)) {
    Evaluation ev = evaluate(lifted, psi);
    for (int it = 0; it < opts.max_iterations && ev.has_positive_part; ++it) {
      const Eigen::Vector4cd next = best_input_for(lifted, ev.positive_projector);
      const Evaluation next_ev = evaluate(lifted, next);
      const bool improved = next_ev.value > ev.value + opts.tolerance;
      if (next_ev.value >= ev.value) {
        psi = next;
        ev = next_ev;
      }
      if (!improved) break;
    }
    if (ev.value > best.value) best = {ev.value, psi};
  }
  return best;
}

}  // namespace gsmve
