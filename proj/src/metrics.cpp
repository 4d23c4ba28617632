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

#include "gsmve/metrics.hpp"

#include <cmath>
#include <vector>

#include "gsmve/parallel.hpp"

namespace gsmve {

namespace {

void require_same_structure(const GateSet& a, const GateSet& b) {
  if (a.n_qubits() != b.n_qubits() || a.states().size() != b.states().size() ||
      a.gates().size() != b.gates().size() || a.povms().size() != b.povms().size())
    throw InvalidArgument("ideal and noisy gate-sets differ in structure");
  for (std::size_t p = 0; p < a.povms().size(); ++p)
    if (a.povms()[p].outcomes() != b.povms()[p].outcomes())
      throw InvalidArgument("POVM '" + a.povms()[p].label + "' has different outcome counts");
}

double delta_d_unchecked(const GateSet& ideal, const GateSet& noisy, const ExperimentSpec& spec) {
  const auto p = circuit_probabilities(noisy, spec);
  const auto q = circuit_probabilities(ideal, spec);
  return tv_distance(p.probs, q.probs);
}

}  // namespace

OutcomeDist::OutcomeDist(Eigen::VectorXd probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0) throw InvalidArgument("empty outcome distribution");
  if (!probs_.allFinite() || probs_.minCoeff() < -kTolProb || std::abs(probs_.sum() - 1.0) > kTolProb)
    throw InvalidArgument("not a probability distribution");
  probs_ = probs_.cwiseMax(0.0);
}

double delta_d(const GateSet& ideal, const GateSet& noisy, const ExperimentSpec& spec) {
  require_same_structure(ideal, noisy);
  return delta_d_unchecked(ideal, noisy, spec);
}

MvePoint mve(const GateSet& ideal, const GateSet& noisy, std::size_t m, const MveSampler& sampler, CircuitMode mode) {
  return mve(CircuitSampler(ideal), ideal, noisy, m, sampler, mode);
}

MvePoint mve(const CircuitSampler& circuits, const GateSet& ideal, const GateSet& noisy, std::size_t m,
             const MveSampler& sampler, CircuitMode mode) {
  require_same_structure(ideal, noisy);
  MvePoint point;
  point.m = m;
  point.mode = mode;
  point.exact_probabilities = true;

  std::vector<double> errors;
  if (const auto* mc = std::get_if<MonteCarlo>(&sampler)) {
    if (mc->n_circuits == 0) throw InvalidArgument("Monte-Carlo MVE needs at least one circuit");
    errors.resize(mc->n_circuits);
    parallel_for(mc->n_circuits, [&](std::size_t i) {
      errors[i] = delta_d_unchecked(ideal, noisy, circuits.sample(m, mode, mc->seed, i));
    });
  } else {
    const auto& en = std::get<Enumeration>(sampler);
    const auto total = circuits.count(m, mode);
    if (!total || *total > en.budget)
      throw ResourceLimit("enumerating length-" + std::to_string(m) + " experiments exceeds the budget of " +
                          std::to_string(en.budget));
    std::vector<ExperimentSpec> specs;
    specs.reserve(*total);
    circuits.enumerate(m, mode, [&](const ExperimentSpec& s) { specs.push_back(s); });
    errors.resize(specs.size());
    parallel_for(specs.size(), [&](std::size_t i) { errors[i] = delta_d_unchecked(ideal, noisy, specs[i]); });
    point.enumerated = true;
  }

  const auto stats = mean_and_error(errors, point.enumerated);
  point.mean = stats.mean;
  point.std = stats.std_error;
  point.n_circuits = errors.size();
  return point;
}

double survival_probability(const GateSet& ideal, const GateSet& noisy, const ExperimentSpec& spec) {
  require_same_structure(ideal, noisy);
  if (spec.state_index >= ideal.states().size() || spec.povm_index >= ideal.povms().size())
    throw InvalidArgument("experiment index out of range");
  std::vector<Ptm> sequence;
  for (std::size_t g : spec.gate_indices) {
    if (g >= ideal.gates().size()) throw InvalidArgument("gate index out of range");
    sequence.push_back(ideal.gates()[g].ptm);
  }
  const Ptm net = compose_ptms(sequence, ideal.n_qubits());
  if ((net.mat() - Ptm::identity(ideal.n_qubits()).mat()).cwiseAbs().maxCoeff() > 1e-9)
    throw InvalidArgument("experiment is not self-inverting in the ideal gate-set");

  const auto& state = ideal.states()[spec.state_index].vec;
  const auto& effects = ideal.povms()[spec.povm_index].effects;
  for (std::size_t i = 0; i < effects.size(); ++i)
    if (pairing(effects[i], state) >= 1.0 - 1e-9)
      return circuit_probabilities(noisy, spec).probs[static_cast<Eigen::Index>(i)];
  throw InvalidArgument("no outcome is certain for the prepared state");
}

}  // namespace gsmve
