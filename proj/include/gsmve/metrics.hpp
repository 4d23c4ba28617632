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

// Distances between outcome distributions and channels, and the mean
// variation error (MVE): the average total-variation error over length-m
// experiments of a gate-set.

#include <cstdint>
#include <variant>

#include <Eigen/Dense>

#include "gsmve/gateset.hpp"
#include "gsmve/sampling.hpp"

namespace gsmve {

// Probability vector; entries within kTolProb below zero are clamped and the
// sum must be 1 within kTolProb.
class OutcomeDist {
 public:
  explicit OutcomeDist(Eigen::VectorXd probs);

  const Eigen::VectorXd& probs() const { return probs_; }
  Eigen::Index size() const { return probs_.size(); }

 private:
  Eigen::VectorXd probs_;
};

template <typename A, typename B>
double tv_distance(const Eigen::MatrixBase<A>& p, const Eigen::MatrixBase<B>& q) {
  if (p.size() != q.size()) throw InvalidArgument("tv_distance: length mismatch");
  return 0.5 * (p - q).cwiseAbs().sum();
}

inline double tv_distance(const OutcomeDist& p, const OutcomeDist& q) { return tv_distance(p.probs(), q.probs()); }

// Total-variation distance between the noisy and ideal outcome distributions
// of one experiment.
double delta_d(const GateSet& ideal, const GateSet& noisy, const ExperimentSpec& spec);

struct Enumeration {
  std::uint64_t budget = 1'000'000;
};

struct MonteCarlo {
  std::size_t n_circuits = 200;
  std::uint64_t seed = 0;
};

using MveSampler = std::variant<Enumeration, MonteCarlo>;

struct MvePoint {
  std::size_t m = 0;
  double mean = 0.0;
  // Standard error of the mean: sample std / sqrt(n) for Monte-Carlo,
  // population std / sqrt(n) for exact enumeration.
  double std = 0.0;
  std::size_t n_circuits = 0;
  CircuitMode mode = CircuitMode::generic;
  bool exact_probabilities = true;
  bool enumerated = false;
};

// Throws ResourceLimit when enumeration would exceed the budget.
MvePoint mve(const GateSet& ideal, const GateSet& noisy, std::size_t m, const MveSampler& sampler, CircuitMode mode);

// Same, reusing a sampler built for `ideal`.
MvePoint mve(const CircuitSampler& circuits, const GateSet& ideal, const GateSet& noisy, std::size_t m,
             const MveSampler& sampler, CircuitMode mode);

// Probability of the anchor outcome after a self-inverting experiment. The
// experiment must compose to the identity in `ideal` and start in a state
// equal to one of the measured effects.
double survival_probability(const GateSet& ideal, const GateSet& noisy, const ExperimentSpec& spec);

struct DiamondOptions {
  int starts = 32;
  int max_iterations = 2000;
  double tolerance = 1e-14;
  std::uint64_t seed = 0x5eed;
};

struct DiamondResult {
  double value = 0.0;          // (1/2) ||A - B||_diamond
  Eigen::Vector4cd input;      // achieving system (x) ancilla pure state
};

// Single-qubit only: maximizes the trace distance of the outputs of A (x) I
// and B (x) I over pure two-qubit inputs, by alternating between the Helstrom
// measurement and the best input for that measurement, from several starts.
DiamondResult diamond_distance(const Ptm& a, const Ptm& b, const DiamondOptions& opts = {});

}  // namespace gsmve
