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

#include "gsmve/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "gsmve/parallel.hpp"
#include "gsmve/rng.hpp"

namespace gsmve {

ShotResult simulate_counts(const GateSet& noisy, const ExperimentSpec& spec, std::int64_t shots,
                           std::uint64_t stream) {
  if (shots < 1) throw InvalidArgument("simulate_counts needs at least one shot");
  const auto probs = circuit_probabilities(noisy, spec);
  if (probs.out_of_range) throw StateError("noisy probabilities are not a distribution");

  Stream rng(stream);
  ShotResult out;
  out.shots = shots;
  out.counts.assign(static_cast<std::size_t>(probs.probs.size()), 0);
  std::int64_t remaining = shots;
  double mass = 1.0;
  for (Eigen::Index i = 0; i + 1 < probs.probs.size() && remaining > 0; ++i) {
    const double p = mass > 0.0 ? std::clamp(probs.probs[i] / mass, 0.0, 1.0) : 0.0;
    std::binomial_distribution<std::int64_t> draw(remaining, p);
    const std::int64_t k = draw(rng);
    out.counts[static_cast<std::size_t>(i)] = k;
    remaining -= k;
    mass -= probs.probs[i];
  }
  out.counts.back() += remaining;
  return out;
}

double empirical_delta_d(const GateSet& ideal, const ExperimentSpec& spec, const ShotResult& result) {
  const auto ideal_probs = circuit_probabilities(ideal, spec).probs;
  if (static_cast<Eigen::Index>(result.counts.size()) != ideal_probs.size())
    throw InvalidArgument("outcome counts do not match the POVM arity");
  if (result.shots < 1) throw InvalidArgument("shot result is empty");
  Eigen::VectorXd freq(ideal_probs.size());
  for (Eigen::Index i = 0; i < freq.size(); ++i)
    freq[i] = static_cast<double>(result.counts[static_cast<std::size_t>(i)]) / static_cast<double>(result.shots);
  return tv_distance(freq, ideal_probs);
}

ShotResult coarse_grain(const ShotResult& result, const std::vector<std::vector<std::size_t>>& partition) {
  std::set<std::size_t> seen;
  ShotResult out;
  out.shots = result.shots;
  for (const auto& block : partition) {
    if (block.empty()) throw InvalidArgument("coarse_grain: empty block");
    std::int64_t sum = 0;
    for (std::size_t k : block) {
      if (k >= result.counts.size()) throw InvalidArgument("coarse_grain: outcome index out of range");
      if (!seen.insert(k).second) throw InvalidArgument("coarse_grain: outcome in more than one block");
      sum += result.counts[k];
    }
    out.counts.push_back(sum);
  }
  if (seen.size() != result.counts.size()) throw InvalidArgument("coarse_grain: partition does not cover all outcomes");
  return out;
}

std::int64_t hoeffding_sample_size(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  return static_cast<std::int64_t>(std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon)));
}

ErrorModel ErrorModelSpec::build() const {
  switch (kind) {
    case ErrorModel::Kind::depolarizing:
      if (parameter_name != "r") throw InvalidArgument("depolarizing error takes parameter 'r'");
      return depolarizing(value);
    case ErrorModel::Kind::unitary_z:
      if (parameter_name == "r") return unitary_z_error(theta_from_infidelity(value));
      if (parameter_name == "theta") return unitary_z_error(value);
      throw InvalidArgument("unitary error takes parameter 'r' or 'theta'");
    case ErrorModel::Kind::amplitude_damping:
      if (parameter_name != "gamma") throw InvalidArgument("amplitude damping takes parameter 'gamma'");
      return amplitude_damping_error(value);
    case ErrorModel::Kind::custom: break;
  }
  throw InvalidArgument("custom error models cannot be built from a parameter");
}

MveCurve estimate_mve_curve(const GateSet& ideal, const GateSet& noisy, const ProtocolConfig& config) {
  if (config.ms.empty()) throw InvalidArgument("no sequence lengths given");
  if (config.n_circuits == 0) throw InvalidArgument("n_circuits must be positive");
  if (config.shots && *config.shots < 1) throw InvalidArgument("shots must be positive");
  std::vector<std::size_t> ms = config.ms;
  std::sort(ms.begin(), ms.end());
  if (std::adjacent_find(ms.begin(), ms.end()) != ms.end()) throw InvalidArgument("sequence lengths must be unique");

  const CircuitSampler circuits(ideal);
  MveCurve curve{{}, config};
  curve.config.ms = ms;
  for (std::size_t m : ms) {
    if (!config.shots) {
      curve.points.push_back(mve(circuits, ideal, noisy, m, MonteCarlo{config.n_circuits, config.seed}, config.mode));
      continue;
    }
    std::vector<double> errors(config.n_circuits);
    parallel_for(config.n_circuits, [&](std::size_t i) {
      const ExperimentSpec spec = circuits.sample(m, config.mode, config.seed, i);
      const auto stream = stream_seed(config.seed, m, static_cast<std::uint64_t>(config.mode), i, kShotBlock);
      errors[i] = empirical_delta_d(ideal, spec, simulate_counts(noisy, spec, *config.shots, stream));
    });
    const auto stats = mean_and_error(errors, false);
    curve.points.push_back(MvePoint{m, stats.mean, stats.std_error, config.n_circuits, config.mode, false, false});
  }
  return curve;
}

ScalingFit fit_scaling(std::span<const double> m, std::span<const double> y, FitModel model) {
  if (m.size() != y.size()) throw InvalidArgument("fit_scaling: length mismatch");
  if (m.size() < 3) throw FitError("fit_scaling needs at least three points");
  if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; })) throw FitError("all values are zero");

  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd target(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = m[static_cast<std::size_t>(i)];
    const double v = y[static_cast<std::size_t>(i)];
    if (model == FitModel::power_law) {
      if (!(x > 0.0) || !(v > 0.0)) throw FitError("power-law fit needs positive lengths and values");
      design(i, 0) = std::log(x);
      target[i] = std::log(v);
    } else {
      design(i, 0) = x;
      target[i] = v;
    }
    design(i, 1) = 1.0;
  }
  const double spread = design.col(0).maxCoeff() - design.col(0).minCoeff();
  if (!(spread > 0.0)) throw FitError("all lengths are equal");

  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(target);
  ScalingFit fit;
  fit.residual = std::sqrt((design * coef - target).squaredNorm() / static_cast<double>(n));
  if (model == FitModel::linear) {
    fit.slope = coef[0];
    fit.intercept = coef[1];
  } else {
    fit.exponent = coef[0];
    fit.prefactor = std::exp(coef[1]);
  }
  return fit;
}

ScalingFit fit_scaling(std::span<const MvePoint> points, FitModel model) {
  std::vector<double> m, y;
  for (const auto& p : points) {
    m.push_back(static_cast<double>(p.m));
    y.push_back(p.mean);
  }
  return fit_scaling(m, y, model);
}

}  // namespace gsmve
