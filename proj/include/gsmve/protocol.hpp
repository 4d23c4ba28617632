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

// Finite-sampling MVE estimation: sample N_m experiments per length, run each
// K_m times, compare empirical frequencies to ideal probabilities, and fit the
// scaling of the resulting curve.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsmve/channels.hpp"
#include "gsmve/metrics.hpp"
#include "gsmve/sampling.hpp"

namespace gsmve {

struct ShotResult {
  std::vector<std::int64_t> counts;
  std::int64_t shots = 0;
};

// Multinomial draw of `shots` outcomes. Deterministic in `stream`, which is
// normally stream_seed(seed, m, mode, index, kShotBlock). Throws StateError
// when the noisy probabilities are not a distribution.
ShotResult simulate_counts(const GateSet& noisy, const ExperimentSpec& spec, std::int64_t shots,
                           std::uint64_t stream);

// Plug-in TV distance between observed frequencies and the ideal
// distribution. Biased upwards by O(sqrt(outcomes / shots)).
double empirical_delta_d(const GateSet& ideal, const ExperimentSpec& spec, const ShotResult& result);

// Merges outcomes per block; the partition must cover every outcome once.
ShotResult coarse_grain(const ShotResult& result, const std::vector<std::vector<std::size_t>>& partition);

// ceil(ln(2/delta) / (2 eps^2)) experiments bound |estimate - MVE| <= eps with
// probability 1 - delta, since every delta_d lies in [0, 1].
std::int64_t hoeffding_sample_size(double epsilon, double delta);

struct ErrorModelSpec {
  ErrorModel::Kind kind = ErrorModel::Kind::depolarizing;
  std::string parameter_name = "r";  // r, theta or gamma
  double value = 1e-4;

  ErrorModel build() const;
};

struct ProtocolConfig {
  std::vector<std::size_t> ms;
  std::size_t n_circuits = 200;
  std::optional<std::int64_t> shots;  // empty: exact probabilities
  CircuitMode mode = CircuitMode::generic;
  std::uint64_t seed = 0;
  ErrorModelSpec error_model;
  // The configuration document as read, echoed into curve provenance.
  std::string source_text;
};

struct MveCurve {
  std::vector<MvePoint> points;
  ProtocolConfig config;
};

MveCurve estimate_mve_curve(const GateSet& ideal, const GateSet& noisy, const ProtocolConfig& config);

enum class FitModel { linear, power_law };

struct ScalingFit {
  // linear: y = slope * m + intercept; power_law: y = prefactor * m^exponent
  double slope = 0.0;
  double intercept = 0.0;
  double prefactor = 0.0;
  double exponent = 0.0;
  // Root-mean-square residual (in log space for power_law).
  double residual = 0.0;
};

ScalingFit fit_scaling(std::span<const double> m, std::span<const double> y, FitModel model);
ScalingFit fit_scaling(std::span<const MvePoint> points, FitModel model);

}  // namespace gsmve
