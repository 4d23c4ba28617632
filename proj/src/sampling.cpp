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

#include "gsmve/sampling.hpp"

#include <limits>

#include "gsmve/rng.hpp"

namespace gsmve {

const char* to_string(CircuitMode mode) {
  return mode == CircuitMode::generic ? "generic" : "self_inverting";
}

CircuitMode circuit_mode_from_string(const std::string& name) {
  if (name == "generic" || name == "general" || name == "random") return CircuitMode::generic;
  if (name == "self_inverting" || name == "identity") return CircuitMode::self_inverting;
  throw InvalidArgument("unknown circuit mode '" + name + "'");
}

std::vector<SurvivalAnchor> find_survival_anchors(const GateSet& ideal, double tol) {
  std::vector<SurvivalAnchor> anchors;
  for (std::size_t s = 0; s < ideal.states().size(); ++s)
    for (std::size_t p = 0; p < ideal.povms().size(); ++p) {
      const auto& effects = ideal.povms()[p].effects;
      for (std::size_t i = 0; i < effects.size(); ++i)
        if (pairing(effects[i], ideal.states()[s].vec) >= 1.0 - tol) anchors.push_back({s, p, i});
    }
  return anchors;
}

CircuitSampler::CircuitSampler(const GateSet& ideal)
    : n_states_(ideal.states().size()),
      n_gates_(ideal.gates().size()),
      n_povms_(ideal.povms().size()),
      table_(find_group_table(ideal.gates())),
      anchors_(find_survival_anchors(ideal)) {}

void CircuitSampler::require_mode(std::size_t m, CircuitMode mode) const {
  if (n_states_ == 0 || n_povms_ == 0) throw InvalidArgument("gate-set has no states or no measurements");
  if (m > 0 && n_gates_ == 0) throw InvalidArgument("gate-set has no gates");
  if (mode == CircuitMode::self_inverting) {
    if (m < 1) throw InvalidArgument("self-inverting experiments need m >= 1");
    if (!table_) throw InvalidArgument("self-inverting mode needs a gate-set that forms a group");
    if (anchors_.empty()) throw InvalidArgument("self-inverting mode needs a state equal to some measurement effect");
  }
}

ExperimentSpec CircuitSampler::sample(std::size_t m, CircuitMode mode, std::uint64_t seed, std::uint64_t index) const {
  require_mode(m, mode);
  Stream rng(stream_seed(seed, m, static_cast<std::uint64_t>(mode), index, kCircuitBlock));
  ExperimentSpec spec;
  spec.gate_indices.reserve(m);
  if (mode == CircuitMode::generic) {
    spec.state_index = rng.uniform_index(n_states_);
    for (std::size_t k = 0; k < m; ++k) spec.gate_indices.push_back(rng.uniform_index(n_gates_));
    spec.povm_index = rng.uniform_index(n_povms_);
    return spec;
  }
  const SurvivalAnchor& a = anchors_[rng.uniform_index(anchors_.size())];
  spec.state_index = a.state_index;
  spec.povm_index = a.povm_index;
  for (std::size_t k = 0; k + 1 < m; ++k) spec.gate_indices.push_back(rng.uniform_index(n_gates_));
  spec.gate_indices.push_back(table_->inverse(table_->compose_sequence(spec.gate_indices)));
  return spec;
}

std::optional<std::uint64_t> CircuitSampler::count(std::size_t m, CircuitMode mode) const {
  require_mode(m, mode);
  const std::size_t free_gates = mode == CircuitMode::generic ? m : m - 1;
  unsigned __int128 total = mode == CircuitMode::generic ? static_cast<unsigned __int128>(n_states_) * n_povms_
                                                         : static_cast<unsigned __int128>(anchors_.size());
  for (std::size_t k = 0; k < free_gates; ++k) {
    total *= n_gates_;
    if (total > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

void CircuitSampler::enumerate(std::size_t m, CircuitMode mode,
                               const std::function<void(const ExperimentSpec&)>& visit) const {
  require_mode(m, mode);
  const std::size_t free_gates = mode == CircuitMode::generic ? m : m - 1;
  std::vector<std::size_t> digits(free_gates, 0);
  auto emit_all_prefixes = [&](auto&& emit) {
    while (true) {
      emit(digits);
      std::size_t k = free_gates;
      while (k > 0) {
        --k;
        if (++digits[k] < n_gates_) break;
        digits[k] = 0;
        if (k == 0) return;
      }
      if (free_gates == 0) return;
    }
  };

  if (mode == CircuitMode::generic) {
    for (std::size_t s = 0; s < n_states_; ++s)
      for (std::size_t p = 0; p < n_povms_; ++p)
        emit_all_prefixes([&](const std::vector<std::size_t>& gates) { visit(ExperimentSpec{s, gates, p}); });
    return;
  }
  for (const auto& a : anchors_)
    emit_all_prefixes([&](const std::vector<std::size_t>& gates) {
      ExperimentSpec spec{a.state_index, gates, a.povm_index};
      spec.gate_indices.push_back(table_->inverse(table_->compose_sequence(gates)));
      visit(spec);
    });
}

ExperimentSpec sample_experiment(const GateSet& gs, std::size_t m, CircuitMode mode, std::uint64_t seed,
                                 std::uint64_t index) {
  return CircuitSampler(gs).sample(m, mode, seed, index);
}

}  // namespace gsmve
