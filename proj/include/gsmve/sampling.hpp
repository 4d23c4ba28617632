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

// Experiment sampling over A_m, the set of length-m experiments of a gate-set.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsmve/channels.hpp"
#include "gsmve/gateset.hpp"

namespace gsmve {

enum class CircuitMode { generic, self_inverting };

const char* to_string(CircuitMode mode);
CircuitMode circuit_mode_from_string(const std::string& name);

// A (state, POVM, outcome) triple where the ideal gate-set predicts the outcome
// with certainty on the empty circuit. Defined through a probability, so it
// survives any gauge. Self-inverting experiments start and end on one of these.
struct SurvivalAnchor {
  std::size_t state_index;
  std::size_t povm_index;
  std::size_t outcome;
};

std::vector<SurvivalAnchor> find_survival_anchors(const GateSet& ideal, double tol = 1e-9);

// Draws and enumerates experiments for one ideal gate-set.
//
// Generic experiments pick the state, each of the m gates, and the POVM
// uniformly and independently. Self-inverting experiments pick an anchor
// uniformly, m-1 gates uniformly, and close with the group inverse of their
// product; the closing gate counts toward m.
class CircuitSampler {
 public:
  explicit CircuitSampler(const GateSet& ideal);

  bool supports_self_inverting() const { return table_.has_value() && !anchors_.empty(); }
  const std::optional<GroupTable>& table() const { return table_; }
  const std::vector<SurvivalAnchor>& anchors() const { return anchors_; }

  // Deterministic in (seed, m, mode, index).
  ExperimentSpec sample(std::size_t m, CircuitMode mode, std::uint64_t seed, std::uint64_t index) const;

  // |A_m| for generic mode; anchors * |G|^(m-1) for self-inverting. Empty on
  // overflow.
  std::optional<std::uint64_t> count(std::size_t m, CircuitMode mode) const;

  // Visits every experiment once, in odometer order.
  void enumerate(std::size_t m, CircuitMode mode, const std::function<void(const ExperimentSpec&)>& visit) const;

 private:
  void require_mode(std::size_t m, CircuitMode mode) const;

  std::size_t n_states_;
  std::size_t n_gates_;
  std::size_t n_povms_;
  std::optional<GroupTable> table_;
  std::vector<SurvivalAnchor> anchors_;
};

ExperimentSpec sample_experiment(const GateSet& gs, std::size_t m, CircuitMode mode, std::uint64_t seed,
                                 std::uint64_t index);

}  // namespace gsmve
