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

// Gate-set documents:
//   {"n_qubits": 1,
//    "states": [{"label": "rho", "coords": [...]}],
//    "gates":  [{"label": "G0", "matrix": [[...], ...]}],
//    "povms":  [{"label": "Z", "effects": [[...], [...]]}]}
// Numbers are written in shortest round-trip form.

#include <filesystem>
#include <string>

#include "gsmve/gateset.hpp"

namespace gsmve {

std::string gateset_to_json(const GateSet& gs, int indent = 2);

// Throws ParseError naming the offending element.
GateSet gateset_from_json(const std::string& text);

GateSet load_gateset(const std::filesystem::path& path);
void save_gateset(const GateSet& gs, const std::filesystem::path& path);

}  // namespace gsmve
