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

// Protocol configuration documents:
//   {"ms": [100, 200] | "100..1000:100", "n_circuits": 200,
//    "shots": 1000 | "exact", "mode": "generic" | "self_inverting",
//    "seed": 7, "error_model": {"kind": "depolarizing", "r": 1e-4}}
// Every field except "ms" has the default of ProtocolConfig.

#include <filesystem>
#include <string>
#include <vector>

#include "gsmve/protocol.hpp"

namespace gsmve {

// "a..b:step", "a..b" or comma separated mixtures such as "1,2,5..20:5".
std::vector<std::size_t> parse_lengths(const std::string& text);

ProtocolConfig protocol_config_from_json(const std::string& text);
ProtocolConfig load_protocol_config(const std::filesystem::path& path);

std::string error_model_to_json(const ErrorModelSpec& spec);

// Sidecar document: config echo, seed, library version and the curve points.
std::string provenance_json(const MveCurve& curve);

const char* library_version();

}  // namespace gsmve
