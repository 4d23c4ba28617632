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

// Subcommands of the gsmve tool. Each returns the process exit code:
// 0 success, 1 validation failure, 2 usage or parse error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gsmve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct FigureOptions {
  std::filesystem::path outdir = ".";
  std::uint64_t seed = 0;
  double r = 1e-4;
  std::size_t n_circuits = 200;
  std::string ms = "100..1000:100";
  std::string small_ms = "1..20";
};

int cmd_figure(const FigureOptions& opts, std::ostream& out, std::ostream& err);

struct GaugeDemoOptions {
  double eps1 = 0.98;
  double eps2 = 0.9;
  double gamma = 0.36;
  std::vector<double> q_list{1.0, 0.95, 0.9, 0.0};
  std::uint64_t seed = 0;
  std::size_t n_circuits = 100;
  std::optional<std::filesystem::path> json_out;
};

int cmd_gauge_demo(const GaugeDemoOptions& opts, std::ostream& out, std::ostream& err);

struct EstimateOptions {
  std::filesystem::path config;
  std::filesystem::path ideal;
  std::optional<std::filesystem::path> noisy;  // default: ideal with the config's error model
  std::filesystem::path out;
  std::optional<std::string> ms;
  std::optional<std::size_t> n_circuits;
  std::optional<std::int64_t> shots;
  bool exact = false;
  std::optional<std::uint64_t> seed;
  bool skip_validation = false;
};

int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err);

int cmd_validate(const std::filesystem::path& gateset, std::ostream& out, std::ostream& err);

// Fig.-2 style output file names, in the order cmd_figure writes them.
std::vector<std::string> figure_file_names();

}  // namespace gsmve::cli
