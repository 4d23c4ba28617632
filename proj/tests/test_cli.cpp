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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "gsmve/channels.hpp"
#include "gsmve/csv.hpp"
#include "gsmve/gateset_io.hpp"

using namespace gsmve;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gsmve_test_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

// Small figure run shared by several cases.
cli::FigureOptions quick_figure(const fs::path& dir) {
  cli::FigureOptions o;
  o.outdir = dir;
  o.n_circuits = 40;
  o.ms = "100..400:100";
  o.small_ms = "1..20";
  return o;
}

int run_cli(const std::string& args) {
  const char* exe = std::getenv("GSMVE_CLI");
  REQUIRE(exe != nullptr);
  const int status = std::system((std::string(exe) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("figure writes six series") {
  const fs::path dir = fresh_dir("figure");
  std::ostringstream out, err;
  REQUIRE(cli::cmd_figure(quick_figure(dir), out, err) == cli::kExitOk);
  REQUIRE(cli::figure_file_names().size() == 6);
  for (const auto& name : cli::figure_file_names()) {
    const std::string text = slurp(dir / name);
    CHECK(text.rfind("m,mean,std\n", 0) == 0);
    const CsvSeries s = parse_csv(text);
    CHECK(csv_text(s) == text);
    CHECK(!s.rows.empty());
  }
  for (const auto& row : parse_csv(slurp(dir / "depolarizing_identity.csv")).rows) CHECK(row.std == 0.0);

  // Unitary error: random circuits dwarf self-inverting ones somewhere at small m.
  const CsvSeries gen = parse_csv(slurp(dir / "shortunitary_general.csv"));
  const CsvSeries inv = parse_csv(slurp(dir / "shortunitary_identity.csv"));
  double best = 0.0;
  for (std::size_t i = 0; i < gen.rows.size(); ++i)
    if (inv.rows[i].mean > 1e-12) best = std::max(best, gen.rows[i].mean / inv.rows[i].mean);
  CHECK(best > 10.0);
}

TEST_CASE("figure output does not depend on the thread count") {
  const fs::path a = fresh_dir("threads1"), b = fresh_dir("threads4");
  std::ostringstream out, err;
  setenv("GSL_THREADS", "1", 1);
  REQUIRE(cli::cmd_figure(quick_figure(a), out, err) == cli::kExitOk);
  setenv("GSL_THREADS", "4", 1);
  REQUIRE(cli::cmd_figure(quick_figure(b), out, err) == cli::kExitOk);
  unsetenv("GSL_THREADS");
  for (const auto& name : cli::figure_file_names()) CHECK(slurp(a / name) == slurp(b / name));
}

TEST_CASE("estimate reproduces the figure series") {
  const fs::path dir = fresh_dir("estimate");
  std::ostringstream out, err;
  const cli::FigureOptions fig = quick_figure(dir / "fig");
  fs::create_directories(fig.outdir);
  REQUIRE(cli::cmd_figure(fig, out, err) == cli::kExitOk);

  save_gateset(clifford_gateset(clifford_group_1q()), dir / "ideal.json");
  put(dir / "config.json", R"({"ms": "100..400:100", "n_circuits": 40, "shots": "exact", "mode": "generic",
                               "seed": 0, "error_model": {"kind": "unitary_z", "r": 1e-4}})");
  cli::EstimateOptions est;
  est.config = dir / "config.json";
  est.ideal = dir / "ideal.json";
  est.out = dir / "unitary_general.csv";
  REQUIRE(cli::cmd_estimate(est, out, err) == cli::kExitOk);
  CHECK(slurp(est.out) == slurp(fig.outdir / "unitary_general.csv"));
  CHECK(fs::exists(dir / "unitary_general.csv.provenance.json"));

  est.out = dir / "depolarizing_identity.csv";
  put(dir / "config2.json", R"({"ms": "100..400:100", "n_circuits": 40, "mode": "self_inverting",
                                "error_model": {"kind": "depolarizing", "r": 1e-4}})");
  est.config = dir / "config2.json";
  REQUIRE(cli::cmd_estimate(est, out, err) == cli::kExitOk);
  CHECK(slurp(est.out) == slurp(fig.outdir / "depolarizing_identity.csv"));
}

TEST_CASE("estimate with shots reaches the noise floor for a perfect device") {
  const fs::path dir = fresh_dir("floor");
  save_gateset(clifford_gateset(clifford_group_1q()), dir / "ideal.json");
  put(dir / "config.json", R"({"ms": [4], "n_circuits": 200, "shots": 1000, "seed": 2,
                               "error_model": {"kind": "depolarizing", "r": 0}})");
  cli::EstimateOptions est;
  est.config = dir / "config.json";
  est.ideal = dir / "ideal.json";
  est.noisy = dir / "ideal.json";
  est.out = dir / "floor.csv";
  std::ostringstream out, err;
  REQUIRE(cli::cmd_estimate(est, out, err) == cli::kExitOk);
  const CsvRow row = parse_csv(slurp(est.out)).rows.at(0);
  // Ideal Clifford outcomes are 0/1 or 1/2 per circuit; the 1/2 cases contribute
  // E|binomial deviation|/K ~ sqrt(1/(2 pi K)) while deterministic ones contribute 0.
  const double half_floor = std::sqrt(1.0 / (2 * M_PI * 1000.0));
  CHECK(row.mean > 0.0);
  CHECK(row.mean < 1.5 * half_floor);
}

TEST_CASE("estimate failure modes leave no output") {
  const fs::path dir = fresh_dir("failures");
  std::ostringstream out, err;
  cli::EstimateOptions est;
  est.config = dir / "missing.json";
  est.ideal = dir / "missing_gs.json";
  est.out = dir / "never.csv";
  CHECK(cli::cmd_estimate(est, out, err) == cli::kExitUsage);
  CHECK_FALSE(fs::exists(est.out));
  CHECK(!err.str().empty());

  // A non-canonical noisy gate-set is refused before any work is done.
  const GateSet ideal = clifford_gateset(clifford_group_1q());
  save_gateset(ideal, dir / "ideal.json");
  save_gateset(apply_gauge(ideal, gauge_matrix_q(1.2)), dir / "noncanon.json");
  put(dir / "config.json", R"({"ms": [1, 2, 3]})");
  est.config = dir / "config.json";
  est.ideal = dir / "ideal.json";
  est.noisy = dir / "noncanon.json";
  CHECK(cli::cmd_estimate(est, out, err) == cli::kExitFailed);
  CHECK_FALSE(fs::exists(est.out));
}

TEST_CASE("validate exit codes") {
  const fs::path dir = fresh_dir("validate");
  std::ostringstream out, err;
  const std::vector<Eigen::Matrix2cd> id{Eigen::Matrix2cd::Identity()};
  const GateSet theta = build_theta(0.98, 0.9, 0.36, id);
  save_gateset(theta, dir / "theta.json");
  save_gateset(apply_gauge(theta, gauge_matrix_q(1.1)), dir / "theta_q.json");
  put(dir / "broken.json", "{\"n_qubits\": 1, ");

  CHECK(cli::cmd_validate(dir / "theta.json", out, err) == cli::kExitOk);
  out.str("");
  CHECK(cli::cmd_validate(dir / "theta_q.json", out, err) == cli::kExitFailed);
  CHECK(out.str().find("state") != std::string::npos);
  CHECK(cli::cmd_validate(dir / "broken.json", out, err) == cli::kExitUsage);
  CHECK(cli::cmd_validate(dir / "absent.json", out, err) == cli::kExitUsage);
}

TEST_CASE("gauge demo") {
  const fs::path dir = fresh_dir("gauge");
  cli::GaugeDemoOptions o;
  o.q_list = {1.0, 0.5, 0.0};
  o.eps2 = 0.5;
  o.json_out = dir / "report.json";
  std::ostringstream out, err;
  CHECK(cli::cmd_gauge_demo(o, out, err) == cli::kExitOk);
  CHECK(fs::exists(*o.json_out));
  o.gamma = 2.0;
  CHECK(cli::cmd_gauge_demo(o, out, err) == cli::kExitUsage);
}

TEST_CASE("command-line entry point") {
  const fs::path dir = fresh_dir("binary");
  save_gateset(clifford_gateset(clifford_group_1q()), dir / "ideal.json");
  CHECK(run_cli("--version") == 0);
  CHECK(run_cli("validate " + (dir / "ideal.json").string()) == 0);
  CHECK(run_cli("validate") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("estimate --config " + (dir / "nope.json").string() + " --ideal " + (dir / "ideal.json").string() +
                " --out " + (dir / "x.csv").string()) == 2);
  CHECK(run_cli("figure --out " + (dir / "fig").string() + " --circuits 5 --ms 100..200:100 --small-ms 1..3") == 0);
  CHECK(fs::exists(dir / "fig" / "unitary_identity.csv"));
}
