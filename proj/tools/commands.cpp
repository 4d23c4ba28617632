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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "gsmve/gsmve.hpp"

namespace gsmve::cli {

namespace {

using nlohmann::json;

struct FigureSeries {
  std::string file;
  ErrorModel::Kind kind;
  CircuitMode mode;
  bool short_range;
};

const std::vector<FigureSeries>& figure_series() {
  static const std::vector<FigureSeries> series{
      {"depolarizing_identity.csv", ErrorModel::Kind::depolarizing, CircuitMode::self_inverting, false},
      {"depolarizing_general.csv", ErrorModel::Kind::depolarizing, CircuitMode::generic, false},
      {"unitary_identity.csv", ErrorModel::Kind::unitary_z, CircuitMode::self_inverting, false},
      {"unitary_general.csv", ErrorModel::Kind::unitary_z, CircuitMode::generic, false},
      {"shortunitary_identity.csv", ErrorModel::Kind::unitary_z, CircuitMode::self_inverting, true},
      {"shortunitary_general.csv", ErrorModel::Kind::unitary_z, CircuitMode::generic, true},
  };
  return series;
}

void print_report(const ValidationReport& report, std::ostream& out) {
  for (const auto& c : report.elements) {
    out << (c.passed ? "  ok    " : "  FAIL  ") << std::left << std::setw(6) << to_string(c.kind) << ' '
        << std::setw(12) << c.label << " worst_eigenvalue=" << format_double(c.worst_eigenvalue)
        << " trace_deviation=" << format_double(c.trace_deviation) << '\n';
  }
  out << (report.all_passed() ? "all elements satisfy the canonical constraints\n"
                              : std::to_string(report.failures().size()) + " element(s) violate the canonical constraints\n");
}

std::string vector_text(const Eigen::VectorXd& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s + ")";
}

json vector_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
  return rows;
}

}  // namespace

std::vector<std::string> figure_file_names() {
  std::vector<std::string> names;
  for (const auto& s : figure_series()) names.push_back(s.file);
  return names;
}

int cmd_figure(const FigureOptions& opts, std::ostream& out, std::ostream& err) {
  ProtocolConfig base;
  base.n_circuits = opts.n_circuits;
  base.seed = opts.seed;
  base.error_model.value = opts.r;
  try {
    depolarizing(opts.r);
    theta_from_infidelity(opts.r);
    if (opts.n_circuits == 0) throw InvalidArgument("--circuits must be positive");
  } catch (const InvalidArgument& e) {
    err << "figure: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<std::size_t> ms, small_ms;
  try {
    ms = parse_lengths(opts.ms);
    small_ms = parse_lengths(opts.small_ms);
  } catch (const ParseError& e) {
    err << "figure: " << e.what() << '\n';
    return kExitUsage;
  }

  const CliffordGroup group = clifford_group_1q();
  const GateSet ideal = clifford_gateset(group);
  std::vector<std::pair<std::filesystem::path, std::string>> outputs;
  try {
    for (const auto& series : figure_series()) {
      ProtocolConfig cfg = base;
      cfg.ms = series.short_range ? small_ms : ms;
      cfg.mode = series.mode;
      cfg.error_model.kind = series.kind;
      cfg.error_model.parameter_name = "r";
      const GateSet noisy = apply_error_model(ideal, cfg.error_model.build());
      const MveCurve curve = estimate_mve_curve(ideal, noisy, cfg);
      outputs.emplace_back(opts.outdir / series.file, csv_text(to_csv_series(curve.points)));
    }
  } catch (const InvalidArgument& e) {
    err << "figure: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::filesystem::create_directories(opts.outdir);
    for (const auto& [path, text] : outputs) {
      write_text_file(path, text);
      out << "wrote " << path.string() << '\n';
    }
  } catch (const std::exception& e) {
    err << "figure: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_gauge_demo(const GaugeDemoOptions& opts, std::ostream& out, std::ostream& err) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h, phase, x90;
  h << s, s, s, -s;
  phase << 1, 0, 0, Complex(0, 1);
  x90 << s, Complex(0, -s), Complex(0, -s), s;
  const std::vector<Eigen::Matrix2cd> unitaries{Eigen::Matrix2cd::Identity(), h, phase, x90};

  std::optional<GateSet> built;
  try {
    built = build_theta(opts.eps1, opts.eps2, opts.gamma, unitaries);
  } catch (const InvalidArgument& e) {
    err << "gauge-demo: " << e.what() << '\n';
    return kExitUsage;
  }
  const GateSet& theta = *built;
  for (double q : opts.q_list)
    if (!(q >= -1.0 && q <= 1.0)) {
      err << "gauge-demo: q = " << q << " outside [-1, 1]\n";
      return kExitUsage;
    }

  out << "Noisy gate-set: eps1=" << format_double(opts.eps1) << " eps2=" << format_double(opts.eps2)
      << " gamma=" << format_double(opts.gamma) << " gates={I, H, S, X90} each followed by amplitude damping\n";

  std::vector<ExperimentSpec> circuits;
  Stream rng(stream_seed(opts.seed, 0, 0, 0, kCircuitBlock));
  for (std::size_t k = 0; k < opts.n_circuits; ++k) {
    ExperimentSpec spec;
    const std::size_t len = rng.uniform_index(21);
    for (std::size_t g = 0; g < len; ++g) spec.gate_indices.push_back(rng.uniform_index(unitaries.size()));
    circuits.push_back(spec);
  }

  json report;
  report["eps1"] = opts.eps1;
  report["eps2"] = opts.eps2;
  report["gamma"] = opts.gamma;
  report["gauges"] = json::array();

  const Ptm identity = Ptm::identity(1);
  double max_discrepancy_all = 0.0;
  for (double q : opts.q_list) {
    const Ptm damping = amplitude_damping_ptm(opts.gamma, q);
    const double fidelity = avg_gate_fidelity(damping, identity);
    const double diamond = diamond_distance(damping, identity).value;
    json entry{{"q", q}, {"avg_gate_fidelity", fidelity}, {"diamond_distance", diamond},
               {"damping_ptm", matrix_json(damping.mat())}};

    out << "\nq = " << format_double(q) << '\n';
    out << "  A_(gamma,q) diagonal " << vector_text(damping.mat().diagonal()) << ", (Z,I) entry "
        << format_double(damping.mat()(3, 0)) << '\n';
    out << "  average gate fidelity to identity " << format_double(fidelity) << '\n';
    out << "  (1/2) diamond distance to identity " << format_double(diamond) << '\n';

    if (q == 0.0) {
      out << "  gauge diag(1,0,0,0) is singular: no equivalent gate-set\n";
      entry["gateset"] = nullptr;
      report["gauges"].push_back(entry);
      continue;
    }
    const GateSet theta_q = apply_gauge(theta, gauge_matrix_q(q));
    double discrepancy = 0.0;
    for (const auto& c : circuits)
      discrepancy = std::max(
          discrepancy, (circuit_probabilities(theta, c).probs - circuit_probabilities(theta_q, c).probs).cwiseAbs().maxCoeff());
    max_discrepancy_all = std::max(max_discrepancy_all, discrepancy);
    const ValidationReport validation = validate_gateset(theta_q);

    out << "  state " << vector_text(theta_q.states()[0].vec.coords()) << '\n';
    out << "  measurement effect E_+ " << vector_text(theta_q.povms()[0].effects[0].coords()) << '\n';
    out << "  max probability discrepancy vs q=1 gauge over " << circuits.size() << " circuits "
        << format_double(discrepancy) << '\n';
    out << "  canonical constraints: " << (validation.all_passed() ? "satisfied" : "violated") << '\n';
    print_report(validation, out);

    std::vector<json> failures;
    for (const auto* f : validation.failures()) failures.push_back(f->label);
    entry["gateset"] = json::parse(gateset_to_json(theta_q, -1));
    entry["canonical"] = validation.all_passed();
    entry["failures"] = failures;
    entry["max_probability_discrepancy"] = discrepancy;
    report["gauges"].push_back(entry);
  }
  report["max_probability_discrepancy"] = max_discrepancy_all;

  const auto range = canonical_q_range(opts.eps2, {opts.eps1, opts.gamma});
  out << "\ncanonical |q| range: claimed [" << format_double(range.claimed.lo) << ", "
      << format_double(range.claimed.hi) << "]";
  if (range.empirical)
    out << ", scan [" << format_double(range.empirical->lo) << ", " << format_double(range.empirical->hi) << "]";
  else
    out << ", scan found no valid q";
  out << (range.degenerate ? " (degenerate readout)\n" : "\n");
  report["claimed_q_range"] = {range.claimed.lo, range.claimed.hi};
  report["empirical_q_range"] =
      range.empirical ? json{range.empirical->lo, range.empirical->hi} : json(nullptr);

  if (opts.json_out) {
    try {
      write_text_file(*opts.json_out, report.dump(2) + "\n");
    } catch (const std::exception& e) {
      err << "gauge-demo: " << e.what() << '\n';
      return kExitFailed;
    }
  }
  return kExitOk;
}

int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err) {
  ProtocolConfig cfg;
  std::optional<GateSet> ideal, noisy;
  try {
    cfg = load_protocol_config(opts.config);
    if (opts.ms) cfg.ms = parse_lengths(*opts.ms);
    if (opts.n_circuits) cfg.n_circuits = *opts.n_circuits;
    if (opts.exact) cfg.shots.reset();
    if (opts.shots) cfg.shots = *opts.shots;
    if (opts.seed) cfg.seed = *opts.seed;
    ideal = load_gateset(opts.ideal);
    if (opts.noisy) noisy = load_gateset(*opts.noisy);
    else noisy = apply_error_model(*ideal, cfg.error_model.build());
  } catch (const ParseError& e) {
    err << "estimate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "estimate: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!opts.skip_validation) {
    bool ok = true;
    for (const auto* gs : {&*ideal, &*noisy}) {
      const auto report = validate_gateset(*gs);
      for (const auto* f : report.failures()) {
        err << "estimate: " << (gs == &*ideal ? "ideal" : "noisy") << " gate-set " << to_string(f->kind) << " '"
            << f->label << "' violates the canonical constraints\n";
        ok = false;
      }
    }
    if (!ok) return kExitFailed;
  }

  try {
    const MveCurve curve = estimate_mve_curve(*ideal, *noisy, cfg);
    write_text_file(opts.out, csv_text(to_csv_series(curve.points)));
    write_text_file(opts.out.string() + ".provenance.json", provenance_json(curve) + "\n");
    out << "wrote " << opts.out.string() << " (" << curve.points.size() << " points)\n";
  } catch (const InvalidArgument& e) {
    err << "estimate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "estimate: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_validate(const std::filesystem::path& gateset, std::ostream& out, std::ostream& err) {
  std::optional<GateSet> gs;
  try {
    gs = load_gateset(gateset);
  } catch (const ParseError& e) {
    err << "validate: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto report = validate_gateset(*gs);
  out << gateset.string() << ":\n";
  print_report(report, out);
  return report.all_passed() ? kExitOk : kExitFailed;
}

}  // namespace gsmve::cli
