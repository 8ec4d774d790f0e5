// Copyright 2026 The cvcloner Authors
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

#include "cvclone/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvclone/cloning_circuits.hpp"

namespace cvclone::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kDefaultTolerance = 1e-10;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommonOptions {
  std::string format = "json";
  std::string output;
  std::optional<double> tolerance;
};

struct MachineOptions {
  bool asym = false;
  bool sym = false;
  bool factorized = false;
  double gamma = 0.0;
  std::size_t n = 1;
  std::size_t m = 1;
  std::string xi = "0,0";
};

struct SweepOptions {
  double gamma_start = -1.0;
  double gamma_stop = 1.0;
  std::size_t steps = 41;
  std::size_t m_start = 2;
  std::size_t m_stop = 6;
};

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json spec_json(const ClonerSpec& spec) {
  if (const auto* asym = std::get_if<Asym1to2>(&spec.variant)) {
    return Json{{"variant", "asym"}, {"gamma", asym->gamma}, {"factorized", spec.factorized}};
  }
  const auto& sym = std::get<SymNtoM>(spec.variant);
  return Json{{"variant", "sym"}, {"n", sym.n}, {"m", sym.m}};
}

std::string csv_number(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

double effective_tolerance(const CommonOptions& common) {
  if (common.tolerance) {
    return *common.tolerance;
  }
  if (const char* env = std::getenv("CVCLONER_TOLERANCE"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw UsageError(std::string("CVCLONER_TOLERANCE is not a positive number: ") + env);
    }
    return tol;
  }
  return kDefaultTolerance;
}

ClonerSpec make_spec(const MachineOptions& o) {
  if (o.asym == o.sym) {
    throw UsageError("choose exactly one of --asym or --sym");
  }
  ClonerSpec spec = o.asym ? ClonerSpec::asymmetric(o.gamma, o.factorized) : ClonerSpec::symmetric(o.n, o.m);
  if (o.sym && o.factorized) {
    throw UsageError("--factorized applies to --asym only");
  }
  try {
    validate(spec);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return spec;
}

// Worst violation of the report invariants, scaled so large-gain machines are
// judged relative to their noise level.
double report_violation(const MachineReport& r) {
  double worst = std::max(r.diagnostics.symplectic.max_dev(), std::max(0.0, -r.diagnostics.uncertainty_min_eig));
  for (const auto& c : r.clones) {
    worst = std::max(worst, residuals(c).max());
  }
  return worst;
}

void emit(const CommonOptions& common, const std::string& body, std::ostream& out) {
  if (common.output.empty() || common.output == "-") {
    out << body;
    return;
  }
  std::ofstream file(common.output, std::ios::binary);
  if (!file) {
    throw UsageError("cannot open output file " + common.output);
  }
  file << body;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("-o,--output", common.output, "Output file (default: standard output)");
  cmd->add_option("--tolerance", common.tolerance, "Invariant tolerance (overrides CVCLONER_TOLERANCE)")
      ->check(CLI::PositiveNumber);
}

void add_machine(CLI::App* cmd, MachineOptions& o) {
  auto* asym = cmd->add_flag("--asym", o.asym, "Asymmetric 1->2 cloner");
  auto* sym = cmd->add_flag("--sym", o.sym, "Symmetric N->M cloner");
  asym->excludes(sym);
  cmd->add_flag("--factorized", o.factorized, "Build the asymmetric cloner from BS-NOPA-BS");
  cmd->add_option("--n", o.n, "Number of input copies N")->check(CLI::PositiveNumber);
  cmd->add_option("--xi", o.xi, "Coherent amplitude as re,im");
}

int cmd_clone(const MachineOptions& mo, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  const ClonerSpec spec = make_spec(mo);
  const double tol = effective_tolerance(common);
  const MachineReport report = analyze_machine(spec, parse_complex(mo.xi));
  emit(common, common.format == "csv" ? clone_csv(report) : clone_json(report), out);
  const double violation = report_violation(report);
  if (violation > tol) {
    err << "invariant violation: max residual " << violation << " exceeds tolerance " << tol << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_sweep(const MachineOptions& mo, const SweepOptions& so, const CommonOptions& common, std::ostream& out,
              std::ostream& err) {
  MachineOptions base = mo;
  if (base.asym == base.sym) {
    throw UsageError("choose exactly one of --asym or --sym");
  }
  const double tol = effective_tolerance(common);
  const Complex xi = parse_complex(mo.xi);

  Json rows = Json::array();
  std::vector<std::string> header;
  std::vector<std::vector<double>> table;
  double worst = 0.0;

  if (base.asym) {
    if (so.steps < 1) {
      throw UsageError("--steps must be >= 1");
    }
    if (so.gamma_stop < so.gamma_start) {
      throw UsageError("--gamma-stop must be >= --gamma-start");
    }
    header = {"gamma", "u", "v", "w", "n_ch_a", "n_ch_c", "fidelity_a", "fidelity_c", "noise_product"};
    for (std::size_t i = 0; i < so.steps; ++i) {
      const double g = so.steps == 1 ? so.gamma_start
                                     : so.gamma_start + (so.gamma_stop - so.gamma_start) * static_cast<double>(i) /
                                                            static_cast<double>(so.steps - 1);
      base.gamma = g;
      const MachineReport r = analyze_machine(make_spec(base), xi);
      const FactorizationParams p = asym_params(g);
      worst = std::max(worst, report_violation(r));
      const auto& a = r.clones[0];
      const auto& c = r.clones[1];
      table.push_back({g, p.u, p.v, p.w, a.n_chaotic, c.n_chaotic, a.fidelity, c.fidelity,
                       a.n_chaotic * c.n_chaotic});
    }
  } else {
    if (so.m_stop < so.m_start) {
      throw UsageError("--m-stop must be >= --m-start");
    }
    header = {"n", "m", "n_ch", "fidelity", "fidelity_bound", "clone_spread"};
    for (std::size_t m = so.m_start; m <= so.m_stop; ++m) {
      base.m = m;
      const ClonerSpec spec = make_spec(base);
      const MachineReport r = analyze_machine(spec, xi);
      worst = std::max(worst, report_violation(r));
      double spread = 0.0;
      for (const auto& c : r.clones) {
        spread = std::max(spread, std::abs(c.fidelity - r.clones.front().fidelity));
      }
      table.push_back({static_cast<double>(base.n), static_cast<double>(m), r.clones.front().n_chaotic,
                       r.clones.front().fidelity, analytic_fidelity(spec, 0), spread});
    }
  }

  std::string body;
  if (common.format == "csv") {
    std::ostringstream os;
    for (std::size_t k = 0; k < header.size(); ++k) {
      os << (k ? "," : "") << header[k];
    }
    os << "\n";
    for (const auto& row : table) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        os << (k ? "," : "") << csv_number(row[k]);
      }
      os << "\n";
    }
    body = os.str();
  } else {
    for (const auto& row : table) {
      Json obj;
      for (std::size_t k = 0; k < header.size(); ++k) {
        obj[header[k]] = row[k];
      }
      rows.push_back(std::move(obj));
    }
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "sweep";
    doc["spec"] = base.asym ? Json{{"variant", "asym"},
                                   {"gamma_start", so.gamma_start},
                                   {"gamma_stop", so.gamma_stop},
                                   {"steps", so.steps},
                                   {"factorized", base.factorized}}
                            : Json{{"variant", "sym"}, {"n", base.n}, {"m_start", so.m_start}, {"m_stop", so.m_stop}};
    doc["xi"] = complex_json(xi);
    doc["rows"] = std::move(rows);
    doc["diagnostics"] = Json{{"max_residual", worst}, {"tolerance", tol}};
    body = doc.dump(2) + "\n";
  }
  emit(common, body, out);
  if (worst > tol) {
    err << "invariant violation: max residual " << worst << " exceeds tolerance " << tol << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_verify(bool oracle, std::size_t cutoff, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  VerifyOptions vo;
  vo.oracle = oracle;
  vo.cutoff = cutoff;
  if (common.tolerance) {
    vo.tolerance = common.tolerance;
  } else if (const char* env = std::getenv("CVCLONER_TOLERANCE"); env != nullptr && *env != '\0') {
    vo.tolerance = effective_tolerance(common);
  }
  const auto suites = run_verification(vo);
  const bool all_passed = std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed; });

  std::string body;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "suite,max_dev,tolerance,status,detail\n";
    for (const auto& s : suites) {
      os << s.name << "," << csv_number(s.max_dev) << "," << csv_number(s.tolerance) << ","
         << (s.passed ? "pass" : "FAIL") << ",\"" << s.detail << "\"\n";
    }
    body = os.str();
  } else {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["spec"] = Json{{"oracle", oracle}, {"cutoff", cutoff}};
    Json list = Json::array();
    for (const auto& s : suites) {
      list.push_back(Json{{"name", s.name},
                          {"max_dev", s.max_dev},
                          {"tolerance", s.tolerance},
                          {"passed", s.passed},
                          {"detail", s.detail}});
    }
    doc["suites"] = std::move(list);
    doc["passed"] = all_passed;
    body = doc.dump(2) + "\n";
  }
  emit(common, body, out);
  for (const auto& s : suites) {
    if (!s.passed) {
      err << "suite " << s.name << " failed: max deviation " << s.max_dev << " > tolerance " << s.tolerance
          << " (" << s.detail << ")\n";
    }
  }
  return all_passed ? kExitOk : kExitInvariant;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto parse = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw UsageError("invalid complex number '" + text + "'");
    }
    if (used != part.size() || !std::isfinite(v)) {
      throw UsageError("invalid complex number '" + text + "'");
    }
    return v;
  };
  if (comma == std::string::npos) {
    return {parse(text), 0.0};
  }
  return {parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
}

std::string clone_json(const MachineReport& report) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "clone";
  doc["spec"] = spec_json(report.spec);
  doc["xi"] = complex_json(report.xi);
  Json clones = Json::array();
  for (const auto& c : report.clones) {
    clones.push_back(Json{{"mode", c.clone_mode.index},
                          {"name", c.clone_mode.name},
                          {"amplitude", complex_json(c.output_amplitude)},
                          {"n_chaotic", c.n_chaotic},
                          {"n_chaotic_transform", c.n_chaotic_transform},
                          {"n_chaotic_analytic", c.n_chaotic_analytic},
                          {"fidelity", c.fidelity},
                          {"fidelity_analytic", c.fidelity_analytic},
                          {"fidelity_discrepancy", std::abs(c.fidelity - c.fidelity_analytic)},
                          {"q_peak", c.q_peak},
                          {"defect", complex_json(c.phase_covariance_defect)}});
  }
  doc["clones"] = std::move(clones);
  const auto& d = report.diagnostics;
  Json diag;
  diag["symplectic_dev"] = d.symplectic.max_dev();
  diag["factorization_dev"] = d.factorization_dev ? Json(*d.factorization_dev) : Json(nullptr);
  diag["uncertainty_min_eig"] = d.uncertainty_min_eig;
  diag["anticlone_photons"] = d.anticlone_photons ? Json(*d.anticlone_photons) : Json(nullptr);
  diag["max_residual"] = report_violation(report);
  doc["diagnostics"] = std::move(diag);
  return doc.dump(2) + "\n";
}

std::string clone_csv(const MachineReport& report) {
  std::ostringstream os;
  os << "mode,name,n_chaotic,n_chaotic_analytic,fidelity,fidelity_analytic,q_peak,defect_abs\n";
  for (const auto& c : report.clones) {
    os << c.clone_mode.index << "," << c.clone_mode.name << "," << csv_number(c.n_chaotic) << ","
       << csv_number(c.n_chaotic_analytic) << "," << csv_number(c.fidelity) << ","
       << csv_number(c.fidelity_analytic) << "," << csv_number(c.q_peak) << ","
       << csv_number(std::abs(c.phase_covariance_defect)) << "\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian continuous-variable cloning machine simulator", "cvcloner"};
  app.require_subcommand(1);

  CommonOptions clone_common;
  MachineOptions clone_machine;
  auto* clone = app.add_subcommand("clone", "Simulate one cloner and report every clone");
  add_machine(clone, clone_machine);
  clone->add_option("--gamma", clone_machine.gamma, "Asymmetry parameter gamma");
  clone->add_option("--m", clone_machine.m, "Number of clones M")->check(CLI::PositiveNumber);
  add_common(clone, clone_common);

  CommonOptions sweep_common;
  MachineOptions sweep_machine;
  sweep_machine.xi = "1,0";
  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Tabulate figures of merit over gamma or M");
  add_machine(sweep, sweep_machine);
  sweep->add_option("--gamma-start", sweep_opts.gamma_start, "First gamma");
  sweep->add_option("--gamma-stop", sweep_opts.gamma_stop, "Last gamma");
  sweep->add_option("--steps", sweep_opts.steps, "Number of gamma points")->check(CLI::PositiveNumber);
  sweep->add_option("--m-start", sweep_opts.m_start, "First M")->check(CLI::PositiveNumber);
  sweep->add_option("--m-stop", sweep_opts.m_stop, "Last M")->check(CLI::PositiveNumber);
  add_common(sweep, sweep_common);

  CommonOptions verify_common;
  bool oracle = false;
  std::size_t cutoff = 14;
  auto* verify = app.add_subcommand("verify", "Run the invariant and oracle suites");
  verify->add_flag("--oracle", oracle, "Include the truncated-Fock cross-check");
  verify->add_option("--cutoff", cutoff, "Photon cutoff per mode for the oracle")->check(CLI::Range(1, 40));
  add_common(verify, verify_common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (clone->parsed()) {
      return cmd_clone(clone_machine, clone_common, out, err);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_machine, sweep_opts, sweep_common, out, err);
    }
    return cmd_verify(oracle, cutoff, verify_common, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace cvclone::cli
