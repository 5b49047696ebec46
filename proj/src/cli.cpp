// Copyright 2026 The trapq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trapq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trapq/gates.hpp"
#include "trapq/hamiltonian.hpp"
#include "trapq/oracle.hpp"
#include "trapq/schedule_io.hpp"
#include "trapq/trapcalc.hpp"

namespace trapq::cli {

using nlohmann::json;

namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string label(unsigned x) {
  std::string s = "|";
  for (int b = 2; b >= 0; --b) s += ((x >> b) & 1u) ? '1' : '0';
  return s + ">";
}

std::string fmt(double v, int precision = 12, bool sci = false) {
  std::ostringstream o;
  if (sci) o << std::scientific;
  else o << std::fixed;
  o << std::setprecision(precision) << v;
  return o.str();
}

std::string signed_fmt(double v) {
  std::string s = fmt(v);
  return (v >= 0 || s[0] != '-') ? "+" + s : s;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

StateVector read_amplitudes(const std::filesystem::path& path, const SpaceConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  const json& arr = doc.is_object() && doc.contains("amplitudes") ? doc["amplitudes"] : doc;
  if (!arr.is_array()) {
    throw InputError(path.string() + ": expected an array of [re, im] pairs");
  }
  const std::size_t n = arr.size();
  if (n != 8 && n != cfg.dim()) {
    throw InputError(
        path.string() + ": expected 8 or " + std::to_string(cfg.dim()) +
        " amplitudes, got " + std::to_string(n));
  }
  CVector amps = CVector::Zero(Eigen::Index(cfg.dim()));
  for (std::size_t k = 0; k < n; ++k) {
    const json& a = arr[k];
    Complex z;
    if (a.is_number()) {
      z = a.get<double>();
    } else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
      z = Complex(a[0].get<double>(), a[1].get<double>());
    } else {
      throw InputError(
          path.string() + ": amplitudes[" + std::to_string(k) +
          "] must be a number or [re, im]");
    }
    const std::size_t idx = n == 8 ? computational_index(unsigned(k), cfg) : k;
    amps[Eigen::Index(idx)] = z;
  }
  const double norm = amps.norm();
  if (std::abs(norm * norm - 1.0) > 1e-9) {
    throw InputError(
        path.string() + ": state norm² is " + fmt(norm * norm, 12) +
        ", deviates from 1 by more than 1e-9");
  }
  return StateVector(cfg, amps);
}

int cmd_simulate(
    const std::string& path, const std::string& state_label, const std::string& amp_path,
    const std::string& config_text, bool machine, std::ostream& out, std::ostream& err) {
  const ScheduleFile file = read_schedule(path);
  RunConfig rc{file.cfg, LambDicke(file.eta)};
  if (!config_text.empty()) rc = parse_config(config_text, rc);

  std::string initial_name;
  StateVector initial = StateVector::computational(rc.cfg, 0);
  if (!amp_path.empty()) {
    initial = read_amplitudes(amp_path, rc.cfg);
    initial_name = amp_path;
  } else {
    const unsigned x = parse_label(state_label.empty() ? "|000>" : state_label);
    initial = StateVector::computational(rc.cfg, x);
    initial_name = label(x);
  }
  if (file.schedule.pulses.empty()) throw InputError(path + ": schedule has no pulses");
  const Trajectory tr = run_schedule(file.schedule, initial, rc.eta);
  const double leak = leakage(tr.final_state);

  if (machine) {
    json probs = json::object();
    json amps = json::array();
    for (unsigned x = 0; x < 8; ++x) {
      const std::size_t i = computational_index(x, rc.cfg);
      probs[label(x)] = tr.final_state.population(i);
      amps.push_back(complex_json(tr.final_state[i]));
    }
    out << json{{"schedule", file.schedule.name},
                {"pulses", file.schedule.pulses.size()},
                {"config", {{"n_cyc", rc.cfg.n_cyc}, {"n_ax", rc.cfg.n_ax}, {"eta", rc.eta.value()}}},
                {"initial", initial_name},
                {"probabilities", probs},
                {"amplitudes", amps},
                {"leakage", leak},
                {"boundary_max", tr.boundary_max}}
               .dump(2)
        << "\n";
  } else {
    out << "schedule  " << file.schedule.name << " (" << file.schedule.pulses.size()
        << " pulses)\n";
    out << "space     n_cyc=" << rc.cfg.n_cyc << " n_ax=" << rc.cfg.n_ax
        << " eta=" << rc.eta.value() << "\n";
    out << "initial   " << initial_name << "\n\n";
    out << "state   probability      amplitude\n";
    for (unsigned x = 0; x < 8; ++x) {
      const std::size_t i = computational_index(x, rc.cfg);
      const Complex z = tr.final_state[i];
      out << label(x) << "   " << fmt(tr.final_state.population(i)) << "   "
          << signed_fmt(z.real()) << " " << signed_fmt(z.imag()) << "i\n";
    }
    out << "\nleakage   " << fmt(leak, 3, true) << "\n";
    out << "boundary  " << fmt(tr.boundary_max, 3, true) << "\n";
  }
  if (tr.boundary_max > kBoundaryWarning) {
    err << "warning: boundary population " << fmt(tr.boundary_max, 3, true)
        << " exceeds " << kBoundaryWarning << "; enlarge the truncation\n";
  }
  return kOk;
}

int cmd_verify_gates(const RunConfig& rc, bool machine, std::ostream& out) {
  const auto catalog = gate_catalog(rc.eta);
  std::vector<RecipeReport> reports;
  reports.reserve(catalog.size());
  for (const auto& r : catalog) reports.push_back(verify_recipe(r, rc.cfg, rc.eta));
  const auto passed = std::size_t(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }));

  if (machine) {
    json rows = json::array();
    for (const auto& r : reports) {
      rows.push_back({{"name", r.name},
                      {"pulses", r.pulse_count},
                      {"fidelity", r.fidelity},
                      {"leakage", r.leakage},
                      {"boundary", r.boundary},
                      {"phase_error", r.phase_error},
                      {"exact_ratio", r.exact_ratio},
                      {"pass", r.pass}});
    }
    out << json{{"eta", rc.eta.value()},
                {"config", {{"n_cyc", rc.cfg.n_cyc}, {"n_ax", rc.cfg.n_ax}}},
                {"recipes", rows},
                {"passed", passed},
                {"total", reports.size()}}
               .dump(2)
        << "\n";
  } else {
    out << "eta=" << rc.eta.value() << "  n_cyc=" << rc.cfg.n_cyc
        << "  n_ax=" << rc.cfg.n_ax << "\n\n";
    out << std::left << std::setw(13) << "recipe" << std::right << std::setw(7) << "pulses"
        << std::setw(13) << "1-fidelity" << std::setw(12) << "leakage" << std::setw(12)
        << "boundary" << std::setw(12) << "phase err" << "  status\n";
    for (const auto& r : reports) {
      std::string status = r.pass ? "ok" : "FAIL";
      if (!r.exact_ratio) status += " (degraded, eps=" + fmt(1 - r.fidelity, 2, true) + ")";
      out << std::left << std::setw(13) << r.name << std::right << std::setw(7)
          << r.pulse_count << std::setw(13) << fmt(1 - r.fidelity, 2, true) << std::setw(12)
          << fmt(r.leakage, 2, true) << std::setw(12) << fmt(r.boundary, 2, true)
          << std::setw(12) << fmt(r.phase_error, 2, true) << "  " << status << "\n";
    }
    out << "\n" << passed << "/" << reports.size() << " recipes pass\n";
  }
  return passed == reports.size() ? kOk : kVerificationFailed;
}

json dj_json(const BoolFn3& f, const DJResult& r) {
  json probs = json::object();
  for (unsigned x = 0; x < 8; ++x) probs[label(x)] = r.probabilities[x];
  return {{"function", f.hex()},
          {"bits", f.bits()},
          {"weight", f.weight()},
          {"class", std::string(to_string(classify(f)))},
          {"decision", std::string(to_string(r.decision))},
          {"probabilities", probs},
          {"leakage", r.leakage},
          {"boundary_max", r.boundary},
          {"pulses", r.pulse_count}};
}

int cmd_dj_one(
    const std::string& selector, const RunConfig& rc, std::uint64_t shots,
    std::uint64_t seed, bool machine, std::ostream& out) {
  const BoolFn3 f = BoolFn3::parse(selector);
  const FnClass cls = classify(f);
  if (cls == FnClass::Other) {
    throw InputError(
        "f_" + f.hex() + " has weight " + std::to_string(f.weight()) +
        "; only constant (weight 0 or 8) or balanced (weight 4) functions are accepted");
  }
  const DJResult r = run_dj(f, rc.cfg, rc.eta);
  std::array<std::uint64_t, 9> counts{};
  if (shots > 0) counts = sample_measurement(r.probabilities, seed, shots);

  if (machine) {
    json doc = dj_json(f, r);
    if (shots > 0) {
      json c = json::object();
      for (unsigned x = 0; x < 8; ++x) c[label(x)] = counts[x];
      c["leaked"] = counts[8];
      doc["shots"] = shots;
      doc["seed"] = seed;
      doc["counts"] = c;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "f = " << f.hex() << " (" << f.bits() << ")  weight " << f.weight() << "  class "
        << to_string(cls) << "\n";
    out << "P(|000>) = " << fmt(r.probabilities[0]) << "\n";
    out << "decision  " << to_string(r.decision) << "\n";
    out << "pulses " << r.pulse_count << "  leakage " << fmt(r.leakage, 3, true)
        << "  boundary " << fmt(r.boundary, 3, true) << "\n";
    if (shots > 0) {
      out << "\n" << shots << " shots, seed " << seed << "\n";
      for (unsigned x = 0; x < 8; ++x) out << label(x) << "  " << counts[x] << "\n";
      out << "leaked " << counts[8] << "\n";
    }
  }
  return r.decision == cls ? kOk : kVerificationFailed;
}

int cmd_dj_all(const RunConfig& rc, bool machine, std::ostream& out) {
  std::vector<BoolFn3> fns;
  for (unsigned code = 0; code < 256; ++code) {
    const BoolFn3 f{std::uint8_t(code)};
    if (classify(f) != FnClass::Other) fns.push_back(f);
  }
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<DJResult> results(fns.size());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < fns.size(); k += workers) {
        results[k] = run_dj(fns[k], rc.cfg, rc.eta);
      }
    }));
  }
  for (auto& j : jobs) j.get();

  int constant = 0, balanced = 0, wrong = 0;
  json rows = json::array();
  for (std::size_t k = 0; k < fns.size(); ++k) {
    const FnClass cls = classify(fns[k]);
    (cls == FnClass::Constant ? constant : balanced)++;
    const bool ok = results[k].decision == cls;
    if (!ok) ++wrong;
    if (machine) {
      rows.push_back(dj_json(fns[k], results[k]));
    } else {
      out << fns[k].hex() << "  " << fns[k].bits() << "  " << std::left << std::setw(9)
          << to_string(cls) << std::right << "  P(|000>)=" << fmt(results[k].probabilities[0])
          << "  leak=" << fmt(results[k].leakage, 2, true) << "  " << (ok ? "ok" : "WRONG")
          << "\n";
    }
  }
  if (machine) {
    out << json{{"functions", rows},
                {"constant", constant},
                {"balanced", balanced},
                {"misclassified", wrong}}
               .dump(2)
        << "\n";
  } else {
    out << "\nconstant " << constant << "  balanced " << balanced << "  misclassified "
        << wrong << "\n";
  }
  return wrong == 0 ? kOk : kVerificationFailed;
}

int cmd_rwa_sweep(
    const std::vector<double>& ratios, double eta, int n_ax, bool machine, std::ostream& out) {
  RwaSetup setup;
  setup.eta = eta;
  setup.cfg = SpaceConfig(2, n_ax);
  const auto points = rwa_sweep(ratios, setup);
  if (machine) {
    json rows = json::array();
    for (const auto& p : points) {
      rows.push_back({{"ratio", p.ratio}, {"angle_error", p.angle_error}, {"steps", p.steps}});
    }
    out << json{{"eta", eta}, {"n_ax", n_ax}, {"theta0", setup.theta0}, {"points", rows}}.dump(2)
        << "\n";
  } else {
    out << "# eta=" << eta << " n_ax=" << n_ax << " theta0=" << setup.theta0 << "\n";
    out << "# ratio angle_error_rad\n";
    for (const auto& p : points) {
      out << fmt(p.ratio, 6, true) << " " << fmt(p.angle_error, 6, true) << "\n";
    }
  }
  return kOk;
}

int cmd_trap(const TrapParameters& p, bool machine, std::ostream& out) {
  const Frequencies f = frequencies_from(p);
  const double k = sideband_wavenumber(f);
  const double eta = physical_eta(f, k);
  const std::vector<std::pair<std::string, double>> rows{
      {"omega_c", f.omega_c},           {"omega_c_tilde", f.omega_c_tilde},
      {"omega_c_prime", f.omega_c_prime}, {"omega_m", f.omega_m},
      {"omega_z", f.omega_z},           {"omega_s", f.omega_s},
      {"omega_sa", f.omega_sa},         {"omega_sc", f.omega_sc}};
  if (machine) {
    json freqs = json::object();
    for (const auto& [name, w] : rows) {
      freqs[name] = {{"rad_per_s", w}, {"hz", w / constants::two_pi}};
    }
    out << json{{"B", p.B}, {"V0", p.V0}, {"d", p.d}, {"frequencies", freqs},
                {"sideband_wavenumber", k}, {"eta", eta}}
               .dump(2)
        << "\n";
  } else {
    out << "B=" << p.B << " T  V0=" << p.V0 << " V  d=" << p.d << " m\n\n";
    out << std::left << std::setw(15) << "quantity" << std::right << std::setw(16) << "Hz"
        << std::setw(16) << "rad/s" << "\n";
    for (const auto& [name, w] : rows) {
      out << std::left << std::setw(15) << name << std::right << std::setw(16)
          << fmt(w / constants::two_pi, 6, true) << std::setw(16) << fmt(w, 6, true) << "\n";
    }
    out << "\nk = omega_sa/c  " << fmt(k, 6, true) << " 1/m\n";
    out << "eta             " << fmt(eta, 6, true) << "\n";
  }
  return kOk;
}

ScheduleFile recipe_file(const GateRecipe& r, const RunConfig& rc) {
  ScheduleFile file;
  file.cfg = rc.cfg;
  file.eta = rc.eta.value();
  file.schedule = r.schedule;
  file.schedule.name = r.name;
  return file;
}

int cmd_export(
    const std::string& name, bool all, const std::string& output, const std::string& dir,
    const RunConfig& rc, std::ostream& out) {
  if (all) {
    if (dir.empty()) throw InputError("--all needs --dir");
    std::filesystem::create_directories(dir);
    for (const auto& r : gate_catalog(rc.eta)) {
      const auto path = std::filesystem::path(dir) / (r.name + ".json");
      write_schedule(path, recipe_file(r, rc));
      out << path.string() << "\n";
    }
    return kOk;
  }
  if (name.empty()) throw InputError("export-gate needs a recipe name or --all");
  const ScheduleFile file = recipe_file(catalog_recipe(name, rc.eta), rc);
  if (output.empty()) {
    out << serialize(file);
  } else {
    write_schedule(output, file);
  }
  return kOk;
}

}  // namespace

RunConfig parse_config(std::string_view text, RunConfig base) {
  int n_cyc = base.cfg.n_cyc;
  int n_ax = base.cfg.n_ax;
  double eta = base.eta.value();
  std::string s(text);
  std::stringstream items(s);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("config entry '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "n_cyc") {
        n_cyc = std::stoi(value, &used);
      } else if (key == "n_ax") {
        n_ax = std::stoi(value, &used);
      } else if (key == "eta") {
        eta = std::stod(value, &used);
      } else {
        throw InputError("unknown config key '" + key + "' (expected n_cyc, n_ax, eta)");
      }
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("config value for '" + key + "' is not a number: '" + value + "'");
    }
  }
  return {SpaceConfig(n_cyc, n_ax), LambDicke(eta)};
}

unsigned parse_label(std::string_view text) {
  std::string_view bits = text;
  if (bits.size() == 5 && bits.front() == '|' && bits.back() == '>') {
    bits = bits.substr(1, 3);
  }
  if (bits.size() != 3 ||
      !std::all_of(bits.begin(), bits.end(), [](char c) { return c == '0' || c == '1'; })) {
    throw InputError("state label must look like |101>, got '" + std::string(text) + "'");
  }
  unsigned x = 0;
  for (char c : bits) x = (x << 1) | unsigned(c - '0');
  return x;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pulse-level simulator and gate compiler for a trapped-electron register"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  bool machine = false;
  std::string config_text;
  app.add_flag("--machine-readable", machine, "Emit JSON instead of tables");

  auto* sim = app.add_subcommand("simulate", "Run a schedule file on an initial state");
  std::string sim_path, sim_state, sim_amps;
  sim->add_option("schedule", sim_path, "Schedule JSON file")->required();
  auto* state_opt = sim->add_option("--state", sim_state, "Computational label, e.g. |101>");
  sim->add_option("--amplitudes", sim_amps, "JSON file with 8 or D amplitudes")
      ->excludes(state_opt);
  sim->add_option("--config", config_text, "n_cyc=..,n_ax=..,eta=.. overrides");
  sim->add_flag("--machine-readable", machine);

  auto* verify = app.add_subcommand("verify-gates", "Check every catalog recipe");
  verify->add_option("--config", config_text, "n_cyc=..,n_ax=..,eta=..");
  verify->add_flag("--machine-readable", machine);

  auto* dj = app.add_subcommand("dj", "Deutsch-Jozsa on a 3-bit function");
  std::string dj_sel;
  bool dj_all = false;
  std::uint64_t shots = 0, seed = 0;
  auto* sel_opt = dj->add_option("function", dj_sel, "Hex code (0F) or bitstring (00001111)");
  dj->add_flag("--all", dj_all, "Run all constant and balanced functions")->excludes(sel_opt);
  dj->add_option("--shots", shots, "Sample this many measurement shots");
  dj->add_option("--seed", seed, "Seed of the shot sampler");
  dj->add_option("--config", config_text, "n_cyc=..,n_ax=..,eta=..");
  dj->add_flag("--machine-readable", machine);

  auto* rwa = app.add_subcommand("rwa-sweep", "Rotating-wave error of the sideband block");
  std::vector<double> ratios{0.1, 0.01, 0.001};
  double rwa_eta = RwaSetup{}.eta;
  int rwa_nax = RwaSetup{}.cfg.n_ax;
  rwa->add_option("--ratios", ratios, "Omega/omega_z values")->delimiter(',');
  rwa->add_option("--eta", rwa_eta, "Lamb-Dicke parameter")->check(CLI::NonNegativeNumber);
  rwa->add_option("--n-ax", rwa_nax, "Axial truncation")->check(CLI::Range(2, 64));
  rwa->add_flag("--machine-readable", machine);

  auto* trap = app.add_subcommand("trap", "Trap frequencies from B, V0, d");
  TrapParameters tp;
  trap->add_option("--B", tp.B, "Magnetic field (T)");
  trap->add_option("--V0", tp.V0, "Ring voltage (V)");
  trap->add_option("--d", tp.d, "Trap dimension (m)");
  trap->add_flag("--machine-readable", machine);

  auto* exp = app.add_subcommand("export-gate", "Write a recipe as a schedule file");
  std::string exp_name, exp_out, exp_dir;
  bool exp_all = false;
  auto* name_opt = exp->add_option("recipe", exp_name, "Catalog recipe name");
  exp->add_flag("--all", exp_all, "Export every recipe")->excludes(name_opt);
  exp->add_option("-o,--output", exp_out, "Output file (default stdout)");
  exp->add_option("--dir", exp_dir, "Output directory for --all");
  exp->add_option("--config", config_text, "n_cyc=..,n_ax=..,eta=..");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (sim->parsed()) {
      return cmd_simulate(sim_path, sim_state, sim_amps, config_text, machine, out, err);
    }
    const RunConfig rc = parse_config(config_text);
    if (verify->parsed()) return cmd_verify_gates(rc, machine, out);
    if (dj->parsed()) {
      if (dj_all) return cmd_dj_all(rc, machine, out);
      if (dj_sel.empty()) throw InputError("dj needs a function selector or --all");
      return cmd_dj_one(dj_sel, rc, shots, seed, machine, out);
    }
    if (rwa->parsed()) return cmd_rwa_sweep(ratios, rwa_eta, rwa_nax, machine, out);
    if (trap->parsed()) return cmd_trap(tp, machine, out);
    if (exp->parsed()) return cmd_export(exp_name, exp_all, exp_out, exp_dir, rc, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace trapq::cli
