#include "cavcoll/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cavcoll/cavity.hpp"
#include "cavcoll/config.hpp"
#include "cavcoll/csv.hpp"
#include "cavcoll/dynamics.hpp"
#include "cavcoll/errors.hpp"
#include "cavcoll/kinematics.hpp"
#include "cavcoll/traploss.hpp"
#include "cavcoll/validation.hpp"

namespace cavcoll {

namespace {

struct Flags {
  std::string config_path;
  std::optional<double> delta_mhz;
  std::optional<double> t_max_ns;
  std::optional<double> dt_ps;
  std::optional<double> gamma_mhz;
  int stride = 0;
  bool allow_large_step = false;
  std::optional<int> points;
  std::optional<double> from_mhz;
  std::optional<double> to_mhz;
  std::optional<std::string> p_model;
  std::optional<std::string> coupling;
  int jobs = 1;
  bool allow_out_of_window = false;
  bool report_excitation = false;
  std::optional<std::string> output;
  std::optional<int> precision;
};

RunConfig load(const Flags& f) {
  RunConfig cfg = f.config_path.empty() ? default_run_config() : load_run_config(f.config_path);
  if (f.points) cfg.scan.points = *f.points;
  if (f.from_mhz) cfg.scan.from_mhz = *f.from_mhz;
  if (f.to_mhz) cfg.scan.to_mhz = *f.to_mhz;
  if (f.p_model) cfg.scan.p_model = parse_p_model(*f.p_model);
  if (f.coupling) cfg.coupling.mode = parse_coupling_mode(*f.coupling);
  if (f.allow_out_of_window) cfg.scan.allow_out_of_window = true;
  if (f.report_excitation) cfg.scan.report_excitation = true;
  if (f.output) cfg.output.path = *f.output;
  if (f.precision) cfg.output.precision = *f.precision;
  return cfg;
}

double detuning(const Flags& f, const RunConfig& cfg) {
  const double mhz = f.delta_mhz.value_or(cfg.coupling.delta_ref_mhz);
  if (!(mhz < 0.0)) throw DomainError("--delta-mhz: red detuning required (delta < 0)");
  return mhz_to_rad_s(mhz);
}

// Writes to output.path when set, otherwise to `out`.
template <class Body>
void emit(const RunConfig& cfg, std::ostream& out, Body&& body) {
  if (cfg.output.path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(cfg.output.path);
  if (!file) throw ConfigError("output.path", "cannot open " + cfg.output.path);
  body(file);
}

void cmd_constants(const Flags& f, std::ostream& out) {
  const RunConfig cfg = load(f);
  check_run_config(cfg);
  const PhysicalParams p = physical_params(cfg);
  const CavityConfig cav = cavity_config(cfg, p);
  const int digits = cfg.output.precision;
  const auto kv = [&](const char* key, double v) { out << key << '=' << sci(v, digits) << '\n'; };

  kv("omega_a_rad_s", p.omega_a);
  kv("gamma_a_rad_s", p.gamma_a);
  kv("gamma_mol_rad_s", p.gamma_mol);
  kv("gamma_mol_mhz", rad_s_to_mhz(p.gamma_mol));
  kv("mass_atom_g", p.mass_atom);
  kv("mu_g", p.mu);
  kv("c3_erg_cm3", p.c3);
  kv("trap_depth_erg", p.trap_depth);
  kv("trap_depth_mk", p.trap_depth / phys::k_b / phys::mk);
  kv("two_v0_over_h_mhz", 2.0 * p.trap_depth / phys::h / phys::mhz);
  kv("g0", g0_constant());

  const auto geom = mode_geometry(cav, p);
  kv("waist_um", geom.waist / phys::um);
  kv("mode_volume_cm3", geom.volume);
  kv("field_per_photon", field_per_photon(cav.omega_c, geom.volume));
  kv("dipole_atomic_esu_cm", atomic_dipole(p));
  kv("dipole_molecular_esu_cm", molecular_dipole(p));
  kv("omega_single_mhz", rad_s_to_mhz(single_rabi(cav, p)));

  out << "coupling_mode=" << to_string(cav.coupling_mode) << '\n';
  kv("delta_ref_mhz", cfg.coupling.delta_ref_mhz);
  const auto cp = collective_rabi(cav.delta_ref, cav, p);
  kv("n_pairs", cp.n_pairs);
  kv("omega_tilde_mhz", rad_s_to_mhz(cp.omega_tilde));
  kv("n_pairs_microscopic", pair_count(cav.delta_ref, cav, p));
}

void cmd_times(const Flags& f, std::ostream& out) {
  const RunConfig cfg = load(f);
  check_run_config(cfg);
  const PhysicalParams p = physical_params(cfg);
  const CavityConfig cav = cavity_config(cfg, p);
  const double d = detuning(f, cfg);
  const auto cp = collective_rabi(d, cav, p);
  const auto t = collision_times(d, cp.omega_tilde, p);
  const int n = cfg.output.precision;
  write_row(out, {"delta_mhz", "r_condon_ang", "r_escape_ang", "t0_s", "f", "tc_s", "te_s", "phase_over_pi"});
  write_row(out, {sci(rad_s_to_mhz(d), n), sci(t.geometry.r_condon / phys::angstrom, n),
                  sci(t.geometry.r_escape / phys::angstrom, n), sci(t.t_total, n), sci(t.frac_resonant, n),
                  sci(t.t_resonant, n), sci(t.t_escape_region, n),
                  sci(resonant_phase(t, cp.omega_tilde) / phys::pi, n)});
}

void cmd_dynamics(const Flags& f, std::ostream& out) {
  const RunConfig cfg = load(f);
  check_run_config(cfg);
  const PhysicalParams p = physical_params(cfg);
  const CavityConfig cav = cavity_config(cfg, p);
  const double d = detuning(f, cfg);
  const double ot = collective_rabi(d, cav, p).omega_tilde;
  const double gamma = f.gamma_mhz ? mhz_to_rad_s(*f.gamma_mhz) : p.gamma_mol;
  if (!(gamma >= 0.0)) throw DomainError("--gamma-mhz must be non-negative");

  const double t_end = f.t_max_ns ? *f.t_max_ns * 1e-9 : (gamma > 0.0 ? 5.0 / gamma : 10.0 * phys::two_pi / ot);
  const double dt = f.dt_ps ? *f.dt_ps * 1e-12 : max_stable_step(ot, gamma) / 10.0;
  IntegrationOptions opts;
  opts.allow_large_step = f.allow_large_step;
  const auto steps = static_cast<long long>(std::ceil(t_end / dt));
  opts.sample_every = f.stride > 0 ? f.stride : static_cast<int>(std::max<long long>(1, steps / 1000));
  const auto samples = integrate_master(ReducedState::excited(), ot, gamma, t_end, dt, opts);

  emit(cfg, out, [&](std::ostream& os) {
    const int n = cfg.output.precision;
    write_row(os, {"t_s", "p_e_numeric", "p_e_analytic", "p_g", "p_v", "abs_err"});
    double max_err = 0;
    double max_trace = 0;
    for (const auto& s : samples) {
      const double exact = p_omega_analytic(s.t, ot, gamma);
      const double err = std::abs(s.state.p_e - exact);
      max_err = std::max(max_err, err);
      max_trace = std::max(max_trace, std::abs(s.state.trace() - 1.0));
      write_row(os, {sci(s.t, n), sci(s.state.p_e, n), sci(exact, n), sci(s.state.p_g, n), sci(s.state.p_v, n),
                     sci(err, n)});
    }
    os << "# max_abs_err=" << sci(max_err, n) << " max_trace_dev=" << sci(max_trace, n) << '\n';
  });
}

void cmd_scan(const Flags& f, std::ostream& out) {
  const RunConfig cfg = load(f);
  check_run_config(cfg);
  const PhysicalParams p = physical_params(cfg);
  ScanConfig scan = scan_config(cfg);
  scan.jobs = f.jobs;
  const auto points = scan_detuning(scan, cavity_config(cfg, p), p);

  emit(cfg, out, [&](std::ostream& os) {
    const int n = cfg.output.precision;
    std::vector<std::string> header = {"delta_mhz", "omega_tilde_mhz", "n_pairs",  "rc_ang",
                                       "re_ang",    "t0_s",            "f",        "tc_s",
                                       "te_s",      "phase_over_pi",   "loss_cavity", "loss_free"};
    if (scan.report_excitation) header.emplace_back("p_excite");
    if (scan.allow_out_of_window) header.emplace_back("in_window");
    write_row(os, header);
    for (const auto& pt : points) {
      const auto& t = pt.times;
      std::vector<std::string> row = {
          sci(rad_s_to_mhz(pt.delta), n), sci(rad_s_to_mhz(pt.omega_tilde), n), sci(pt.n_pairs, n),
          sci(t.geometry.r_condon / phys::angstrom, n), sci(t.geometry.r_escape / phys::angstrom, n),
          sci(t.t_total, n), sci(t.frac_resonant, n), sci(t.t_resonant, n), sci(t.t_escape_region, n),
          sci(pt.phase / phys::pi, n), sci(pt.loss_cavity, n), sci(pt.loss_free, n)};
      if (scan.report_excitation) row.push_back(sci(pt.p_excite.value_or(0.0), n));
      if (scan.allow_out_of_window) row.emplace_back(pt.in_window ? "1" : "0");
      write_row(os, row);
    }
  });
}

int cmd_validate(const Flags& f, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load(f);
  const auto results = run_validation(cfg);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    if (!r.passed) {
      ++failed;
      err << "invariant failed: " << r.name << '\n';
    }
  }
  out << (failed ? "FAILED " : "OK ") << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collective Rabi oscillations in cold collisions inside a high-Q cavity"};
  app.require_subcommand(1);
  Flags f;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--coupling", f.coupling, "anchored | microscopic");
    sub->add_option("--precision", f.precision, "significant digits in output");
  };

  auto* constants = app.add_subcommand("constants", "print resolved parameters as key=value lines");
  common(constants);

  auto* times = app.add_subcommand("times", "collision times at one detuning (CSV)");
  common(times);
  times->add_option("--delta-mhz", f.delta_mhz, "detuning delta/2pi in MHz (< 0)");

  auto* dynamics = app.add_subcommand("dynamics", "master-equation time series vs closed form (CSV)");
  common(dynamics);
  dynamics->add_option("--delta-mhz", f.delta_mhz, "detuning delta/2pi in MHz (< 0)");
  dynamics->add_option("--t-max-ns", f.t_max_ns, "end time in ns (default 5/Gamma)");
  dynamics->add_option("--dt-ps", f.dt_ps, "step in ps (default a tenth of the stability bound)");
  dynamics->add_option("--gamma-mhz", f.gamma_mhz, "override the molecular decay rate Gamma/2pi in MHz");
  dynamics->add_option("--stride", f.stride, "write every n-th step (default: about 1000 rows)");
  dynamics->add_flag("--allow-large-step", f.allow_large_step, "skip the step-size bound");
  dynamics->add_option("--output", f.output, "output file (default stdout)");

  auto* scan = app.add_subcommand("scan", "trap-loss spectra L_c and L_o vs detuning (CSV)");
  common(scan);
  scan->add_option("--points", f.points, "number of detunings");
  scan->add_option("--from-mhz", f.from_mhz, "lowest detuning");
  scan->add_option("--to-mhz", f.to_mhz, "highest detuning");
  scan->add_option("--p-model", f.p_model, "approx | analytic");
  scan->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--allow-out-of-window", f.allow_out_of_window, "permit |delta|/2pi outside [350, 1000] MHz");
  scan->add_flag("--report-excitation", f.report_excitation, "append the Landau-Zener p_excite column");
  scan->add_option("--output", f.output, "output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "run the invariant self-checks");
  common(validate);
  validate->add_option("--p-model", f.p_model, "approx | analytic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*constants) cmd_constants(f, out);
    if (*times) cmd_times(f, out);
    if (*dynamics) cmd_dynamics(f, out);
    if (*scan) cmd_scan(f, out);
    if (*validate) return cmd_validate(f, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace cavcoll
