// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cavcoll/cavity.hpp"
#include "cavcoll/cli.hpp"
#include "cavcoll/dynamics.hpp"
#include "cavcoll/errors.hpp"
#include "cavcoll/kinematics.hpp"
#include "cavcoll/traploss.hpp"
#include "oracles.hpp"

using namespace cavcoll;

namespace {

struct Verdict {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string cli(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "cavcoll");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code) *code = rc;
  return out.str();
}

// Column `name` of the single data row printed by `times`.
double times_column(const std::string& csv, const std::string& name) {
  std::istringstream is(csv);
  std::string header;
  std::string row;
  std::getline(is, header);
  std::getline(is, row);
  std::istringstream hs(header);
  std::istringstream rs(row);
  for (std::string h, v; std::getline(hs, h, ',') && std::getline(rs, v, ',');)
    if (h == name) return std::stod(v);
  return std::nan("");
}

double kv_value(const std::string& report, const std::string& key) {
  std::istringstream is(report);
  for (std::string l; std::getline(is, l);)
    if (l.rfind(key + "=", 0) == 0) return std::stod(l.substr(key.size() + 1));
  return std::nan("");
}

bool within(double v, double target, double rel) { return std::abs(v - target) <= rel * std::abs(target); }

template <class E, class F>
bool throws(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

const PhysicalParams& rb() {
  static const PhysicalParams p = resolve_params(rb85_defaults());
  return p;
}

const std::string& times350() {
  static const std::string out = cli({"times", "--delta-mhz", "-350"});
  return out;
}

Verdict condon_radius_check() {
  const double rc = times_column(times350(), "r_condon_ang");
  return {within(rc, 366.0, 0.02), fmt("r_condon = %.2f A (target 366 +- 2%%)", rc)};
}

Verdict total_time_check() {
  const double t0 = times_column(times350(), "t0_s");
  return {within(t0, 1.07e-8, 0.02), fmt("t0 = %.4e s (target 1.07e-8 +- 2%%)", t0)};
}

Verdict g0_check() {
  const double g0 = g0_constant();
  const double simpson = oracle::simpson_infall(0.0);
  const double r = oracle::r_ratio(oracle::rad(-350.0), oracle::rad(200.0));
  const double dev = std::max(std::abs(simpson - g0), std::abs(oracle::simpson_infall(r) - infall_integral(r).value));
  const bool ok = std::abs(g0 - 0.746) <= 0.001 && dev <= 1e-8;
  return {ok, fmt("g0 = %.9f", g0) + fmt(", |simpson - quadrature| = %.2e", dev)};
}

Verdict fraction_check() {
  const double f = times_column(times350(), "f");
  const double t0 = times_column(times350(), "t0_s");
  const double tc = times_column(times350(), "tc_s");
  const double te = times_column(times350(), "te_s");
  const bool ok = std::abs(f - 0.55) <= 0.01 && std::abs(tc / t0 - 0.55) <= 0.01 && std::abs(te / t0 - 0.45) <= 0.01;
  return {ok, fmt("f = %.6f", f) + fmt(", te/t0 = %.6f", te / t0)};
}

Verdict phase_check() {
  const double ph = times_column(times350(), "phase_over_pi");
  return {within(ph, 2.35, 0.02), fmt("Omega~ tc = %.4f pi (target 2.35 pi +- 2%%)", ph)};
}

Verdict geometry_check() {
  const std::string out = cli({"constants"});
  const double om = kv_value(out, "omega_single_mhz");
  const double w = kv_value(out, "waist_um");
  const double v = kv_value(out, "mode_volume_cm3");
  const bool ok = within(om, 0.42, 0.05) && within(w, 36.0, 0.03) && within(v, 4.0e-5, 0.06);
  return {ok, fmt("Omega/2pi = %.4f MHz", om) + fmt(", w0 = %.3f um", w) + fmt(", V = %.4e cm^3", v)};
}

Verdict pair_count_check() {
  const double n = pair_count(mhz_to_rad_s(-350.0), CavityConfig{}, rb());
  const double ratio = n / 2.3e5;
  return {ratio <= 1.5 && ratio >= 1 / 1.5, fmt("N = %.4e (target 2.3e5 within x1.5)", n)};
}

Verdict anchored_check() {
  const double ot = rad_s_to_mhz(collective_rabi(mhz_to_rad_s(-1000.0), CavityConfig{}, rb()).omega_tilde);
  return {within(ot, 70.0, 0.01), fmt("Omega~/2pi(-1000 MHz) = %.4f MHz", ot)};
}

double master_error(double ot, double gamma, double t_end, double dt, bool allow_large, double* trace_dev,
                    double* coherence) {
  IntegrationOptions opts;
  opts.allow_large_step = allow_large;
  double worst = 0;
  for (const auto& s : integrate_master(ReducedState::excited(), ot, gamma, t_end, dt, opts)) {
    worst = std::max(worst, std::abs(s.state.p_e - oracle::p_omega(s.t, ot, gamma)));
    if (trace_dev) *trace_dev = std::max(*trace_dev, std::abs(s.state.trace() - 1.0));
    if (coherence) *coherence = std::max({*coherence, std::abs(s.state.c_ev), std::abs(s.state.c_gv)});
  }
  return worst;
}

Verdict master_equation_check() {
  std::mt19937_64 rng(20010601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double err = 0;
  double trace_dev = 0;
  double coherence = 0;
  for (int i = 0; i < 20; ++i) {
    const double gamma = oracle::rad(6.0 + 18.0 * unit(rng));
    // Omega~ / Gamma log-uniform over [0.05, 20]: both damping regimes
    const double ot = gamma * 0.05 * std::pow(400.0, unit(rng));
    const double dt = max_stable_step(ot, gamma) / 10;
    err = std::max(err, master_error(ot, gamma, 5 / gamma, dt, false, &trace_dev, &coherence));
  }
  const double gamma = oracle::rad(12.0);
  const double ot = 1.3 * gamma;
  const double t_end = 5 / gamma;
  const double h = t_end / 400;
  const double e1 = master_error(ot, gamma, t_end, h, true, nullptr, nullptr);
  const double e2 = master_error(ot, gamma, t_end, h / 2, true, nullptr, nullptr);
  const double e3 = master_error(ot, gamma, t_end, h / 4, true, nullptr, nullptr);
  const double o1 = std::log2(e1 / e2);
  const double o2 = std::log2(e2 / e3);
  const bool ok = err <= 1e-8 && trace_dev <= 1e-10 && coherence <= 1e-12 && std::abs(o1 - 4.0) <= 0.2 &&
                  std::abs(o2 - 4.0) <= 0.2;
  return {ok, fmt("max err %.2e", err) + fmt(", trace dev %.2e", trace_dev) + fmt(", |c_EV|,|c_GV| %.1e", coherence) +
                  fmt(", order %.3f", o1) + fmt(" / %.3f", o2)};
}

CollisionTimes make_times(double tc, double te, double tp) {
  CollisionTimes t;
  t.t_resonant = tc;
  t.t_escape_region = te;
  t.t_prime = tp;
  t.t_total = tc + te;
  t.frac_resonant = tc / (tc + te);
  return t;
}

const std::vector<LossPoint>& default_scan(PModel model) {
  static std::vector<LossPoint> approx;
  static std::vector<LossPoint> analytic;
  auto& cache = model == PModel::approx ? approx : analytic;
  if (cache.empty()) {
    ScanConfig scan;
    scan.p_model = model;
    cache = scan_detuning(scan, CavityConfig{}, rb());
  }
  return cache;
}

Verdict series_check() {
  const double gamma = rb().gamma_mol;
  double worst = 0;
  for (PModel m : {PModel::approx, PModel::analytic})
    for (const auto& pt : default_scan(m))
      worst = std::max(worst, std::abs(loss_series(pt.times, pt.omega_tilde, gamma, m).value -
                                       loss_closed_form(pt.times, pt.omega_tilde, gamma, m)));
  const double scan_worst = worst;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto t = make_times(8e-9 * unit(rng), 8e-9 * (0.02 + unit(rng)), 3e-9 * unit(rng));
    const double ot = mhz_to_rad_s(20 + 300 * unit(rng));
    const PModel m = i % 2 ? PModel::approx : PModel::analytic;
    worst = std::max(worst, std::abs(loss_series(t, ot, gamma, m).value - loss_closed_form(t, ot, gamma, m)));
  }
  return {worst <= 1e-12, fmt("max |series - closed| = %.2e", worst) + fmt(" (scan %.2e)", scan_worst)};
}

Verdict no_cavity_check() {
  const double gamma = rb().gamma_mol;
  double worst = 0;
  for (const auto& pt : default_scan(PModel::approx))
    worst = std::max(worst, std::abs(loss_closed_form(pt.times, pt.omega_tilde, gamma, PModel::pure_decay) -
                                     std::sinh(gamma * pt.times.t_escape_region) / std::sinh(gamma * pt.times.t_total)));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto t = make_times(20e-9 * unit(rng), 20e-9 * (0.01 + unit(rng)), 0.0);
    worst = std::max(worst, std::abs(loss_closed_form(t, 1.0, gamma, PModel::pure_decay) -
                                     oracle::loss_free(t.t_resonant, t.t_escape_region, gamma)));
  }
  return {worst <= 1e-12, fmt("max |closed(pure decay) - L_o| = %.2e", worst)};
}

Verdict morphology_check() {
  const auto& pts = default_scan(PModel::approx);
  int minima = 0;
  int aligned = 0;
  int maxima = 0;
  bool ordering = true;
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    const double l = pts[i].loss_cavity;
    if (l < pts[i - 1].loss_cavity && l < pts[i + 1].loss_cavity) {
      ++minima;
      ordering = ordering && l < pts[i].loss_free;
      // an odd multiple of pi/2 inside the neighbouring grid steps
      const double lo = std::min(pts[i - 1].phase, pts[i + 1].phase) / (oracle::pi / 2);
      const double hi = std::max(pts[i - 1].phase, pts[i + 1].phase) / (oracle::pi / 2);
      for (int k = 1; k <= static_cast<int>(hi) + 1; k += 2)
        if (k >= lo && k <= hi) {
          ++aligned;
          break;
        }
    } else if (l > pts[i - 1].loss_cavity && l > pts[i + 1].loss_cavity) {
      ++maxima;
      ordering = ordering && l > pts[i].loss_free;
    }
  }
  const auto gap = [](double mhz) {
    const auto pt = loss_point(mhz_to_rad_s(mhz), ScanConfig{}, CavityConfig{}, rb());
    return std::abs(pt.loss_cavity - pt.loss_free);
  };
  const double far = gap(-950.0);
  const double near = gap(-500.0);
  const bool a = minima >= 2 && aligned == minima;
  const bool c = far < near;
  std::string detail = std::to_string(minima) + " minima (" + std::to_string(aligned) + " aligned), " +
                       std::to_string(maxima) + " maxima, ordering " + (ordering ? "ok" : "violated") +
                       fmt(", |Lc-Lo| at -950 MHz = %.4f", far) + fmt(" vs -500 MHz = %.4f", near);
  if (!c) detail += " (convergence toward L_o at large |delta| not reproduced)";
  return {a && ordering && c, detail};
}

Verdict degenerate_check() {
  const auto& p = rb();
  const double ot = mhz_to_rad_s(200.0);
  const bool diverges =
      throws<DivergenceError>([&] { loss_series(make_times(oracle::pi / ot, 4e-9, 0.0), ot, 0.0, PModel::approx); });

  bool rejects_blue = true;
  for (double mhz : {0.0, 50.0}) {
    const double d = mhz_to_rad_s(mhz);
    rejects_blue = rejects_blue && throws<DomainError>([&] { condon_radius(d, p); }) &&
                   throws<DomainError>([&] { escape_radius(d, ot, p); }) &&
                   throws<DomainError>([&] { total_time(d, p); }) &&
                   throws<DomainError>([&] { fraction_f(d, ot); }) &&
                   throws<DomainError>([&] { collision_times(d, ot, p); }) &&
                   throws<DomainError>([&] { pair_count(d, CavityConfig{}, p); }) &&
                   throws<DomainError>([&] { collective_rabi(d, CavityConfig{}, p); }) &&
                   throws<DomainError>([&] { landau_zener(d, ot, 12.0, p); }) &&
                   throws<DomainError>([&] { loss_point(d, ScanConfig{}, CavityConfig{}, p); });
    ScanConfig scan;
    scan.to_delta = d;
    scan.allow_out_of_window = true;
    rejects_blue = rejects_blue && throws<ConfigError>([&] { scan_detuning(scan, CavityConfig{}, p); });
    const std::string arg = fmt("%g", mhz);
    for (const char* cmd : {"times", "dynamics"}) {
      int code = 0;
      cli({cmd, "--delta-mhz", arg}, &code);
      rejects_blue = rejects_blue && code == 2;
    }
    int code = 0;
    cli({"scan", "--to-mhz", arg, "--allow-out-of-window"}, &code);
    rejects_blue = rejects_blue && code == 2;
  }

  ScanConfig wide;
  wide.from_delta = mhz_to_rad_s(-1200.0);
  wide.points = 8;
  bool gated = throws<ConfigError>([&] { scan_detuning(wide, CavityConfig{}, p); });
  wide.allow_out_of_window = true;
  gated = gated && !throws<std::exception>([&] { scan_detuning(wide, CavityConfig{}, p); });
  int without = 0;
  int with = 0;
  cli({"scan", "--from-mhz", "-1200", "--points", "8"}, &without);
  cli({"scan", "--from-mhz", "-1200", "--points", "8", "--allow-out-of-window"}, &with);
  gated = gated && without == 2 && with == 0;

  std::string detail = std::string("divergence ") + (diverges ? "raised" : "missing") + ", delta >= 0 " +
                       (rejects_blue ? "rejected" : "accepted somewhere") + ", window override " +
                       (gated ? "enforced" : "not enforced");
  return {diverges && rejects_blue && gated, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"condon radius", condon_radius_check},
      {"total collision time", total_time_check},
      {"g0 and quadrature oracle", g0_check},
      {"resonant fraction", fraction_check},
      {"Rabi phase at -350 MHz", phase_check},
      {"single-pair Rabi frequency and mode geometry", geometry_check},
      {"pair count", pair_count_check},
      {"anchored coupling at -1000 MHz", anchored_check},
      {"master-equation fidelity", master_equation_check},
      {"series and closed form", series_check},
      {"no-cavity identity", no_cavity_check},
      {"loss spectrum morphology", morphology_check},
      {"degenerate inputs", degenerate_check},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.passed;
    std::printf("%s %2zu %s: %s\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
