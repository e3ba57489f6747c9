#include "cavcoll/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>

#include "cavcoll/cavity.hpp"
#include "cavcoll/dynamics.hpp"
#include "cavcoll/errors.hpp"
#include "cavcoll/kinematics.hpp"
#include "cavcoll/potential.hpp"
#include "cavcoll/traploss.hpp"

namespace cavcoll {

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// In-fall integral from the regularized incomplete beta function:
// int_r^1 u^{3/2} (1 - u^3)^{-1/2} du = B(5/6, 1/2) / 3 * (1 - I_{r^3}(5/6, 1/2)).
double infall_by_beta(double r) {
  const double a = 5.0 / 6.0;
  return boost::math::beta(a, 0.5) / 3.0 * boost::math::ibetac(a, 0.5, r * r * r);
}

class Runner {
 public:
  void check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult res{name, false, {}};
    try {
      bool ok = true;
      res.detail = body(ok);
      res.passed = ok;
    } catch (const std::exception& e) {
      res.detail = std::string("error: ") + e.what();
    }
    results_.push_back(std::move(res));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_validation(const RunConfig& cfg, const ValidationOptions& opts) {
  Runner run;
  std::mt19937_64 rng(20010601);

  PhysicalParams params = convert_params_unchecked(cfg.species);
  run.check("constants.resolve", [&](bool& ok) {
    check_run_config(cfg);
    params = physical_params(cfg);
    ok = params.gamma_mol == 2.0 * params.gamma_a && params.mu == 0.5 * params.mass_atom;
    return "omega_a=" + num(params.omega_a) + " rad/s";
  });

  run.check("constants.round_trip", [&](bool& ok) {
    const auto back = to_human_units(params);
    const auto same = [](const std::optional<double>& a, const std::optional<double>& b) {
      return a && b && rel_diff(*a, *b) < 1e-12;
    };
    ok = same(back.wavelength_nm, cfg.species.wavelength_nm) && same(back.gamma_a_mhz, cfg.species.gamma_a_mhz) &&
         same(back.mass_amu, cfg.species.mass_amu) && same(back.c3_erg_ang3, cfg.species.c3_erg_ang3);
    return std::string(ok ? "12 significant digits" : "mismatch");
  });

  const CavityConfig cavity = cavity_config(cfg, params);
  const ScanConfig scan = scan_config(cfg);
  std::uniform_real_distribution<double> window(mhz_to_rad_s(-1000.0), mhz_to_rad_s(-350.0));

  run.check("potential.condon_identity", [&](bool& ok) {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const double d = window(rng);
      worst = std::max(worst, rel_diff(u_dd(condon_radius(d, params), params), phys::hbar * d));
    }
    ok = worst <= 1e-12;
    return "max rel err " + num(worst);
  });

  run.check("potential.escape_identity", [&](bool& ok) {
    double worst = 0;
    std::uniform_real_distribution<double> coupling(mhz_to_rad_s(1.0), mhz_to_rad_s(300.0));
    for (int i = 0; i < 1000; ++i) {
      const double d = window(rng);
      const double ot = coupling(rng);
      const auto g = escape_radius(d, ot, params);
      const double shift = (u_dd(g.r_escape, params) - u_dd(g.r_condon, params)) / phys::hbar;
      worst = std::max(worst, rel_diff(shift, -ot));
    }
    ok = worst <= 1e-12;
    return "max rel err " + num(worst);
  });

  run.check("kinematics.g0", [&](bool& ok) {
    const double g0 = g0_constant();
    const double exact = infall_by_beta(0.0);
    ok = std::abs(g0 - 0.746) <= 1e-3 && std::abs(g0 - exact) <= 1e-12;
    return "g0=" + num(g0) + " beta-function route=" + num(exact);
  });

  run.check("kinematics.f_normalization", [&](bool& ok) {
    const double g0 = opts.g0_override.value_or(g0_constant());
    const double f0 = infall_integral(0.0).value / g0;
    ok = std::abs(f0 - 1.0) <= 1e-9;
    return "f(r=0)=" + num(f0);
  });

  run.check("kinematics.f_independent_route", [&](bool& ok) {
    double worst = 0;
    for (int i = 0; i <= 20; ++i) {
      const double r = i / 20.0;
      worst = std::max(worst, std::abs(infall_integral(r).value - infall_by_beta(r)));
    }
    ok = worst <= 1e-8;
    return "max abs err " + num(worst);
  });

  run.check("kinematics.monotonic", [&](bool& ok) {
    const auto grid = scan_grid(scan);
    for (size_t i = 1; i < grid.size(); ++i)
      ok = ok && total_time(grid[i], params) > total_time(grid[i - 1], params);
    const double d = mhz_to_rad_s(-500.0);
    double prev = -1;
    for (int k = 1; k <= 50; ++k) {
      const double f = fraction_f(d, mhz_to_rad_s(5.0 * k));
      ok = ok && f > prev;
      prev = f;
    }
    return std::string("t0 decreasing in |delta|, f increasing in Omega~");
  });

  run.check("kinematics.phase_audit", [&](bool& ok) {
    double worst = 0;
    int over = 0;
    for (double d : scan_grid(scan)) {
      const auto cp = collective_rabi(d, cavity, params);
      const double phase = resonant_phase(collision_times(d, cp.omega_tilde, params), cp.omega_tilde);
      worst = std::max(worst, phase);
      over += within_single_cycle(phase) ? 0 : 1;
    }
    ok = true;  // reported, not enforced
    return "max phase " + num(worst / phys::pi) + " pi; points beyond 2 pi: " + std::to_string(over);
  });

  run.check("cavity.coupling_identity", [&](bool& ok) {
    CavityConfig micro = cavity;
    micro.coupling_mode = CouplingMode::microscopic;
    CavityConfig anch = cavity;
    anch.coupling_mode = CouplingMode::anchored;
    double worst_micro = 0;
    double worst_anch = 0;
    const double ref = anch.omega_tilde_ref * std::abs(anch.delta_ref);
    for (double d : scan_grid(scan)) {
      const auto m = collective_rabi(d, micro, params);
      worst_micro = std::max(worst_micro, rel_diff(m.omega_tilde * m.omega_tilde,
                                                   m.n_pairs * m.omega_single * m.omega_single));
      const auto a = collective_rabi(d, anch, params);
      worst_anch = std::max(worst_anch, rel_diff(a.omega_tilde * std::abs(d), ref));
    }
    ok = worst_micro <= 1e-12 && worst_anch <= 1e-12;
    return "microscopic " + num(worst_micro) + ", anchored " + num(worst_anch);
  });

  run.check("cavity.landau_zener_monotone", [&](bool& ok) {
    const double d = mhz_to_rad_s(-500.0);
    double prev = -1;
    for (int k = 0; k <= 40; ++k) {
      const double p = landau_zener(d, mhz_to_rad_s(0.01 * k), 12.0, params);
      ok = ok && p >= prev && p >= 0.0 && p < 1.0;
      prev = p;
    }
    double prev_v = 2;
    for (int k = 1; k <= 40; ++k) {
      const double p = landau_zener(d, mhz_to_rad_s(0.2), 2.0 * k, params);
      ok = ok && p <= prev_v;
      prev_v = p;
    }
    return std::string("increasing in Omega~, decreasing in v_inf");
  });

  run.check("dynamics.analytic_vs_numeric", [&](bool& ok) {
    const double gamma = params.gamma_mol;
    if (!(gamma > 0.0)) throw DomainError("dynamics check needs a positive decay rate");
    double worst = 0;
    double trace = 0;
    double leak = 0;
    for (double ratio : {0.1, 0.24, 2.0, 16.7}) {
      const double ot = ratio * gamma;
      const double t_end = 5.0 / gamma;
      const auto samples = integrate_master(ReducedState::excited(), ot, gamma, t_end,
                                            max_stable_step(ot, gamma) / 10.0);
      for (const auto& s : samples) {
        worst = std::max(worst, std::abs(s.state.p_e - p_omega_analytic(s.t, ot, gamma)));
        trace = std::max(trace, std::abs(s.state.trace() - 1.0));
        leak = std::max({leak, std::abs(s.state.c_ev), std::abs(s.state.c_gv)});
      }
    }
    ok = worst <= 1e-8 && trace <= 1e-10 && leak <= 1e-12;
    return "max |p_e err| " + num(worst) + ", trace dev " + num(trace) + ", |c_ev|,|c_gv| " + num(leak);
  });

  run.check("dynamics.critical_continuity", [&](bool& ok) {
    const double gamma = params.gamma_mol;
    if (!(gamma > 0.0)) throw DomainError("continuity check needs a positive decay rate");
    double worst = 0;
    for (double t : {0.5 / gamma, 2.0 / gamma, 5.0 / gamma}) {
      const double edge = kCriticalBand * gamma;
      for (double side : {-1.0, 1.0}) {
        const double centre = 0.25 * gamma + side * edge;
        const double inside = p_omega_analytic(t, centre - side * 1e-6 * edge, gamma);
        const double outside = p_omega_analytic(t, centre + side * 1e-6 * edge, gamma);
        worst = std::max(worst, std::abs(inside - outside));
      }
    }
    ok = worst <= 1e-9;
    return "max jump " + num(worst);
  });

  const double gamma = params.gamma_mol;

  run.check("traploss.series_vs_closed_form", [&](bool& ok) {
    double worst = 0;
    for (double d : scan_grid(scan)) {
      const auto cp = collective_rabi(d, cavity, params);
      const auto times = collision_times(d, cp.omega_tilde, params);
      for (PModel m : {PModel::approx, PModel::analytic}) {
        worst = std::max(worst, std::abs(loss_series(times, cp.omega_tilde, gamma, m).value -
                                         loss_closed_form(times, cp.omega_tilde, gamma, m)));
      }
    }
    ok = worst <= 1e-12;
    return "max abs diff " + num(worst);
  });

  run.check("traploss.no_cavity_identity", [&](bool& ok) {
    double worst = 0;
    for (double d : scan_grid(scan)) {
      const auto cp = collective_rabi(d, cavity, params);
      const auto times = collision_times(d, cp.omega_tilde, params);
      worst = std::max(worst, std::abs(loss_closed_form(times, cp.omega_tilde, gamma, PModel::pure_decay) -
                                       loss_no_cavity(times, gamma)));
    }
    ok = worst <= 1e-12;
    return "max abs diff " + num(worst);
  });

  run.check("traploss.bounds_and_envelope", [&](bool& ok) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
      CollisionTimes t;
      t.t_total = (0.1 + 30.0 * unit(rng)) / gamma;
      t.frac_resonant = unit(rng);
      t.t_resonant = t.t_total * t.frac_resonant;
      t.t_escape_region = t.t_total - t.t_resonant;
      const double ot = gamma * (0.3 + 50.0 * unit(rng));
      const PModel m = i % 2 ? PModel::approx : PModel::analytic;
      const double lc = loss_closed_form(t, ot, gamma, m);
      const double lo = loss_no_cavity(t, gamma);
      const double env = survival(m, t.t_resonant, ot, gamma);
      if (!(lc >= 0.0 && lc <= 1.0 + 1e-15 && lo >= 0.0 && lo <= 1.0 + 1e-15 && lc <= env * (1.0 + 1e-12)))
        ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " of 10000 random tuples out of bounds";
  });

  run.check("traploss.oscillation_minima", [&](bool& ok) {
    const auto points = scan_detuning(scan, cavity, params);
    int minima = 0;
    for (size_t i = 1; i + 1 < points.size(); ++i)
      if (points[i].loss_cavity < points[i - 1].loss_cavity && points[i].loss_cavity < points[i + 1].loss_cavity)
        ++minima;
    ok = minima >= 2;
    return std::to_string(minima) + " interior minima of L_c";
  });

  return run.take();
}

}  // namespace cavcoll
