#include "cavcoll/traploss.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "cavcoll/dynamics.hpp"
#include "cavcoll/errors.hpp"

namespace cavcoll {

double survival(PModel model, double t, double omega_tilde, double gamma) {
  switch (model) {
    case PModel::approx: return p_omega_approx(t, omega_tilde, gamma);
    case PModel::analytic: return p_omega_analytic(t, omega_tilde, gamma);
    case PModel::pure_decay: return std::exp(-gamma * t);
  }
  return 0.0;
}

double single_passage_loss(const CollisionTimes& times, double omega_tilde, double gamma, PModel model) {
  return survival(model, times.t_resonant, omega_tilde, gamma) * std::exp(-times.t_prime * gamma) *
         -std::expm1(-2.0 * times.t_escape_region * gamma);
}

SeriesResult loss_series(const CollisionTimes& times, double omega_tilde, double gamma, PModel model,
                         int max_terms) {
  const double ratio = std::exp(-2.0 * (times.t_prime + times.t_escape_region) * gamma) *
                       survival(model, 2.0 * times.t_resonant, omega_tilde, gamma);
  if (ratio >= 1.0)
    throw DivergenceError("lossless multiple passage: Gamma = 0 with full revival (ratio >= 1)");

  // Neumaier-compensated partial sums.
  SeriesResult res;
  double term = single_passage_loss(times, omega_tilde, gamma, model);
  double sum = 0.0;
  double carry = 0.0;
  while (res.terms_used < max_terms) {
    const double next = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
    sum = next;
    ++res.terms_used;
    term *= ratio;
    if (term == 0.0 || std::abs(term) < 1e-15 * std::abs(sum)) break;
  }
  res.value = sum + carry;
  return res;
}

double loss_closed_form(const CollisionTimes& times, double omega_tilde, double gamma, PModel model) {
  if (!(gamma > 0.0)) throw DomainError("closed-form loss needs a positive decay rate");
  const double x = (times.t_prime + times.t_escape_region) * gamma;
  const double revival = survival(model, 2.0 * times.t_resonant, omega_tilde, gamma);
  return survival(model, times.t_resonant, omega_tilde, gamma) *
         std::sinh(gamma * times.t_escape_region) / (0.5 * (std::exp(x) - revival * std::exp(-x)));
}

double loss_no_cavity(const CollisionTimes& times, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("no-cavity loss needs a positive decay rate");
  return std::sinh(times.t_escape_region * gamma) /
         std::sinh((times.t_resonant + times.t_escape_region) * gamma);
}

bool in_validity_window(double delta) {
  const double mhz = std::abs(rad_s_to_mhz(delta));
  constexpr double slack = 1e-9;
  return mhz >= 350.0 * (1.0 - slack) && mhz <= 1000.0 * (1.0 + slack);
}

LossPoint loss_point(double delta, const ScanConfig& scan, const CavityConfig& cavity,
                     const PhysicalParams& params) {
  const CouplingPoint coupling = collective_rabi(delta, cavity, params);
  const double gamma = params.gamma_mol;
  LossPoint pt;
  pt.delta = delta;
  pt.omega_tilde = coupling.omega_tilde;
  pt.n_pairs = coupling.n_pairs;
  pt.times = collision_times(delta, coupling.omega_tilde, params);
  pt.phase = resonant_phase(pt.times, coupling.omega_tilde);
  pt.loss_cavity = loss_closed_form(pt.times, coupling.omega_tilde, gamma, scan.p_model);
  pt.loss_free = loss_no_cavity(pt.times, gamma);
  pt.series_terms_used = loss_series(pt.times, coupling.omega_tilde, gamma, scan.p_model).terms_used;
  pt.in_window = in_validity_window(delta);
  if (scan.report_excitation) pt.p_excite = landau_zener(delta, coupling.omega_tilde, scan.v_inf, params);
  return pt;
}

std::vector<double> scan_grid(const ScanConfig& scan) {
  std::vector<double> grid(static_cast<size_t>(std::max(scan.points, 0)));
  const double step = (scan.to_delta - scan.from_delta) / static_cast<double>(scan.points - 1);
  for (int i = 0; i < scan.points; ++i) grid[static_cast<size_t>(i)] = scan.from_delta + step * i;
  if (!grid.empty()) grid.back() = scan.to_delta;
  return grid;
}

std::vector<LossPoint> scan_detuning(const ScanConfig& scan, const CavityConfig& cavity,
                                     const PhysicalParams& params) {
  if (scan.points < 2) throw ConfigError("scan.points", "need at least 2 points");
  if (!(scan.from_delta < scan.to_delta)) throw ConfigError("scan.from_mhz", "must be below scan.to_mhz");
  if (!(scan.to_delta < 0.0)) throw ConfigError("scan.to_mhz", "detuning must be negative (red)");
  if (!scan.allow_out_of_window &&
      (!in_validity_window(scan.from_delta) || !in_validity_window(scan.to_delta)))
    throw ConfigError("scan.allow_out_of_window",
                      "range leaves the |delta|/2pi in [350, 1000] MHz window; set the override to proceed");

  const auto grid = scan_grid(scan);
  std::vector<LossPoint> out(grid.size());
  const size_t jobs = std::clamp<size_t>(static_cast<size_t>(std::max(scan.jobs, 1)), 1, grid.size());
  if (jobs == 1) {
    for (size_t i = 0; i < grid.size(); ++i) out[i] = loss_point(grid[i], scan, cavity, params);
    return out;
  }

  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (size_t i = w; i < grid.size(); i += jobs) out[i] = loss_point(grid[i], scan, cavity, params);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace cavcoll
