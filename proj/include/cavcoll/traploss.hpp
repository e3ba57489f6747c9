#pragma once

// Trap-loss probability of an excited quasimolecule, with the cavity mode
// (collective Rabi cycling in the resonant region) and without it.

#include <optional>
#include <vector>

#include "cavcoll/cavity.hpp"
#include "cavcoll/constants.hpp"
#include "cavcoll/kinematics.hpp"

namespace cavcoll {

/// Survival kernel p(t) of |E,0> across the resonant region.
enum class PModel {
  approx,      // e^{-Gamma t/2} cos^2(Omega~ t)
  analytic,    // full damped Rabi solution
  pure_decay,  // e^{-Gamma t}: no cavity
};

double survival(PModel model, double t, double omega_tilde, double gamma);

/// l_1 = p(t_c) e^{-t' Gamma} (1 - e^{-2 t_e Gamma}).
double single_passage_loss(const CollisionTimes& times, double omega_tilde, double gamma, PModel model);

struct SeriesResult {
  double value = 0;
  int terms_used = 0;
};

inline constexpr int kDefaultMaxTerms = 10000;

/// Direct sum over multiple passages, ratio e^{-2(t'+t_e)Gamma} p(2 t_c).
/// Throws DivergenceError when the ratio is >= 1.
SeriesResult loss_series(const CollisionTimes& times, double omega_tilde, double gamma, PModel model,
                         int max_terms = kDefaultMaxTerms);

/// p(t_c) sinh(Gamma t_e) / (1/2 [e^{(t'+t_e)Gamma} - p(2 t_c) e^{-(t'+t_e)Gamma}]).
double loss_closed_form(const CollisionTimes& times, double omega_tilde, double gamma, PModel model);

/// sinh(t_e Gamma) / sinh((t_c + t_e) Gamma).
double loss_no_cavity(const CollisionTimes& times, double gamma);

struct ScanConfig {
  double from_delta = mhz_to_rad_s(-1000.0);  // rad/s
  double to_delta = mhz_to_rad_s(-350.0);
  int points = 200;
  PModel p_model = PModel::approx;
  bool allow_out_of_window = false;
  bool report_excitation = false;
  double v_inf = 12.0;  // cm/s, only for the excitation column
  int jobs = 1;
};

/// |delta|/2pi in [350, 1000] MHz.
bool in_validity_window(double delta);

struct LossPoint {
  double delta = 0;
  double omega_tilde = 0;
  double n_pairs = 0;
  CollisionTimes times;
  double phase = 0;  // Omega~ t_c
  double loss_cavity = 0;
  double loss_free = 0;
  int series_terms_used = 0;
  bool in_window = true;
  std::optional<double> p_excite;
};

LossPoint loss_point(double delta, const ScanConfig& scan, const CavityConfig& cavity,
                     const PhysicalParams& params);

/// Evenly spaced detunings from from_delta to to_delta inclusive, ascending.
std::vector<double> scan_grid(const ScanConfig& scan);

/// Throws ConfigError on an empty or non-negative range, and on
/// out-of-window detunings unless allow_out_of_window is set.
std::vector<LossPoint> scan_detuning(const ScanConfig& scan, const CavityConfig& cavity,
                                     const PhysicalParams& params);

}  // namespace cavcoll
