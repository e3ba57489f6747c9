#pragma once

// Classical in-fall times on U(R) = -C3/R^3, starting at rest from the
// Condon point. Only the time integrals are needed; R(t) itself is never
// tabulated.

#include "cavcoll/constants.hpp"
#include "cavcoll/potential.hpp"
#include "cavcoll/quadrature.hpp"

namespace cavcoll {

struct CollisionTimes {
  double t_total = 0;          // t0: R_C -> 0
  double frac_resonant = 0;    // f
  double t_resonant = 0;       // t_c: R_C -> R'
  double t_escape_region = 0;  // t_e: R_e -> 0
  double t_prime = 0;          // t': R' -> R_e
  ResonanceGeometry geometry;
};

inline constexpr double kQuadratureTolerance = 1e-10;

/// Integral over u in [r, 1] of 1/sqrt(u^-3 - 1). The endpoint singularity
/// at u = 1 is removed by u = 1 - s^2 before adaptive Gauss-Kronrod.
QuadResult infall_integral(double r_ratio, double abs_tol = kQuadratureTolerance);

/// infall_integral(0), computed once.
double g0_constant();

double fraction_f(double delta, double omega_tilde);

/// g0 (mu / 2 C3)^(1/2) (C3 / hbar|delta|)^(5/6).
double total_time(double delta, const PhysicalParams& params);

/// t_c = t0 f, t_e = t0 - t_c, t' = 0.
CollisionTimes collision_times(double delta, double omega_tilde, const PhysicalParams& params);

/// Omega~ t_c, the Rabi phase accumulated in the resonant region.
inline double resonant_phase(const CollisionTimes& times, double omega_tilde) {
  return omega_tilde * times.t_resonant;
}

/// Audit flag: whether the detuning drift across the resonant region stays
/// within one cycle, |omega_R - omega_c| t_c <= 2 pi (1 + margin).
inline bool within_single_cycle(double phase, double margin = 0.0) {
  return phase <= phys::two_pi * (1.0 + margin);
}

}  // namespace cavcoll
