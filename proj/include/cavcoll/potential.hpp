#pragma once

// Excited-state dipole-dipole curve U(R) = -C3/R^3 and the resonance
// geometry it fixes at a given (red) detuning.

#include "cavcoll/constants.hpp"

namespace cavcoll {

struct ResonanceGeometry {
  double detuning = 0;   // rad/s, < 0
  double r_condon = 0;   // cm
  double r_escape = 0;   // cm
  double r_ratio = 1;    // r_escape / r_condon
};

double u_dd(double r, const PhysicalParams& params);

/// omega_A + U(r)/hbar.
double omega_r(double r, const PhysicalParams& params);

/// (C3 / hbar|delta|)^(1/3). Throws DomainError unless delta < 0.
double condon_radius(double delta, const PhysicalParams& params);

/// R_e = R_C (1 + omega_tilde/|delta|)^(-1/3); the outer edge of the
/// off-resonance region, omega_r(R_C) - omega_r(R_e) = omega_tilde.
ResonanceGeometry escape_radius(double delta, double omega_tilde, const PhysicalParams& params);

/// |dU/dR| = 3 C3 / r^4.
double potential_slope(double r, const PhysicalParams& params);

}  // namespace cavcoll
