#pragma once

// Coupling chain from resonator geometry to the collective Rabi frequency,
// and the Landau-Zener estimate for exciting the collective state.

#include "cavcoll/constants.hpp"

namespace cavcoll {

enum class CouplingMode { anchored, microscopic };

struct CavityConfig {
  double length = 1.0;            // cm, mirror separation
  double omega_c = 0;             // rad/s; 0 means "use omega_A"
  double n_atoms_total = 2.0e9;
  double density = 4.0e13;        // cm^-3
  CouplingMode coupling_mode = CouplingMode::anchored;
  double omega_tilde_ref = mhz_to_rad_s(200.0);
  double delta_ref = mhz_to_rad_s(-350.0);
};

/// Copy of `config` with the mode tuned to omega_A + delta.
CavityConfig tuned_to(const CavityConfig& config, double delta, const PhysicalParams& params);

struct ModeGeometry {
  double waist = 0;   // cm
  double volume = 0;  // cm^3
};

struct CouplingPoint {
  double delta = 0;
  double omega_single = 0;  // Omega, averaged single-quasimolecule Rabi frequency
  double n_pairs = 0;       // N
  double omega_tilde = 0;   // collective, Omega * sqrt(N)
};

/// w0 = sqrt(c l / omega_c), V = pi w0^2 l.
ModeGeometry mode_geometry(const CavityConfig& config, const PhysicalParams& params);

/// Gaussian-unit field per photon (2 pi hbar omega / V)^(1/2).
double field_per_photon(double omega, double volume);

/// d_A from Gamma_A = 4 d_A^2 omega_A^3 / (3 hbar c^3).
double atomic_dipole(const PhysicalParams& params);

/// Transition dipole of the pair, sqrt(2) d_A.
double molecular_dipole(const PhysicalParams& params);

/// Omega = E d / (sqrt(6) hbar); the 1/6 is the orientation and mode-profile average.
double single_rabi(const CavityConfig& config, const PhysicalParams& params);

/// N = N_A n_A (2 pi C3 / 3 hbar Gamma) (Gamma / delta)^2, Gamma molecular.
double pair_count(double delta, const CavityConfig& config, const PhysicalParams& params);

CouplingPoint collective_rabi(double delta, const CavityConfig& config, const PhysicalParams& params);

/// Landau-Zener parameter hbar Omega~^2 / (v_inf |U'(R_C)|).
double landau_zener_parameter(double delta, double omega_tilde, double v_inf,
                              const PhysicalParams& params);

/// P_E = 1 - exp(-2 pi Delta~).
double landau_zener(double delta, double omega_tilde, double v_inf, const PhysicalParams& params);

}  // namespace cavcoll
