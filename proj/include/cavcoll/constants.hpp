#pragma once

// Physical constants and the resolved parameter set.
//
// Everything internal is CGS-Gaussian: erg, cm, g, s, rad/s. Human-facing
// values (nm, MHz, amu, Angstrom, mK) are converted once in resolve_params().

#include <numbers>
#include <optional>

namespace cavcoll {

namespace phys {
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double c = 2.99792458e10;          // cm/s (exact)
inline constexpr double h = 6.62607015e-27;         // erg s (exact)
inline constexpr double hbar = h / two_pi;          // 1.054571817...e-27 erg s
inline constexpr double k_b = 1.380649e-16;         // erg/K (exact)
inline constexpr double amu = 1.66053906660e-24;    // g (CODATA 2018)
inline constexpr double angstrom = 1.0e-8;          // cm
inline constexpr double nm = 1.0e-7;                // cm
inline constexpr double um = 1.0e-4;                // cm
inline constexpr double mhz = 1.0e6;                // Hz
inline constexpr double mk = 1.0e-3;                // K

inline constexpr double rb85_mass_amu = 84.911789738;
}  // namespace phys

/// Angular frequency from a cyclic frequency in MHz: 2*pi*nu.
constexpr double mhz_to_rad_s(double nu_mhz) { return phys::two_pi * nu_mhz * phys::mhz; }
constexpr double rad_s_to_mhz(double omega) { return omega / (phys::two_pi * phys::mhz); }

/// Species and potential constants as a user writes them.
struct HumanUnitsConfig {
  std::optional<double> wavelength_nm;
  std::optional<double> gamma_a_mhz;   // Gamma_A / 2pi
  std::optional<double> mass_amu;
  std::optional<double> c3_erg_ang3;
  std::optional<double> trap_depth_mk;   // V0 / k_B
  std::optional<double> trap_depth_mhz;  // 2 V0 / h; used when trap_depth_mk is absent
};

/// Resolved internal-unit parameters. Immutable after resolve_params().
struct PhysicalParams {
  double omega_a = 0;     // rad/s, S -> P transition
  double gamma_a = 0;     // rad/s, atomic decay rate
  double gamma_mol = 0;   // rad/s, quasimolecule decay rate, 2 * gamma_a
  double mass_atom = 0;   // g
  double mu = 0;          // g, mass_atom / 2
  double c3 = 0;          // erg cm^3
  double trap_depth = 0;  // erg, V0

  bool operator==(const PhysicalParams&) const = default;
};

/// Converts and validates. Throws ConfigError naming the offending
/// field (`species.<name>`) when it is missing or not strictly positive.
PhysicalParams resolve_params(const HumanUnitsConfig& input);

/// Same arithmetic as resolve_params() with no validation. Used by the
/// self-check suite to probe downstream modules with degenerate inputs.
PhysicalParams convert_params_unchecked(const HumanUnitsConfig& input);

/// Inverse conversion; trap depth is reported in mK.
HumanUnitsConfig to_human_units(const PhysicalParams& params);

/// The Rb-85 D1 preset: 795 nm, Gamma_A/2pi = 6 MHz, C3 = 11e-11 erg A^3, V0 = 5 mK.
HumanUnitsConfig rb85_defaults();

}  // namespace cavcoll
