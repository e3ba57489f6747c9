#include "cavcoll/cavity.hpp"

#include <cmath>

#include "cavcoll/errors.hpp"
#include "cavcoll/potential.hpp"

namespace cavcoll {

namespace {

double mode_frequency(const CavityConfig& config, const PhysicalParams& params) {
  return config.omega_c > 0.0 ? config.omega_c : params.omega_a;
}

}  // namespace

CavityConfig tuned_to(const CavityConfig& config, double delta, const PhysicalParams& params) {
  CavityConfig out = config;
  out.omega_c = params.omega_a + delta;
  return out;
}

ModeGeometry mode_geometry(const CavityConfig& config, const PhysicalParams& params) {
  const double omega = mode_frequency(config, params);
  if (!(config.length > 0.0)) throw DomainError("cavity length must be positive");
  if (!(omega > 0.0)) throw DomainError("mode frequency must be positive");
  ModeGeometry g;
  g.waist = std::sqrt(phys::c * config.length / omega);
  g.volume = phys::pi * g.waist * g.waist * config.length;
  return g;
}

double field_per_photon(double omega, double volume) {
  if (!(omega > 0.0) || !(volume > 0.0)) throw DomainError("field per photon needs omega > 0 and V > 0");
  return std::sqrt(phys::two_pi * phys::hbar * omega / volume);
}

double atomic_dipole(const PhysicalParams& params) {
  const double w3 = params.omega_a * params.omega_a * params.omega_a;
  return std::sqrt(3.0 * phys::hbar * phys::c * phys::c * phys::c * params.gamma_a / (4.0 * w3));
}

double molecular_dipole(const PhysicalParams& params) {
  return std::sqrt(2.0) * atomic_dipole(params);
}

double single_rabi(const CavityConfig& config, const PhysicalParams& params) {
  const auto geom = mode_geometry(config, params);
  const double field = field_per_photon(mode_frequency(config, params), geom.volume);
  return field * molecular_dipole(params) / (std::sqrt(6.0) * phys::hbar);
}

double pair_count(double delta, const CavityConfig& config, const PhysicalParams& params) {
  if (!(delta < 0.0)) throw DomainError("red detuning required (delta < 0)");
  const double gamma = params.gamma_mol;
  if (!(gamma > 0.0)) throw DomainError("pair count needs a positive linewidth");
  const double ratio = gamma / delta;
  return config.n_atoms_total * config.density *
         (phys::two_pi * params.c3 / (3.0 * phys::hbar * gamma)) * ratio * ratio;
}

CouplingPoint collective_rabi(double delta, const CavityConfig& config, const PhysicalParams& params) {
  if (!(delta < 0.0)) throw DomainError("red detuning required (delta < 0)");
  const CavityConfig tuned = tuned_to(config, delta, params);
  CouplingPoint pt;
  pt.delta = delta;
  pt.omega_single = single_rabi(tuned, params);
  switch (config.coupling_mode) {
    case CouplingMode::microscopic:
      pt.n_pairs = pair_count(delta, config, params);
      pt.omega_tilde = pt.omega_single * std::sqrt(pt.n_pairs);
      break;
    case CouplingMode::anchored:
      if (!(config.omega_tilde_ref > 0.0))
        throw ConfigError("coupling.omega_tilde_ref_mhz", "anchored coupling needs a positive reference");
      if (!(config.delta_ref < 0.0))
        throw ConfigError("coupling.delta_ref_mhz", "anchored coupling needs a negative reference detuning");
      pt.omega_tilde = config.omega_tilde_ref * std::abs(config.delta_ref / delta);
      pt.n_pairs = (pt.omega_tilde / pt.omega_single) * (pt.omega_tilde / pt.omega_single);
      break;
  }
  return pt;
}

double landau_zener_parameter(double delta, double omega_tilde, double v_inf,
                              const PhysicalParams& params) {
  if (!(v_inf > 0.0)) throw DomainError("asymptotic velocity must be positive");
  const double slope = potential_slope(condon_radius(delta, params), params);
  return phys::hbar * omega_tilde * omega_tilde / (v_inf * slope);
}

double landau_zener(double delta, double omega_tilde, double v_inf, const PhysicalParams& params) {
  return -std::expm1(-phys::two_pi * landau_zener_parameter(delta, omega_tilde, v_inf, params));
}

}  // namespace cavcoll
