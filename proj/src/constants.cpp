#include "cavcoll/constants.hpp"

#include <cmath>
#include <string>

#include "cavcoll/errors.hpp"

namespace cavcoll {

namespace {

double require_positive(const std::optional<double>& v, const char* name) {
  const std::string field = std::string("species.") + name;
  if (!v) throw ConfigError(field, "missing");
  if (!std::isfinite(*v) || *v <= 0.0) throw ConfigError(field, "must be strictly positive");
  return *v;
}

double trap_depth_erg(const HumanUnitsConfig& in) {
  if (in.trap_depth_mk) return *in.trap_depth_mk * phys::mk * phys::k_b;
  if (in.trap_depth_mhz) return 0.5 * phys::h * *in.trap_depth_mhz * phys::mhz;
  return 0.0;
}

}  // namespace

PhysicalParams convert_params_unchecked(const HumanUnitsConfig& in) {
  PhysicalParams p;
  p.omega_a = phys::two_pi * phys::c / (in.wavelength_nm.value_or(0.0) * phys::nm);
  p.gamma_a = mhz_to_rad_s(in.gamma_a_mhz.value_or(0.0));
  p.gamma_mol = 2.0 * p.gamma_a;
  p.mass_atom = in.mass_amu.value_or(0.0) * phys::amu;
  p.mu = 0.5 * p.mass_atom;
  p.c3 = in.c3_erg_ang3.value_or(0.0) * (phys::angstrom * phys::angstrom * phys::angstrom);
  p.trap_depth = trap_depth_erg(in);
  return p;
}

PhysicalParams resolve_params(const HumanUnitsConfig& in) {
  require_positive(in.wavelength_nm, "lambda_nm");
  require_positive(in.gamma_a_mhz, "gamma_a_mhz");
  require_positive(in.mass_amu, "mass_amu");
  require_positive(in.c3_erg_ang3, "c3_erg_ang3");
  if (in.trap_depth_mk) {
    require_positive(in.trap_depth_mk, "trap_depth_mk");
  } else if (in.trap_depth_mhz) {
    require_positive(in.trap_depth_mhz, "trap_depth_mhz");
  } else {
    throw ConfigError("species.trap_depth_mk", "missing (or give species.trap_depth_mhz)");
  }
  return convert_params_unchecked(in);
}

HumanUnitsConfig to_human_units(const PhysicalParams& p) {
  HumanUnitsConfig out;
  out.wavelength_nm = phys::two_pi * phys::c / p.omega_a / phys::nm;
  out.gamma_a_mhz = rad_s_to_mhz(p.gamma_a);
  out.mass_amu = p.mass_atom / phys::amu;
  out.c3_erg_ang3 = p.c3 / (phys::angstrom * phys::angstrom * phys::angstrom);
  out.trap_depth_mk = p.trap_depth / phys::k_b / phys::mk;
  return out;
}

HumanUnitsConfig rb85_defaults() {
  HumanUnitsConfig cfg;
  cfg.wavelength_nm = 795.0;
  cfg.gamma_a_mhz = 6.0;
  cfg.mass_amu = phys::rb85_mass_amu;
  cfg.c3_erg_ang3 = 11e-11;
  cfg.trap_depth_mk = 5.0;
  return cfg;
}

}  // namespace cavcoll
