#include "cavcoll/potential.hpp"

#include <cmath>

#include "cavcoll/errors.hpp"

namespace cavcoll {

namespace {

void require_radius(double r) {
  if (!(r > 0.0)) throw DomainError("internuclear distance must be positive");
}

void require_red(double delta) {
  if (!(delta < 0.0)) throw DomainError("red detuning required (delta < 0)");
}

}  // namespace

double u_dd(double r, const PhysicalParams& params) {
  require_radius(r);
  return -params.c3 / (r * r * r);
}

double omega_r(double r, const PhysicalParams& params) {
  return params.omega_a + u_dd(r, params) / phys::hbar;
}

double condon_radius(double delta, const PhysicalParams& params) {
  require_red(delta);
  return std::cbrt(params.c3 / (phys::hbar * std::abs(delta)));
}

ResonanceGeometry escape_radius(double delta, double omega_tilde, const PhysicalParams& params) {
  require_red(delta);
  if (!(omega_tilde >= 0.0)) throw DomainError("collective Rabi frequency must be non-negative");
  ResonanceGeometry g;
  g.detuning = delta;
  g.r_condon = condon_radius(delta, params);
  g.r_ratio = 1.0 / std::cbrt(1.0 + omega_tilde / std::abs(delta));
  g.r_escape = g.r_condon * g.r_ratio;
  return g;
}

double potential_slope(double r, const PhysicalParams& params) {
  require_radius(r);
  const double r2 = r * r;
  return 3.0 * params.c3 / (r2 * r2);
}

}  // namespace cavcoll
