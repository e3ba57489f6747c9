#include "cavcoll/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "cavcoll/errors.hpp"

namespace cavcoll {

QuadResult infall_integral(double r_ratio, double abs_tol) {
  if (!(r_ratio >= 0.0 && r_ratio <= 1.0)) throw DomainError("radius ratio must lie in [0, 1]");
  // With u = 1 - s^2 the integrand 1/sqrt(u^-3 - 1) du becomes
  // 2 sqrt(u^3 / (1 + u + u^2)) ds, which is smooth on the whole interval.
  const auto integrand = [](double s) {
    const double u = 1.0 - s * s;
    return 2.0 * std::sqrt(u * u * u / (1.0 + u + u * u));
  };
  return integrate_adaptive(integrand, 0.0, std::sqrt(1.0 - r_ratio), abs_tol);
}

double g0_constant() {
  static const double g0 = infall_integral(0.0, 1e-14).value;
  return g0;
}

double fraction_f(double delta, double omega_tilde) {
  if (!(delta < 0.0)) throw DomainError("red detuning required (delta < 0)");
  if (!(omega_tilde >= 0.0)) throw DomainError("collective Rabi frequency must be non-negative");
  const double r = 1.0 / std::cbrt(1.0 + omega_tilde / std::abs(delta));
  return std::min(1.0, infall_integral(r).value / g0_constant());
}

double total_time(double delta, const PhysicalParams& params) {
  if (!(delta < 0.0)) throw DomainError("red detuning required (delta < 0)");
  return g0_constant() * std::sqrt(params.mu / (2.0 * params.c3)) *
         std::pow(params.c3 / (phys::hbar * std::abs(delta)), 5.0 / 6.0);
}

CollisionTimes collision_times(double delta, double omega_tilde, const PhysicalParams& params) {
  CollisionTimes t;
  t.geometry = escape_radius(delta, omega_tilde, params);
  t.t_total = total_time(delta, params);
  t.frac_resonant = std::min(1.0, infall_integral(t.geometry.r_ratio).value / g0_constant());
  t.t_resonant = t.t_total * t.frac_resonant;
  t.t_escape_region = t.t_total - t.t_resonant;
  t.t_prime = 0.0;
  return t;
}

}  // namespace cavcoll
