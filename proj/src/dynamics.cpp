#include "cavcoll/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cavcoll/errors.hpp"

namespace cavcoll {

namespace {

constexpr cplx I{0.0, 1.0};

// cos(b t) and sin(b t)/b as power series in b2 = b^2 (either sign), so the
// over- and underdamped branches join smoothly through b = 0.
void trig_series(double b2, double t, double& c, double& s_over_b) {
  const double x = -b2 * t * t;
  double term_c = 1.0;
  double term_s = t;
  c = term_c;
  s_over_b = term_s;
  for (int k = 1; k < 60; ++k) {
    term_c *= x / ((2.0 * k - 1.0) * (2.0 * k));
    term_s *= x / ((2.0 * k) * (2.0 * k + 1.0));
    c += term_c;
    s_over_b += term_s;
    if (std::abs(term_c) <= 1e-17 * std::abs(c) && std::abs(term_s) <= 1e-17 * std::abs(s_over_b))
      break;
  }
}

}  // namespace

RabiRegime classify(double omega_tilde, double gamma) {
  const double quarter = 0.25 * gamma;
  RabiRegime r;
  r.beta = std::sqrt(std::abs((omega_tilde - quarter) * (omega_tilde + quarter)));
  if (std::abs(omega_tilde - quarter) < kCriticalBand * gamma)
    r.regime = Regime::critical;
  else if (omega_tilde > quarter)
    r.regime = Regime::underdamped;
  else
    r.regime = Regime::overdamped;
  return r;
}

ReducedState master_rhs(const ReducedState& s, double omega_tilde, double gamma) {
  const cplx coherence_flow = I * omega_tilde * (s.c_eg - std::conj(s.c_eg));
  ReducedState d;
  d.p_e = -gamma * s.p_e + coherence_flow.real();
  d.p_g = -coherence_flow.real();
  d.p_v = gamma * s.p_e;
  d.c_eg = -0.5 * gamma * s.c_eg + I * omega_tilde * (s.p_e - s.p_g);
  d.c_ev = -0.5 * gamma * s.c_ev - I * omega_tilde * s.c_gv;
  d.c_gv = -I * omega_tilde * s.c_ev;
  return d;
}

double max_stable_step(double omega_tilde, double gamma) {
  const double rate = std::max(classify(omega_tilde, gamma).beta, gamma);
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * std::numbers::pi / rate / 200.0;
}

std::vector<Sample> integrate_master(const ReducedState& initial, double omega_tilde, double gamma,
                                     double t_end, double dt, const IntegrationOptions& opts) {
  if (!(dt > 0.0)) throw StepSizeError("time step must be positive");
  if (!(t_end >= 0.0)) throw StepSizeError("end time must be non-negative");
  if (!opts.allow_large_step && dt > max_stable_step(omega_tilde, gamma))
    throw StepSizeError("time step " + std::to_string(dt) + " s exceeds the stability bound " +
                        std::to_string(max_stable_step(omega_tilde, gamma)) + " s");

  const auto steps = static_cast<long long>(std::ceil(t_end / dt - 1e-9));
  const double h = steps > 0 ? t_end / static_cast<double>(steps) : 0.0;
  const int every = std::max(1, opts.sample_every);

  std::vector<Sample> out;
  out.reserve(static_cast<size_t>(steps / every + 2));
  ReducedState y = initial;
  out.push_back({0.0, y});
  const auto rhs = [&](const ReducedState& s) { return master_rhs(s, omega_tilde, gamma); };
  for (long long n = 1; n <= steps; ++n) {
    const ReducedState k1 = rhs(y);
    const ReducedState k2 = rhs(y + (0.5 * h) * k1);
    const ReducedState k3 = rhs(y + (0.5 * h) * k2);
    const ReducedState k4 = rhs(y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (n % every == 0 || n == steps) out.push_back({static_cast<double>(n) * h, y});
  }
  return out;
}

double p_omega_analytic(double t, double omega_tilde, double gamma) {
  if (!(t >= 0.0)) throw DomainError("time must be non-negative");
  if (!(gamma >= 0.0)) throw DomainError("decay rate must be non-negative");
  if (omega_tilde == 0.0) return std::exp(-gamma * t);

  const double quarter = 0.25 * gamma;
  const double b2 = (omega_tilde - quarter) * (omega_tilde + quarter);
  const auto regime = classify(omega_tilde, gamma);
  double c = 0;
  double s_over_b = 0;
  if (regime.regime == Regime::critical && std::abs(b2) * t * t <= 1.0) {
    // Leading term is the critical limit (1 - Gamma t/4)^2 e^{-Gamma t/2}.
    trig_series(b2, t, c, s_over_b);
  } else if (b2 > 0.0) {
    const double beta = std::sqrt(b2);
    c = std::cos(beta * t);
    s_over_b = std::sin(beta * t) / beta;
  } else {
    const double kappa = std::sqrt(-b2);
    // cosh(kt) - (Gamma/4k) sinh(kt) loses everything to cancellation for
    // large kt; fold the envelope into the exponentials instead.
    const double grow = std::exp((kappa - quarter) * t);
    const double fall = std::exp(-(kappa + quarter) * t);
    // e^{-Gamma t/4} cosh(kt) and e^{-Gamma t/4} sinh(kt)/k
    const double ch = 0.5 * (grow + fall);
    const double sh = -0.5 * grow * std::expm1(-2.0 * kappa * t) / kappa;
    const double amp = ch - quarter * sh;
    return amp * amp;
  }
  const double amp = c - quarter * s_over_b;
  return std::exp(-0.5 * gamma * t) * amp * amp;
}

double p_omega_approx(double t, double omega_tilde, double gamma) {
  const double c = std::cos(omega_tilde * t);
  return std::exp(-0.5 * gamma * t) * c * c;
}

}  // namespace cavcoll
