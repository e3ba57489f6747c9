#pragma once

// Dissipative dynamics of the one-excitation subspace {|E,0>, |G,1>} plus
// the vacuum |G,0>, in the interaction picture.

#include <complex>
#include <vector>

namespace cavcoll {

using cplx = std::complex<double>;

struct ReducedState {
  double p_e = 0;  // |E,0>
  double p_g = 0;  // |G,1>
  double p_v = 0;  // |G,0>
  cplx c_eg{};
  cplx c_ev{};
  cplx c_gv{};

  static ReducedState excited() { return {1.0, 0.0, 0.0, {}, {}, {}}; }

  double trace() const { return p_e + p_g + p_v; }

  ReducedState& operator+=(const ReducedState& o) {
    p_e += o.p_e;
    p_g += o.p_g;
    p_v += o.p_v;
    c_eg += o.c_eg;
    c_ev += o.c_ev;
    c_gv += o.c_gv;
    return *this;
  }
  ReducedState& operator*=(double s) {
    p_e *= s;
    p_g *= s;
    p_v *= s;
    c_eg *= s;
    c_ev *= s;
    c_gv *= s;
    return *this;
  }
  friend ReducedState operator+(ReducedState a, const ReducedState& b) { return a += b; }
  friend ReducedState operator*(double s, ReducedState a) { return a *= s; }
};

enum class Regime { underdamped, critical, overdamped };

struct RabiRegime {
  double beta = 0;  // sqrt(|Omega~^2 - (Gamma/4)^2|); imaginary part when overdamped
  Regime regime = Regime::underdamped;
};

/// |Omega~ - Gamma/4| below this fraction of Gamma counts as critical.
inline constexpr double kCriticalBand = 1e-6;

RabiRegime classify(double omega_tilde, double gamma);

/// Time derivative of the reduced density matrix.
ReducedState master_rhs(const ReducedState& state, double omega_tilde, double gamma);

struct IntegrationOptions {
  int sample_every = 1;           // keep every n-th step (the final state is always kept)
  bool allow_large_step = false;  // skip the step-size bound
};

struct Sample {
  double t = 0;
  ReducedState state;
};

/// Largest step accepted without allow_large_step: 2 pi / max(|beta|, Gamma) / 200.
double max_stable_step(double omega_tilde, double gamma);

/// Classical fixed-step RK4 from t = 0 to t_end. The step is shortened to
/// t_end / ceil(t_end / dt) so the grid lands on t_end.
std::vector<Sample> integrate_master(const ReducedState& initial, double omega_tilde, double gamma,
                                     double t_end, double dt, const IntegrationOptions& opts = {});

/// Closed-form p_E(t) for rho(0) = |E,0><E,0|, any damping regime.
double p_omega_analytic(double t, double omega_tilde, double gamma);

/// exp(-Gamma t / 2) cos^2(Omega~ t); beta ~ Omega~ with the sine dropped.
double p_omega_approx(double t, double omega_tilde, double gamma);

}  // namespace cavcoll
