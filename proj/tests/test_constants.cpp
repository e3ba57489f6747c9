#include <doctest.h>

#include <cmath>
#include <cstring>

#include "cavcoll/constants.hpp"
#include "cavcoll/errors.hpp"
#include "oracles.hpp"

using namespace cavcoll;

TEST_CASE("rb85 defaults resolve to CGS values") {
  const auto p = resolve_params(rb85_defaults());
  CHECK(p.omega_a == doctest::Approx(2 * oracle::pi * oracle::c / 795e-7).epsilon(1e-14));
  CHECK(p.omega_a == doctest::Approx(2.3693e15).epsilon(1e-4));
  CHECK(p.gamma_mol == doctest::Approx(7.5398e7).epsilon(1e-4));
  CHECK(p.gamma_mol == 2.0 * p.gamma_a);
  CHECK(p.mu == 0.5 * p.mass_atom);
  CHECK(p.c3 == doctest::Approx(1.1e-34).epsilon(1e-14));
  CHECK(p.trap_depth == doctest::Approx(5e-3 * 1.380649e-16).epsilon(1e-14));
}

TEST_CASE("hbar matches the CODATA 2018 value") {
  CHECK(phys::hbar == doctest::Approx(1.054571817e-27).epsilon(1e-9));
}

TEST_CASE("trap depth may be given as 2 V0 / h in MHz") {
  auto cfg = rb85_defaults();
  cfg.trap_depth_mk.reset();
  cfg.trap_depth_mhz = 200.0;
  const auto p = resolve_params(cfg);
  CHECK(2.0 * p.trap_depth / phys::h == doctest::Approx(200e6).epsilon(1e-14));
}

TEST_CASE("missing or non-positive fields name the field") {
  const auto field_of = [](HumanUnitsConfig cfg) -> std::string {
    try {
      resolve_params(cfg);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return "";
  };
  auto cfg = rb85_defaults();
  cfg.wavelength_nm.reset();
  CHECK(field_of(cfg) == "species.lambda_nm");
  cfg = rb85_defaults();
  cfg.gamma_a_mhz = 0.0;
  CHECK(field_of(cfg) == "species.gamma_a_mhz");
  cfg = rb85_defaults();
  cfg.c3_erg_ang3 = -1.0;
  CHECK(field_of(cfg) == "species.c3_erg_ang3");
  cfg = rb85_defaults();
  cfg.mass_amu = NAN;
  CHECK(field_of(cfg) == "species.mass_amu");
  cfg = rb85_defaults();
  cfg.trap_depth_mk.reset();
  CHECK(field_of(cfg) == "species.trap_depth_mk");
}

TEST_CASE("round trip through internal units keeps 12 significant digits") {
  for (double lambda : {589.0, 780.241, 795.0, 852.3}) {
    for (double mass : {6.015, 22.99, 84.911789738, 132.905}) {
      HumanUnitsConfig in;
      in.wavelength_nm = lambda;
      in.gamma_a_mhz = 5.75;
      in.mass_amu = mass;
      in.c3_erg_ang3 = 9.3e-11;
      in.trap_depth_mk = 0.8;
      const auto back = to_human_units(resolve_params(in));
      CHECK(*back.wavelength_nm == doctest::Approx(lambda).epsilon(1e-12));
      CHECK(*back.gamma_a_mhz == doctest::Approx(5.75).epsilon(1e-12));
      CHECK(*back.mass_amu == doctest::Approx(mass).epsilon(1e-12));
      CHECK(*back.c3_erg_ang3 == doctest::Approx(9.3e-11).epsilon(1e-12));
      CHECK(*back.trap_depth_mk == doctest::Approx(0.8).epsilon(1e-12));
    }
  }
}

TEST_CASE("resolution is deterministic bit for bit") {
  const auto a = resolve_params(rb85_defaults());
  const auto b = resolve_params(rb85_defaults());
  CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}
