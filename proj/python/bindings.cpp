#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cavcoll/cavity.hpp"
#include "cavcoll/config.hpp"
#include "cavcoll/dynamics.hpp"
#include "cavcoll/errors.hpp"
#include "cavcoll/kinematics.hpp"
#include "cavcoll/traploss.hpp"
#include "cavcoll/validation.hpp"

namespace py = pybind11;
using namespace cavcoll;

namespace {

PhysicalParams resolve_kwargs(std::optional<double> lambda_nm, std::optional<double> gamma_a_mhz,
                              std::optional<double> mass_amu, std::optional<double> c3_erg_ang3,
                              std::optional<double> trap_depth_mk, std::optional<double> trap_depth_mhz) {
  HumanUnitsConfig in;
  in.wavelength_nm = lambda_nm;
  in.gamma_a_mhz = gamma_a_mhz;
  in.mass_amu = mass_amu;
  in.c3_erg_ang3 = c3_erg_ang3;
  in.trap_depth_mk = trap_depth_mk;
  in.trap_depth_mhz = trap_depth_mhz;
  return resolve_params(in);
}

py::dict sample_dict(const std::vector<Sample>& run) {
  std::vector<double> t, pe, pg, pv;
  std::vector<std::complex<double>> ceg, cev, cgv;
  for (const auto& s : run) {
    t.push_back(s.t);
    pe.push_back(s.state.p_e);
    pg.push_back(s.state.p_g);
    pv.push_back(s.state.p_v);
    ceg.push_back(s.state.c_eg);
    cev.push_back(s.state.c_ev);
    cgv.push_back(s.state.c_gv);
  }
  py::dict d;
  d["t"] = t;
  d["p_e"] = pe;
  d["p_g"] = pg;
  d["p_v"] = pv;
  d["c_eg"] = ceg;
  d["c_ev"] = cev;
  d["c_gv"] = cgv;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of the cavity trap-loss model (CGS units, angular frequencies in rad/s)";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
  py::register_exception<StepSizeError>(m, "StepSizeError", PyExc_ValueError);

  m.def("mhz_to_rad_s", &mhz_to_rad_s);
  m.def("rad_s_to_mhz", &rad_s_to_mhz);

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def_readonly("omega_a", &PhysicalParams::omega_a)
      .def_readonly("gamma_a", &PhysicalParams::gamma_a)
      .def_readonly("gamma_mol", &PhysicalParams::gamma_mol)
      .def_readonly("mass_atom", &PhysicalParams::mass_atom)
      .def_readonly("mu", &PhysicalParams::mu)
      .def_readonly("c3", &PhysicalParams::c3)
      .def_readonly("trap_depth", &PhysicalParams::trap_depth)
      .def("__eq__", [](const PhysicalParams& a, const PhysicalParams& b) { return a == b; });

  m.def("resolve_params", &resolve_kwargs, py::kw_only(), py::arg("lambda_nm") = py::none(),
        py::arg("gamma_a_mhz") = py::none(), py::arg("mass_amu") = py::none(), py::arg("c3_erg_ang3") = py::none(),
        py::arg("trap_depth_mk") = py::none(), py::arg("trap_depth_mhz") = py::none(),
        "Species parameters in lab units to internal CGS values.");
  m.def("rb85", [] { return resolve_params(rb85_defaults()); }, "Default 85Rb parameters.");

  m.def("condon_radius", &condon_radius, py::arg("delta"), py::arg("params"));
  m.def("g0", &g0_constant);

  py::class_<CollisionTimes>(m, "CollisionTimes")
      .def_readonly("t_total", &CollisionTimes::t_total)
      .def_readonly("frac_resonant", &CollisionTimes::frac_resonant)
      .def_readonly("t_resonant", &CollisionTimes::t_resonant)
      .def_readonly("t_escape_region", &CollisionTimes::t_escape_region)
      .def_readonly("t_prime", &CollisionTimes::t_prime)
      .def_property_readonly("r_condon", [](const CollisionTimes& t) { return t.geometry.r_condon; })
      .def_property_readonly("r_escape", [](const CollisionTimes& t) { return t.geometry.r_escape; });
  m.def("collision_times", &collision_times, py::arg("delta"), py::arg("omega_tilde"), py::arg("params"));

  py::enum_<CouplingMode>(m, "CouplingMode")
      .value("anchored", CouplingMode::anchored)
      .value("microscopic", CouplingMode::microscopic);

  py::class_<CavityConfig>(m, "CavityConfig")
      .def(py::init<>())
      .def_readwrite("length", &CavityConfig::length)
      .def_readwrite("omega_c", &CavityConfig::omega_c)
      .def_readwrite("n_atoms_total", &CavityConfig::n_atoms_total)
      .def_readwrite("density", &CavityConfig::density)
      .def_readwrite("coupling_mode", &CavityConfig::coupling_mode)
      .def_readwrite("omega_tilde_ref", &CavityConfig::omega_tilde_ref)
      .def_readwrite("delta_ref", &CavityConfig::delta_ref);

  m.def("pair_count", &pair_count, py::arg("delta"), py::arg("cavity"), py::arg("params"));
  m.def(
      "collective_rabi",
      [](double delta, const CavityConfig& cav, const PhysicalParams& p) {
        const auto cp = collective_rabi(delta, cav, p);
        py::dict d;
        d["omega_single"] = cp.omega_single;
        d["n_pairs"] = cp.n_pairs;
        d["omega_tilde"] = cp.omega_tilde;
        return d;
      },
      py::arg("delta"), py::arg("cavity"), py::arg("params"));
  m.def("landau_zener", &landau_zener, py::arg("delta"), py::arg("omega_tilde"), py::arg("v_inf"),
        py::arg("params"));

  m.def("p_omega_analytic", &p_omega_analytic, py::arg("t"), py::arg("omega_tilde"), py::arg("gamma"));
  m.def("p_omega_approx", &p_omega_approx, py::arg("t"), py::arg("omega_tilde"), py::arg("gamma"));
  m.def("max_stable_step", &max_stable_step, py::arg("omega_tilde"), py::arg("gamma"));
  m.def(
      "integrate_master",
      [](double omega_tilde, double gamma, double t_end, double dt, int sample_every, bool allow_large_step) {
        IntegrationOptions opts;
        opts.sample_every = sample_every;
        opts.allow_large_step = allow_large_step;
        return sample_dict(integrate_master(ReducedState::excited(), omega_tilde, gamma, t_end, dt, opts));
      },
      py::arg("omega_tilde"), py::arg("gamma"), py::arg("t_end"), py::arg("dt"), py::arg("sample_every") = 1,
      py::arg("allow_large_step") = false, "RK4 run from |E,0>; returns a dict of lists.");

  py::enum_<PModel>(m, "PModel")
      .value("approx", PModel::approx)
      .value("analytic", PModel::analytic)
      .value("pure_decay", PModel::pure_decay);

  m.def(
      "loss_series",
      [](const CollisionTimes& t, double ot, double gamma, PModel model) {
        const auto r = loss_series(t, ot, gamma, model);
        return py::make_tuple(r.value, r.terms_used);
      },
      py::arg("times"), py::arg("omega_tilde"), py::arg("gamma"), py::arg("model") = PModel::approx);
  m.def("loss_closed_form", &loss_closed_form, py::arg("times"), py::arg("omega_tilde"), py::arg("gamma"),
        py::arg("model") = PModel::approx);
  m.def("loss_no_cavity", &loss_no_cavity, py::arg("times"), py::arg("gamma"));

  py::class_<ScanConfig>(m, "ScanConfig")
      .def(py::init<>())
      .def_readwrite("from_delta", &ScanConfig::from_delta)
      .def_readwrite("to_delta", &ScanConfig::to_delta)
      .def_readwrite("points", &ScanConfig::points)
      .def_readwrite("p_model", &ScanConfig::p_model)
      .def_readwrite("allow_out_of_window", &ScanConfig::allow_out_of_window)
      .def_readwrite("report_excitation", &ScanConfig::report_excitation)
      .def_readwrite("v_inf", &ScanConfig::v_inf)
      .def_readwrite("jobs", &ScanConfig::jobs);

  py::class_<LossPoint>(m, "LossPoint")
      .def_readonly("delta", &LossPoint::delta)
      .def_readonly("omega_tilde", &LossPoint::omega_tilde)
      .def_readonly("n_pairs", &LossPoint::n_pairs)
      .def_readonly("times", &LossPoint::times)
      .def_readonly("phase", &LossPoint::phase)
      .def_readonly("loss_cavity", &LossPoint::loss_cavity)
      .def_readonly("loss_free", &LossPoint::loss_free)
      .def_readonly("series_terms_used", &LossPoint::series_terms_used)
      .def_readonly("in_window", &LossPoint::in_window)
      .def_readonly("p_excite", &LossPoint::p_excite);

  m.def("scan_detuning", &scan_detuning, py::arg("scan") = ScanConfig{}, py::arg("cavity") = CavityConfig{},
        py::arg("params") = resolve_params(rb85_defaults()), py::call_guard<py::gil_scoped_release>());

  m.def(
      "validate",
      [](std::optional<std::string> config_path) {
        const RunConfig cfg = config_path ? load_run_config(*config_path) : default_run_config();
        std::vector<py::tuple> out;
        for (const auto& r : run_validation(cfg)) out.push_back(py::make_tuple(r.name, r.passed, r.detail));
        return out;
      },
      py::arg("config_path") = py::none(), "Self-check suite as (name, passed, detail) tuples.");
}
