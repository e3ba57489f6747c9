#pragma once

// Run configuration: the JSON document read by the command-line tool.
//
//   {
//     "species":  {"mass_amu", "lambda_nm", "gamma_a_mhz", "c3_erg_ang3",
//                  "trap_depth_mk" | "trap_depth_mhz"},
//     "cavity":   {"length_cm", "n_atoms", "density_cm3"},
//     "coupling": {"mode": "anchored"|"microscopic", "omega_tilde_ref_mhz",
//                  "delta_ref_mhz", "v_inf_cm_s"},
//     "scan":     {"from_mhz", "to_mhz", "points", "p_model": "approx"|"analytic",
//                  "allow_out_of_window", "report_excitation" (optional)},
//     "output":   {"path", "precision"}   (optional section)
//   }
//
// Every field of species/cavity/coupling/scan is required in a file; the
// built-in default_run_config() reproduces the Rb-85 setup.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cavcoll/cavity.hpp"
#include "cavcoll/constants.hpp"
#include "cavcoll/traploss.hpp"

namespace cavcoll {

struct RunConfig {
  HumanUnitsConfig species;

  struct Cavity {
    double length_cm = 1.0;
    double n_atoms = 2.0e9;
    double density_cm3 = 4.0e13;
  } cavity;

  struct Coupling {
    CouplingMode mode = CouplingMode::anchored;
    double omega_tilde_ref_mhz = 200.0;
    double delta_ref_mhz = -350.0;
    double v_inf_cm_s = 12.0;
  } coupling;

  struct Scan {
    double from_mhz = -1000.0;
    double to_mhz = -350.0;
    int points = 200;
    PModel p_model = PModel::approx;
    bool allow_out_of_window = false;
    bool report_excitation = false;
  } scan;

  struct Output {
    std::string path;  // empty: standard output
    int precision = 12;
  } output;
};

RunConfig default_run_config();

/// Throws ConfigError naming the offending `section.field`.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& cfg);

/// Cross-field checks: from < to < 0, points >= 2, precision >= 6, positive cavity fields.
void check_run_config(const RunConfig& cfg);

PhysicalParams physical_params(const RunConfig& cfg);
CavityConfig cavity_config(const RunConfig& cfg, const PhysicalParams& params);
ScanConfig scan_config(const RunConfig& cfg);

PModel parse_p_model(const std::string& name);
CouplingMode parse_coupling_mode(const std::string& name);
const char* to_string(PModel model);
const char* to_string(CouplingMode mode);

}  // namespace cavcoll
