#include "cavcoll/config.hpp"

#include <fstream>

#include "cavcoll/errors.hpp"

namespace cavcoll {

using nlohmann::json;

namespace {

const json& section(const json& doc, const char* name) {
  if (!doc.contains(name)) throw ConfigError(name, "missing section");
  const json& s = doc.at(name);
  if (!s.is_object()) throw ConfigError(name, "must be an object");
  return s;
}

template <class T>
T field(const json& sec, const char* sec_name, const char* key) {
  const std::string path = std::string(sec_name) + "." + key;
  if (!sec.contains(key)) throw ConfigError(path, "missing");
  try {
    return sec.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path, "wrong type");
  }
}

template <class T>
T field_or(const json& sec, const char* sec_name, const char* key, T fallback) {
  return sec.contains(key) ? field<T>(sec, sec_name, key) : fallback;
}

std::optional<double> optional_number(const json& sec, const char* key) {
  if (!sec.contains(key)) return std::nullopt;
  if (!sec.at(key).is_number()) throw ConfigError(std::string("species.") + key, "wrong type");
  return sec.at(key).get<double>();
}

}  // namespace

PModel parse_p_model(const std::string& name) {
  if (name == "approx") return PModel::approx;
  if (name == "analytic") return PModel::analytic;
  throw ConfigError("scan.p_model", "expected \"approx\" or \"analytic\", got \"" + name + "\"");
}

CouplingMode parse_coupling_mode(const std::string& name) {
  if (name == "anchored") return CouplingMode::anchored;
  if (name == "microscopic") return CouplingMode::microscopic;
  throw ConfigError("coupling.mode", "expected \"anchored\" or \"microscopic\", got \"" + name + "\"");
}

const char* to_string(PModel model) {
  switch (model) {
    case PModel::approx: return "approx";
    case PModel::analytic: return "analytic";
    case PModel::pure_decay: return "pure_decay";
  }
  return "?";
}

const char* to_string(CouplingMode mode) {
  return mode == CouplingMode::anchored ? "anchored" : "microscopic";
}

RunConfig default_run_config() {
  RunConfig cfg;
  cfg.species = rb85_defaults();
  return cfg;
}

RunConfig parse_run_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("$", "configuration must be a JSON object");
  RunConfig cfg;

  const json& sp = section(doc, "species");
  cfg.species.mass_amu = optional_number(sp, "mass_amu");
  cfg.species.wavelength_nm = optional_number(sp, "lambda_nm");
  cfg.species.gamma_a_mhz = optional_number(sp, "gamma_a_mhz");
  cfg.species.c3_erg_ang3 = optional_number(sp, "c3_erg_ang3");
  cfg.species.trap_depth_mk = optional_number(sp, "trap_depth_mk");
  cfg.species.trap_depth_mhz = optional_number(sp, "trap_depth_mhz");
  for (const char* key : {"mass_amu", "lambda_nm", "gamma_a_mhz", "c3_erg_ang3"})
    if (!sp.contains(key)) throw ConfigError(std::string("species.") + key, "missing");

  const json& cav = section(doc, "cavity");
  cfg.cavity.length_cm = field<double>(cav, "cavity", "length_cm");
  cfg.cavity.n_atoms = field<double>(cav, "cavity", "n_atoms");
  cfg.cavity.density_cm3 = field<double>(cav, "cavity", "density_cm3");

  const json& cp = section(doc, "coupling");
  cfg.coupling.mode = parse_coupling_mode(field<std::string>(cp, "coupling", "mode"));
  cfg.coupling.omega_tilde_ref_mhz = field<double>(cp, "coupling", "omega_tilde_ref_mhz");
  cfg.coupling.delta_ref_mhz = field<double>(cp, "coupling", "delta_ref_mhz");
  cfg.coupling.v_inf_cm_s = field<double>(cp, "coupling", "v_inf_cm_s");

  const json& sc = section(doc, "scan");
  cfg.scan.from_mhz = field<double>(sc, "scan", "from_mhz");
  cfg.scan.to_mhz = field<double>(sc, "scan", "to_mhz");
  cfg.scan.points = field<int>(sc, "scan", "points");
  cfg.scan.p_model = parse_p_model(field<std::string>(sc, "scan", "p_model"));
  cfg.scan.allow_out_of_window = field<bool>(sc, "scan", "allow_out_of_window");
  cfg.scan.report_excitation = field_or<bool>(sc, "scan", "report_excitation", false);

  if (doc.contains("output")) {
    const json& out = section(doc, "output");
    cfg.output.path = field_or<std::string>(out, "output", "path", "");
    cfg.output.precision = field_or<int>(out, "output", "precision", 12);
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
  }
  return parse_run_config(doc);
}

json to_json(const RunConfig& cfg) {
  json sp = json::object();
  if (cfg.species.mass_amu) sp["mass_amu"] = *cfg.species.mass_amu;
  if (cfg.species.wavelength_nm) sp["lambda_nm"] = *cfg.species.wavelength_nm;
  if (cfg.species.gamma_a_mhz) sp["gamma_a_mhz"] = *cfg.species.gamma_a_mhz;
  if (cfg.species.c3_erg_ang3) sp["c3_erg_ang3"] = *cfg.species.c3_erg_ang3;
  if (cfg.species.trap_depth_mk) sp["trap_depth_mk"] = *cfg.species.trap_depth_mk;
  if (cfg.species.trap_depth_mhz) sp["trap_depth_mhz"] = *cfg.species.trap_depth_mhz;
  return {
      {"species", sp},
      {"cavity",
       {{"length_cm", cfg.cavity.length_cm},
        {"n_atoms", cfg.cavity.n_atoms},
        {"density_cm3", cfg.cavity.density_cm3}}},
      {"coupling",
       {{"mode", to_string(cfg.coupling.mode)},
        {"omega_tilde_ref_mhz", cfg.coupling.omega_tilde_ref_mhz},
        {"delta_ref_mhz", cfg.coupling.delta_ref_mhz},
        {"v_inf_cm_s", cfg.coupling.v_inf_cm_s}}},
      {"scan",
       {{"from_mhz", cfg.scan.from_mhz},
        {"to_mhz", cfg.scan.to_mhz},
        {"points", cfg.scan.points},
        {"p_model", to_string(cfg.scan.p_model)},
        {"allow_out_of_window", cfg.scan.allow_out_of_window},
        {"report_excitation", cfg.scan.report_excitation}}},
      {"output", {{"path", cfg.output.path}, {"precision", cfg.output.precision}}},
  };
}

void check_run_config(const RunConfig& cfg) {
  if (!(cfg.cavity.length_cm > 0.0)) throw ConfigError("cavity.length_cm", "must be positive");
  if (!(cfg.cavity.n_atoms > 0.0)) throw ConfigError("cavity.n_atoms", "must be positive");
  if (!(cfg.cavity.density_cm3 > 0.0)) throw ConfigError("cavity.density_cm3", "must be positive");
  if (!(cfg.coupling.v_inf_cm_s > 0.0)) throw ConfigError("coupling.v_inf_cm_s", "must be positive");
  if (cfg.coupling.mode == CouplingMode::anchored) {
    if (!(cfg.coupling.omega_tilde_ref_mhz > 0.0))
      throw ConfigError("coupling.omega_tilde_ref_mhz", "must be positive");
    if (!(cfg.coupling.delta_ref_mhz < 0.0)) throw ConfigError("coupling.delta_ref_mhz", "must be negative");
  }
  if (!(cfg.scan.to_mhz < 0.0)) throw ConfigError("scan.to_mhz", "must be negative (red detuning)");
  if (!(cfg.scan.from_mhz < cfg.scan.to_mhz)) throw ConfigError("scan.from_mhz", "must be below scan.to_mhz");
  if (cfg.scan.points < 2) throw ConfigError("scan.points", "need at least 2 points");
  if (cfg.output.precision < 6) throw ConfigError("output.precision", "must be at least 6");
}

PhysicalParams physical_params(const RunConfig& cfg) { return resolve_params(cfg.species); }

CavityConfig cavity_config(const RunConfig& cfg, const PhysicalParams& params) {
  CavityConfig c;
  c.length = cfg.cavity.length_cm;
  c.omega_c = params.omega_a + mhz_to_rad_s(cfg.coupling.delta_ref_mhz);
  c.n_atoms_total = cfg.cavity.n_atoms;
  c.density = cfg.cavity.density_cm3;
  c.coupling_mode = cfg.coupling.mode;
  c.omega_tilde_ref = mhz_to_rad_s(cfg.coupling.omega_tilde_ref_mhz);
  c.delta_ref = mhz_to_rad_s(cfg.coupling.delta_ref_mhz);
  return c;
}

ScanConfig scan_config(const RunConfig& cfg) {
  ScanConfig s;
  s.from_delta = mhz_to_rad_s(cfg.scan.from_mhz);
  s.to_delta = mhz_to_rad_s(cfg.scan.to_mhz);
  s.points = cfg.scan.points;
  s.p_model = cfg.scan.p_model;
  s.allow_out_of_window = cfg.scan.allow_out_of_window;
  s.report_excitation = cfg.scan.report_excitation;
  s.v_inf = cfg.coupling.v_inf_cm_s;
  return s;
}

}  // namespace cavcoll
