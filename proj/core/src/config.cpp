#include "levicav/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "levicav/trap.hpp"
#include "levicav/units.hpp"

namespace levicav {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& v, int line) {
  try {
    size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line) +
                      ": expected a number, got '" + v + "'");
  }
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config line " + std::to_string(line) +
                    ": expected a boolean, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, int line) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_number(item, line));
  }
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  cfg.raw_text = text;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;

  // per-axis staging: axis blocks accumulate key/start/stop/points/scale
  struct AxisSpec {
    std::string key;
    std::vector<double> values;
    double start = 0, stop = 0;
    int points = 0;
    std::string scale = "log";
    int line = 0;
  };
  std::vector<AxisSpec> axis_specs;

  bool saw_intensity = false, saw_omega = false, saw_eps = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(s.substr(1, s.size() - 2));
      static const char* known[] = {"scenario", "sphere",  "cavity",
                                    "environment", "drive", "sweep",
                                    "axis",     "output"};
      if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
            return section == k;
          }) == std::end(known))
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": unknown section [" + section + "]");
      if (section == "axis") axis_specs.push_back({});
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    size_t hash = val.find('#');
    if (hash != std::string::npos) val = trim(val.substr(0, hash));

    auto unknown = [&]() {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": unknown key '" + key + "' in [" + section + "]");
    };

    if (section == "scenario") {
      if (key == "name") cfg.name = val;
      else unknown();
    } else if (section == "sphere") {
      if (key == "radius_nm") cfg.radius_nm = parse_number(val, lineno);
      else if (key == "density_g_cm3") cfg.density_g_cm3 = parse_number(val, lineno);
      else if (key == "high_index") cfg.high_index = parse_bool(val, lineno);
      else if (key == "epsilon_real") {
        cfg.epsilon_real = parse_number(val, lineno);
        cfg.high_index = false;
        saw_eps = true;
      } else if (key == "epsilon_imag") cfg.epsilon_imag = parse_number(val, lineno);
      else if (key == "bulk_loss_db_km") cfg.bulk_loss_db_km = parse_number(val, lineno);
      else if (key == "bb_im_factor") cfg.bb_im_factor = parse_number(val, lineno);
      else unknown();
    } else if (section == "cavity") {
      if (key == "length_cm") cfg.length_cm = parse_number(val, lineno);
      else if (key == "waist_um") cfg.waist_um = parse_number(val, lineno);
      else if (key == "wavelength_um") cfg.wavelength_um = parse_number(val, lineno);
      else if (key == "finesse") cfg.finesse = parse_number(val, lineno);
      else if (key == "loss_ppm_round_trip")
        cfg.loss_ppm_round_trip = parse_number(val, lineno);
      else unknown();
    } else if (section == "environment") {
      if (key == "pressure_torr") cfg.pressure_torr = parse_number(val, lineno);
      else if (key == "temperature_k") cfg.temperature_k = parse_number(val, lineno);
      else unknown();
    } else if (section == "drive") {
      if (key == "intensity_w_per_um2") {
        cfg.intensity_w_per_um2 = parse_number(val, lineno);
        saw_intensity = true;
      } else if (key == "omega_m_mhz") {
        cfg.omega_m_mhz = parse_number(val, lineno);
        saw_omega = true;
      } else if (key == "zeta") cfg.zeta = parse_number(val, lineno);
      else if (key == "delta_t") cfg.delta_t = parse_number(val, lineno);
      else unknown();
    } else if (section == "sweep") {
      if (key == "target") cfg.target = val;
      else if (key == "mode") {
        if (val == "zip") cfg.zipped = true;
        else if (val == "cartesian") cfg.zipped = false;
        else
          throw ConfigError("config line " + std::to_string(lineno) +
                            ": mode must be cartesian or zip");
      } else unknown();
    } else if (section == "axis") {
      if (axis_specs.empty())
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": axis key outside [axis] block");
      AxisSpec& ax = axis_specs.back();
      ax.line = lineno;
      if (key == "key") ax.key = val;
      else if (key == "values") ax.values = parse_list(val, lineno);
      else if (key == "start") ax.start = parse_number(val, lineno);
      else if (key == "stop") ax.stop = parse_number(val, lineno);
      else if (key == "points") ax.points = static_cast<int>(parse_number(val, lineno));
      else if (key == "scale") ax.scale = val;
      else unknown();
    } else if (section == "output") {
      if (key == "file") cfg.output_file = val;
      else unknown();
    } else {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": key outside any section");
    }
  }

  if (saw_intensity && saw_omega)
    throw ConfigError("config: give either intensity_w_per_um2 or omega_m_mhz, not both");
  if (saw_eps && cfg.high_index)
    throw ConfigError("config: epsilon_real conflicts with high_index = true");

  for (const AxisSpec& ax : axis_specs) {
    if (ax.key.empty())
      throw ConfigError("config line " + std::to_string(ax.line) +
                        ": [axis] block needs a key");
    SweepAxis axis;
    axis.key = ax.key;
    if (!ax.values.empty()) {
      axis.values = ax.values;
    } else {
      if (ax.points < 2)
        throw ConfigError("config line " + std::to_string(ax.line) +
                          ": [axis] needs values or start/stop/points >= 2");
      axis.values.resize(ax.points);
      if (ax.scale == "log") {
        if (!(ax.start > 0) || !(ax.stop > ax.start))
          throw ConfigError("config line " + std::to_string(ax.line) +
                            ": log axis needs stop > start > 0");
        double l0 = std::log(ax.start), l1 = std::log(ax.stop);
        for (int i = 0; i < ax.points; ++i)
          axis.values[i] = std::exp(l0 + (l1 - l0) * i / (ax.points - 1));
      } else if (ax.scale == "linear") {
        for (int i = 0; i < ax.points; ++i)
          axis.values[i] =
              ax.start + (ax.stop - ax.start) * i / (ax.points - 1);
      } else {
        throw ConfigError("config line " + std::to_string(ax.line) +
                          ": scale must be log or linear");
      }
    }
    if (axis.values.empty())
      throw ConfigError("config line " + std::to_string(ax.line) +
                        ": empty axis");
    cfg.axes.push_back(std::move(axis));
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

Sphere RunConfig::make_sphere() const {
  double r = units::nm_to_m(radius_nm);
  double rho = density_g_cm3 * 1000.0;
  if (high_index) return Sphere::high_index(r, rho, bb_im_factor);
  double im = epsilon_imag;
  if (bulk_loss_db_km)
    im = bulk_loss_to_im_eps(*bulk_loss_db_km, epsilon_real,
                             wavelength_um * 1e-6);
  return Sphere(r, rho, epsilon_real, im, bb_im_factor);
}

CavitySetup RunConfig::make_cavity() const {
  double length = length_cm * 1e-2;
  double loss_kappa =
      loss_ppm_round_trip * 1e-6 * constants::c0 / (2.0 * length);
  return CavitySetup::from_finesse(length, waist_um * 1e-6,
                                   wavelength_um * 1e-6, finesse, loss_kappa);
}

Environment RunConfig::make_environment() const {
  return Environment::air(units::torr_to_pa(pressure_torr), temperature_k);
}

double RunConfig::make_intensity(const Sphere& sphere) const {
  if (intensity_w_per_um2) return units::w_per_um2_to_si(*intensity_w_per_um2);
  if (omega_m_mhz)
    return intensity_for_frequency(sphere, units::mhz_to_rad_s(*omega_m_mhz),
                                   wavelength_um * 1e-6);
  return units::w_per_um2_to_si(1.0);
}

}  // namespace levicav
