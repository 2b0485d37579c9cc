#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levicav/types.hpp"

namespace levicav {

/// Configuration error with file/line context; the CLI maps this to exit
/// code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One sweep axis over a dotted key such as "sphere.radius_nm".
struct SweepAxis {
  std::string key;
  std::vector<double> values;
};

/// Declarative run configuration, parsed from an INI-style file with
/// explicit unit suffixes on every physical key. Unknown sections or keys
/// are rejected.
struct RunConfig {
  std::string name = "run";

  // sphere
  double radius_nm = 50.0;
  double density_g_cm3 = 2.0;
  bool high_index = true;
  double epsilon_real = 2.0;
  double epsilon_imag = 0.0;
  std::optional<double> bulk_loss_db_km;
  double bb_im_factor = 0.1;

  // cavity
  double length_cm = 1.0;
  double waist_um = 25.0;
  double wavelength_um = 1.0;
  double finesse = 5e4;
  double loss_ppm_round_trip = 0.0;

  // environment
  double pressure_torr = 1e-10;
  double temperature_k = 300.0;

  // drive
  std::optional<double> intensity_w_per_um2;
  std::optional<double> omega_m_mhz;
  double zeta = 0.0;
  double delta_t = 0.0;

  // sweep
  std::string target = "noise_budget";
  std::vector<SweepAxis> axes;
  bool zipped = false;

  // output
  std::string output_file = "sweep.csv";

  std::string raw_text;  // original file contents (hashed into outputs)

  Sphere make_sphere() const;
  CavitySetup make_cavity() const;
  Environment make_environment() const;
  /// Trap intensity in W/m^2, from either the intensity or the requested
  /// mechanical frequency.
  double make_intensity(const Sphere& sphere) const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace levicav
