#pragma once

#include <string>
#include <vector>

namespace levicav {

/// Canonical scenario parameters used by the figure generators: high-index
/// 50 nm sphere at rho = 2 g/cm^3 in a 1 um standing wave, 1 cm / 25 um
/// cavity, room-temperature air.
struct FigureDefaults {
  double radius_nm = 50.0;
  double density_g_cm3 = 2.0;
  double wavelength_um = 1.0;
  double cavity_length_cm = 1.0;
  double cavity_waist_um = 25.0;
  double temperature_k = 300.0;
};

/// Generate the data files for one figure id in {1c, 1d, 2a, 2b, 2c, 3, 4,
/// 5, 6}; returns the written paths. Deterministic for fixed inputs.
std::vector<std::string> write_figure(const std::string& fig_id,
                                      const std::string& out_dir,
                                      const FigureDefaults& d = {});

/// The ids write_figure accepts.
std::vector<std::string> figure_ids();

}  // namespace levicav
