#pragma once

#include <string>
#include <vector>

#include "levicav/types.hpp"

namespace levicav {

/// Internal-temperature equilibrium of the sphere: optical absorption
/// balanced against gas cooling and net blackbody exchange.
struct ThermalState {
  double t_internal = 0;     // K
  double p_absorbed = 0;     // W
  double p_gas = 0;          // W, signed (negative = cooling)
  double p_blackbody = 0;    // W, signed net (absorb - radiate)
  bool converged = false;
  double residual = 0;       // W at the reported root
};

/// P_abs = 12 pi (I0/lambda) V Im[(eps-1)/(eps+2)].
double absorbed_power(const Sphere& sphere, double intensity, double wavelength);

/// Gas heat exchange, negative when T_int > T (cooling).
double gas_cooling_power(const Sphere& sphere, const Environment& env,
                         double t_internal);

/// Blackbody absorption at T_env minus radiation at T_int; each side
/// (72 zeta(5)/pi^2)(V / c^3 hbar^4) Im_bb (kB T)^5.
double blackbody_net_power(const Sphere& sphere, double t_env, double t_internal);

/// Root of P_abs + P_gas(T) + P_bb(T) = 0 on [T_env, 1e5 K]; throws
/// std::runtime_error("thermal runaway") when the bracket has no root.
ThermalState equilibrium_temperature(const Sphere& sphere, const Environment& env,
                                     double intensity, double wavelength,
                                     double t_tol = 1e-3);

struct TemperatureCell {
  double pressure = 0;    // Pa
  double intensity = 0;   // W/m^2
  double t_internal = 0;  // K (NaN when status != "ok")
  std::string status;     // "ok" or "runaway"
};

std::vector<TemperatureCell> temperature_map(
    const Sphere& sphere, const Environment& env_template,
    const std::vector<double>& pressures_pa,
    const std::vector<double>& intensities, double wavelength);

}  // namespace levicav
