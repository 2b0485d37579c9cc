#include "levicav/thermal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "levicav/numerics.hpp"

namespace levicav {

using constants::c0;
using constants::hbar;
using constants::k_boltzmann;
using constants::pi;
using constants::zeta5;

double absorbed_power(const Sphere& sphere, double intensity, double wavelength) {
  if (intensity < 0) throw std::invalid_argument("absorbed_power: I0 < 0");
  return 12.0 * pi * intensity / wavelength * sphere.volume() * sphere.cm_imag();
}

double gas_cooling_power(const Sphere& sphere, const Environment& env,
                         double t_internal) {
  if (!(t_internal > 0))
    throw std::invalid_argument("gas_cooling_power: T_int must be > 0");
  double gsh = env.specific_heat_ratio();
  double r = sphere.radius();
  return -env.energy_accommodation() * std::sqrt(2.0 / (3.0 * pi)) * pi * r * r *
         env.pressure() * env.rms_speed() * (gsh + 1.0) / (gsh - 1.0) *
         (t_internal / env.temperature() - 1.0);
}

namespace {
double bb_one_sided(const Sphere& sphere, double t) {
  double kt = k_boltzmann * t;
  return 72.0 * zeta5 / (pi * pi) * sphere.volume() /
         (std::pow(c0, 3) * std::pow(hbar, 4)) * sphere.eps_bb_im_factor() *
         std::pow(kt, 5);
}
}  // namespace

double blackbody_net_power(const Sphere& sphere, double t_env, double t_internal) {
  if (!(t_env > 0) || !(t_internal > 0))
    throw std::invalid_argument("blackbody_net_power: temperatures must be > 0");
  return bb_one_sided(sphere, t_env) - bb_one_sided(sphere, t_internal);
}

ThermalState equilibrium_temperature(const Sphere& sphere, const Environment& env,
                                     double intensity, double wavelength,
                                     double t_tol) {
  ThermalState st;
  st.p_absorbed = absorbed_power(sphere, intensity, wavelength);

  auto balance = [&](double t) {
    return st.p_absorbed + gas_cooling_power(sphere, env, t) +
           blackbody_net_power(sphere, env.temperature(), t);
  };

  double t_lo = env.temperature();
  double t_hi = 1e5;
  if (st.p_absorbed == 0) {
    st.t_internal = t_lo;
    st.converged = true;
    st.p_gas = gas_cooling_power(sphere, env, t_lo);
    st.p_blackbody = blackbody_net_power(sphere, env.temperature(), t_lo);
    st.residual = 0;
    return st;
  }
  double f_lo = balance(t_lo);
  double f_hi = balance(t_hi);
  if (f_lo <= 0) {
    // absorbed power nonpositive at ambient: equilibrium at T_env
    st.t_internal = t_lo;
    st.converged = true;
  } else if (f_hi > 0) {
    throw std::runtime_error(
        "thermal runaway: no energy balance below 1e5 K (melting regime)");
  } else {
    st.t_internal = numerics::bracketed_root(balance, t_lo, t_hi, t_tol);
    st.converged = true;
  }
  st.p_gas = gas_cooling_power(sphere, env, st.t_internal);
  st.p_blackbody = blackbody_net_power(sphere, env.temperature(), st.t_internal);
  st.residual = st.p_absorbed + st.p_gas + st.p_blackbody;
  return st;
}

std::vector<TemperatureCell> temperature_map(
    const Sphere& sphere, const Environment& env_template,
    const std::vector<double>& pressures_pa,
    const std::vector<double>& intensities, double wavelength) {
  if (pressures_pa.empty() || intensities.empty())
    throw std::invalid_argument("temperature_map: grids must be nonempty");
  std::vector<TemperatureCell> cells;
  cells.reserve(pressures_pa.size() * intensities.size());
  for (double p : pressures_pa) {
    Environment env = env_template.with_pressure(p);
    for (double i0 : intensities) {
      TemperatureCell cell;
      cell.pressure = p;
      cell.intensity = i0;
      try {
        cell.t_internal =
            equilibrium_temperature(sphere, env, i0, wavelength).t_internal;
        cell.status = "ok";
      } catch (const std::runtime_error&) {
        cell.t_internal = std::numeric_limits<double>::quiet_NaN();
        cell.status = "runaway";
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

}  // namespace levicav
