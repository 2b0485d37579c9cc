#include "levicav/trap.hpp"

#include <cmath>
#include <stdexcept>

namespace levicav {

using constants::c0;
using constants::hbar;
using constants::k_boltzmann;
using constants::pi;

double trap_frequency(const Sphere& sphere, double intensity, double wavelength) {
  if (intensity < 0) throw std::invalid_argument("trap_frequency: I0 < 0");
  double k = 2.0 * pi / wavelength;
  return std::sqrt(6.0 * k * k * intensity * sphere.cm_real() /
                   (sphere.density() * c0));
}

double intensity_for_frequency(const Sphere& sphere, double omega_m,
                               double wavelength) {
  double k = 2.0 * pi / wavelength;
  return omega_m * omega_m * sphere.density() * c0 /
         (6.0 * k * k * sphere.cm_real());
}

double trap_depth(const Sphere& sphere, double intensity) {
  if (intensity < 0) throw std::invalid_argument("trap_depth: I0 < 0");
  return 3.0 * intensity * sphere.volume() / c0 * sphere.cm_real();
}

double trap_depth_kelvin(const Sphere& sphere, double intensity) {
  return trap_depth(sphere, intensity) / k_boltzmann;
}

double optomech_coupling(const Sphere& sphere, const CavitySetup& cavity) {
  return 3.0 * sphere.volume() / (4.0 * cavity.mode_volume()) *
         sphere.cm_real() * cavity.omega_optical();
}

double scattering_rate(const Sphere& sphere, double intensity, double wavelength) {
  if (intensity < 0) throw std::invalid_argument("scattering_rate: I0 < 0");
  double omega = 2.0 * pi * c0 / wavelength;
  double v = sphere.volume();
  double cm = sphere.cm_real();
  return 48.0 * pi * pi * pi * intensity * v * v /
         (std::pow(wavelength, 4) * hbar * omega) * cm * cm;
}

double sphere_cavity_loss(const Sphere& sphere, const CavitySetup& cavity) {
  double v = sphere.volume();
  double cm = sphere.cm_real();
  return 12.0 * pi * pi * cavity.omega_optical() * v * v /
         (std::pow(cavity.wavelength(), 3) * cavity.mode_volume()) * cm * cm;
}

double recoil_frequency(const Sphere& sphere, double wavelength) {
  double k = 2.0 * pi / wavelength;
  return hbar * k * k / (2.0 * sphere.mass());
}

double recoil_parameter(const Sphere& sphere, double wavelength) {
  return 4.0 * pi * pi / 5.0 * sphere.volume() /
         std::pow(wavelength, 3) * sphere.cm_real();
}

double trap_photon_number(const Sphere& sphere, const CavitySetup& cavity,
                          double intensity) {
  (void)sphere;
  return 2.0 * intensity * cavity.mode_volume() /
         (c0 * hbar * cavity.omega_optical());
}

TrapParams trap_params(const Sphere& sphere, const CavitySetup& cavity,
                       double intensity) {
  TrapParams t;
  double lambda = cavity.wavelength();
  t.intensity = intensity;
  t.omega_m = trap_frequency(sphere, intensity, lambda);
  t.trap_depth = trap_depth(sphere, intensity);
  t.mass = sphere.mass();
  t.x_zpf = t.omega_m > 0 ? std::sqrt(hbar / (2.0 * t.mass * t.omega_m)) : 0.0;
  t.recoil_omega = recoil_frequency(sphere, lambda);
  t.scatter_rate = scattering_rate(sphere, intensity, lambda);
  t.coupling_g = optomech_coupling(sphere, cavity);
  t.kappa_sc = sphere_cavity_loss(sphere, cavity);
  t.phi = recoil_parameter(sphere, lambda);
  t.photon_number = trap_photon_number(sphere, cavity, intensity);
  return t;
}

TrapParams trap_params_at_frequency(const Sphere& sphere,
                                    const CavitySetup& cavity, double omega_m) {
  return trap_params(
      sphere, cavity,
      intensity_for_frequency(sphere, omega_m, cavity.wavelength()));
}

}  // namespace levicav
