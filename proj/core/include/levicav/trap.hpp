#pragma once

#include "levicav/types.hpp"

namespace levicav {

/// Derived optical-trap and opto-mechanical parameters for a sphere held at
/// a standing-wave antinode.
struct TrapParams {
  double omega_m = 0;       // mechanical frequency, rad/s
  double trap_depth = 0;    // U0, J
  double x_zpf = 0;         // zero-point length sqrt(hbar/2 m omega_m), m
  double mass = 0;          // kg
  double recoil_omega = 0;  // hbar k^2 / 2m, rad/s
  double scatter_rate = 0;  // photon scattering rate R_sc, 1/s
  double coupling_g = 0;    // opto-mechanical coupling, rad/s
  double kappa_sc = 0;      // sphere-induced cavity loss, rad/s
  double phi = 0;           // recoil parameter (4 pi^2/5)(V/lambda^3) Re cm
  double intensity = 0;     // I0 used, W/m^2
  double photon_number = 0; // trap-mode intra-cavity photon number N1
};

/// omega_m = sqrt(6 k^2 I0 Re[(eps-1)/(eps+2)] / (rho c)).
double trap_frequency(const Sphere& sphere, double intensity, double wavelength);

/// Trap intensity that produces a given omega_m (inverse of trap_frequency).
double intensity_for_frequency(const Sphere& sphere, double omega_m,
                               double wavelength);

/// U0 = (3 I0 V / c) Re[(eps-1)/(eps+2)], J.
double trap_depth(const Sphere& sphere, double intensity);
double trap_depth_kelvin(const Sphere& sphere, double intensity);

/// g = (3V/4Vc) Re[(eps-1)/(eps+2)] omega_optical.
double optomech_coupling(const Sphere& sphere, const CavitySetup& cavity);

/// R_sc = 48 pi^3 (I0 V^2 / lambda^4 hbar omega) cm^2.
double scattering_rate(const Sphere& sphere, double intensity, double wavelength);

/// kappa_sc = 12 pi^2 omega (V^2 / lambda^3 Vc) cm^2.
double sphere_cavity_loss(const Sphere& sphere, const CavitySetup& cavity);

/// omega_r = hbar k^2 / (2 rho V).
double recoil_frequency(const Sphere& sphere, double wavelength);

/// Recoil parameter phi = (4 pi^2 / 5)(V/lambda^3) Re[(eps-1)/(eps+2)].
double recoil_parameter(const Sphere& sphere, double wavelength);

/// Intra-cavity photon number of the trap mode at antinode peak intensity
/// I0: N1 = 2 I0 Vc / (c hbar omega). Equivalent to the restoring-force
/// identity m omega_m^2 = 4 hbar g k^2 N1.
double trap_photon_number(const Sphere& sphere, const CavitySetup& cavity,
                          double intensity);

TrapParams trap_params(const Sphere& sphere, const CavitySetup& cavity,
                       double intensity);
/// Same, choosing intensity to realize the requested mechanical frequency.
TrapParams trap_params_at_frequency(const Sphere& sphere,
                                    const CavitySetup& cavity, double omega_m);

}  // namespace levicav
