#pragma once

#include <vector>

#include "levicav/trap.hpp"
#include "levicav/types.hpp"

namespace levicav {

/// Linearized two-mode cooling configuration. The drive amplitude follows
/// from the trap photon number: Omega_m = 2 g k x_zpf sqrt(N1) sqrt(2 zeta),
/// which reduces to sqrt(zeta g omega_m) for a self-consistent trap.
struct CoolingConfig {
  double omega_m = 0;       // rad/s
  double kappa = 0;         // rad/s
  double delta2 = 0;        // cooling detuning, rad/s (< 0 cools)
  double zeta = 0;          // intensity ratio
  double omega_drive = 0;   // Omega_m, rad/s
  double photon_number = 0; // N1
  double x_shift = 0;       // x0 = zeta / k
  // perturbative validity flags (data, never clamped)
  bool zeta_ok = true;          // zeta <= 1
  bool drive_vs_kappa_ok = true;   // Omega_m <= kappa
  bool drive_vs_omega_ok = true;   // Omega_m <= omega_m
};

CoolingConfig make_cooling_config(const TrapParams& trap,
                                  const CavitySetup& cavity, double zeta,
                                  double delta2);

struct ScatterRates {
  double anti_stokes = 0;  // R_opt,-
  double stokes = 0;       // R_opt,+
  double net = 0;          // Gamma = R- - R+
};

/// R_opt,-/+ = kappa Omega_m^2 / ((delta2 +/- omega_m)^2 + (kappa/2)^2).
ScatterRates scattering_rates(const CoolingConfig& cfg);

/// Optimal detuning -(1/2) sqrt(kappa^2 + 4 omega_m^2) and the sideband
/// limit there, n_tilde_min = (sqrt(kappa^2+4wm^2) - 2wm)/(4wm).
double optimal_detuning(double kappa, double omega_m);
double sideband_limit_min(double kappa, double omega_m);

struct PhononLimit {
  double n_tilde = 0;     // R+/Gamma at the given detuning
  double delta2_opt = 0;  // detuning minimizing n_tilde
};
PhononLimit phonon_limit(const CoolingConfig& cfg);

/// <n_f> = n_tilde + gamma_sc / Gamma; throws when Gamma <= 0.
double steady_phonons(const CoolingConfig& cfg, double gamma_sc);

/// Recoil-limited closed form: objective u^2/16 + phi/u over u = kappa/wm,
/// minimized at u* = 2 phi^(1/3) with value 3 phi^(2/3)/4.
double nf_recoil_objective(double kappa_over_omega, double phi);
struct RecoilOptimum {
  double kappa_over_omega = 0;
  double n_min = 0;
};
RecoilOptimum recoil_limited_optimum(double phi);

/// Bose-occupation temperature hbar wm / (kB ln(1 + 1/n)).
double bose_temperature(double n_phonons, double omega_m);

struct CoolingPoint {
  double finesse = 0;
  double kappa = 0;
  double delta2 = 0;       // optimal detuning found
  double zeta = 0;         // optimal intensity ratio
  double omega_drive = 0;  // Omega_m at the optimum
  double gamma_cool = 0;   // Gamma
  double n_tilde = 0;      // sideband-limit-only phonon number at delta2
  double n_tilde_min = 0;  // sideband limit at its own optimal detuning
  double n_f = 0;          // full steady-state phonon number
  bool feasible = true;
  bool constraint_zeta = false;   // zeta = 1/2 active
  bool constraint_kappa = false;  // Omega_m = kappa/2 active
  bool constraint_omega = false;  // Omega_m = omega_m/2 active
};

/// Fig.-2a-style optimization: for each finesse, pick (delta2, zeta)
/// minimizing <n_f> subject to zeta, Omega_m/kappa, Omega_m/omega_m < 1/2.
std::vector<CoolingPoint> optimize_cooling(const Sphere& sphere,
                                           double cavity_length,
                                           double cavity_waist,
                                           double wavelength, double omega_m,
                                           const std::vector<double>& finesses);

}  // namespace levicav
