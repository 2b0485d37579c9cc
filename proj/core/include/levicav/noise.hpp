#pragma once

#include <string>

#include "levicav/trap.hpp"
#include "levicav/types.hpp"

namespace levicav {

/// Background-gas damping and heating. In the no-gas limit (P = 0) the
/// time/quality figures saturate to +inf and no_gas_limit is set.
struct GasChannel {
  double gamma_g = 0;         // momentum damping rate, 1/s
  double heat_time = 0;       // tau_g = hbar omega_m / (gamma_g kB T), s
  double q_factor = 0;        // omega_m / gamma_g
  double n_osc = 0;           // omega_m tau_g / 2 pi
  double collision_rate = 0;  // R_coll ~ pi P vbar r^2 / kB T
  bool free_molecular_ok = true;  // mean free path >= 10 r
  bool no_gas_limit = false;
};

struct RecoilChannel {
  double gamma_sc = 0;  // (2/5)(omega_r/omega_m) R_sc
  double n_osc = 0;     // (5/8pi^3)((eps+2)/(eps-1))(lambda^3/V)
};

struct ShotNoiseChannel {
  double spectral_density = 0;  // S(2 omega_m), 1/(rad/s) units of the paper form
  double jump_rate = 0;         // R_{0->2}
  double n_osc = 0;             // assembled from the spectral density
  double n_osc_closed_form = 0; // ((eps+2)/(eps-1)) Vc rho/(3 pi c hbar k^3) ...
};

struct AnisotropyChannel {
  double eps_theta = 0;    // trap-frequency modulation depth
  double jump_ratio = 0;   // R_{0->2} / omega_m
  double gamma_theta = 0;  // rotational damping, 1/s
};

/// gamma_g = (16/pi) P / (vbar r rho). Free-molecular check: flag set in
/// gas_heating when the estimated mean free path < 10 r.
double gas_damping(const Sphere& sphere, const Environment& env);

GasChannel gas_heating(const Sphere& sphere, const Environment& env,
                       double omega_m);

RecoilChannel recoil_jump_rate(const Sphere& sphere, const TrapParams& trap);

/// Parametric heating by intensity shot noise; photon_number is the trap
/// mode occupation N1.
ShotNoiseChannel shot_noise_heating(const TrapParams& trap,
                                    const CavitySetup& cavity,
                                    double photon_number);

/// Blackbody-recoil jump rate (absorption side at temperature_k; emission
/// analogue via temperature_k = T_int).
double blackbody_jump_rate(const Sphere& sphere, double temperature_k,
                           double omega_m);

/// Prolate-spheroid anisotropy channel. aspect = a/b >= 1; mean_sq_rotation
/// is <omega_rot^2> in (rad/s)^2.
AnisotropyChannel anisotropy_heating(double aspect, const Sphere& sphere,
                                     const Environment& env, double omega_m,
                                     double mean_sq_rotation);

/// Equipartition default <omega_rot^2> = kB T / I_theta, I_theta = (2/5) m r^2.
double equipartition_rotation_rate_sq(const Sphere& sphere, double temperature_k);

struct BudgetOptions {
  bool include_shot_noise = true;
  bool include_blackbody = true;
  bool include_anisotropy = false;
  double aspect = 1.0;              // a/b for the anisotropy channel
  double internal_temperature = 0;  // 0 = use environment temperature
};

struct NoiseBudget {
  GasChannel gas;
  RecoilChannel recoil;
  ShotNoiseChannel shot_noise;
  double gamma_bb = 0;       // combined absorption+emission jump rate
  double n_osc_bb = 0;
  AnisotropyChannel anisotropy;
  double n_osc_anisotropy = 0;
  std::string dominant;      // channel with the smallest N_osc
  double n_osc_min = 0;
};

NoiseBudget noise_budget(const Sphere& sphere, const Environment& env,
                         const TrapParams& trap, const CavitySetup& cavity,
                         const BudgetOptions& options = {});

}  // namespace levicav
