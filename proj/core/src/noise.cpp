#include "levicav/noise.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace levicav {

using constants::c0;
using constants::hbar;
using constants::k_boltzmann;
using constants::pi;

double gas_damping(const Sphere& sphere, const Environment& env) {
  if (env.pressure() == 0) return 0.0;
  return 16.0 / pi * env.pressure() /
         (env.mean_speed() * sphere.radius() * sphere.density());
}

GasChannel gas_heating(const Sphere& sphere, const Environment& env,
                       double omega_m) {
  GasChannel g;
  g.gamma_g = gas_damping(sphere, env);
  g.free_molecular_ok = env.mean_free_path() >= 10.0 * sphere.radius();
  double kT = k_boltzmann * env.temperature();
  if (g.gamma_g == 0) {
    g.no_gas_limit = true;
    double inf = std::numeric_limits<double>::infinity();
    g.heat_time = inf;
    g.q_factor = inf;
    g.n_osc = inf;
    g.collision_rate = 0;
    return g;
  }
  g.heat_time = hbar * omega_m / (g.gamma_g * kT);
  g.q_factor = omega_m / g.gamma_g;
  g.n_osc = omega_m * g.heat_time / (2.0 * pi);
  g.collision_rate =
      pi * env.pressure() * env.mean_speed() * sphere.radius() * sphere.radius() / kT;
  return g;
}

RecoilChannel recoil_jump_rate(const Sphere& sphere, const TrapParams& trap) {
  RecoilChannel r;
  if (trap.omega_m > 0)
    r.gamma_sc = 0.4 * trap.recoil_omega / trap.omega_m * trap.scatter_rate;
  // Closed form (5/8pi^3)((eps+2)/(eps-1))(lambda^3/V); the wavelength is
  // recovered from omega_r = hbar k^2/2m so TrapParams stays self-contained.
  double k = std::sqrt(2.0 * trap.mass * trap.recoil_omega / hbar);
  double lam = 2.0 * pi / k;
  r.n_osc = 5.0 / (8.0 * pi * pi * pi) * sphere.cm_inverse_real() *
            std::pow(lam, 3) / sphere.volume();
  return r;
}

ShotNoiseChannel shot_noise_heating(const TrapParams& trap,
                                    const CavitySetup& cavity,
                                    double photon_number) {
  if (!(photon_number > 0))
    throw std::invalid_argument("shot_noise_heating: photon number must be > 0");
  ShotNoiseChannel s;
  double wm = trap.omega_m;
  double kappa = cavity.kappa();
  s.spectral_density = 1.0 / (pi * photon_number) * 4.0 * kappa /
                       (kappa * kappa + 16.0 * wm * wm);
  // R_{0->2} = (pi wm^2/16) S(2 wm) (n+2)(n+1) at n = 0
  s.jump_rate = pi * wm * wm / 16.0 * s.spectral_density * 2.0;
  s.n_osc = wm / (2.0 * pi * s.jump_rate);
  s.n_osc_closed_form =
      photon_number * (kappa * kappa + 16.0 * wm * wm) / (pi * wm * kappa);
  return s;
}

double blackbody_jump_rate(const Sphere& sphere, double temperature_k,
                           double omega_m) {
  if (!(temperature_k > 0))
    throw std::invalid_argument("blackbody_jump_rate: T must be > 0");
  double kt = k_boltzmann * temperature_k;
  return 2.0 * std::pow(pi, 4) / 63.0 * std::pow(kt, 6) /
         (std::pow(c0, 5) * std::pow(hbar, 5) * sphere.density() * omega_m) *
         sphere.eps_bb_im_factor();
}

AnisotropyChannel anisotropy_heating(double aspect, const Sphere& sphere,
                                     const Environment& env, double omega_m,
                                     double mean_sq_rotation) {
  if (aspect < 1.0)
    throw std::invalid_argument("anisotropy_heating: aspect a/b must be >= 1");
  AnisotropyChannel a;
  a.eps_theta = 9.0 / 40.0 * sphere.cm_real() *
                (std::pow(aspect, 4.0 / 3.0) - 1.0);
  if (mean_sq_rotation > 0) {
    double wrot = std::sqrt(mean_sq_rotation);
    a.jump_ratio = a.eps_theta * a.eps_theta * std::sqrt(2.0 * pi) * omega_m /
                   (8.0 * wrot) *
                   std::exp(-omega_m * omega_m / (2.0 * mean_sq_rotation));
  }
  if (env.pressure() > 0)
    a.gamma_theta = 5.0 * std::sqrt(3.0 / (2.0 * pi)) *
                    env.angular_accommodation() * env.pressure() /
                    (env.rms_speed() * sphere.radius() * sphere.density());
  return a;
}

double equipartition_rotation_rate_sq(const Sphere& sphere, double temperature_k) {
  double inertia = 0.4 * sphere.mass() * sphere.radius() * sphere.radius();
  return k_boltzmann * temperature_k / inertia;
}

NoiseBudget noise_budget(const Sphere& sphere, const Environment& env,
                         const TrapParams& trap, const CavitySetup& cavity,
                         const BudgetOptions& options) {
  NoiseBudget b;
  b.gas = gas_heating(sphere, env, trap.omega_m);
  b.recoil = recoil_jump_rate(sphere, trap);

  double n_min = b.recoil.n_osc;
  b.dominant = "recoil";
  if (b.gas.n_osc < n_min) {
    n_min = b.gas.n_osc;
    b.dominant = "gas";
  }

  if (options.include_shot_noise && trap.photon_number > 0) {
    b.shot_noise = shot_noise_heating(trap, cavity, trap.photon_number);
    if (b.shot_noise.n_osc < n_min) {
      n_min = b.shot_noise.n_osc;
      b.dominant = "shot_noise";
    }
  }
  if (options.include_blackbody && sphere.eps_bb_im_factor() > 0) {
    double t_int = options.internal_temperature > 0
                       ? options.internal_temperature
                       : env.temperature();
    b.gamma_bb = blackbody_jump_rate(sphere, env.temperature(), trap.omega_m) +
                 blackbody_jump_rate(sphere, t_int, trap.omega_m);
    b.n_osc_bb = trap.omega_m / (2.0 * pi * b.gamma_bb);
    if (b.n_osc_bb < n_min) {
      n_min = b.n_osc_bb;
      b.dominant = "blackbody";
    }
  }
  if (options.include_anisotropy && options.aspect > 1.0) {
    double wrot2 = equipartition_rotation_rate_sq(sphere, env.temperature());
    b.anisotropy =
        anisotropy_heating(options.aspect, sphere, env, trap.omega_m, wrot2);
    if (b.anisotropy.jump_ratio > 0) {
      b.n_osc_anisotropy = 1.0 / (2.0 * pi * b.anisotropy.jump_ratio);
      if (b.n_osc_anisotropy < n_min) {
        n_min = b.n_osc_anisotropy;
        b.dominant = "anisotropy";
      }
    }
  }
  b.n_osc_min = n_min;
  return b;
}

}  // namespace levicav
