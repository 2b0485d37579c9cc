#include "levicav/cooling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levicav/noise.hpp"
#include "levicav/numerics.hpp"

namespace levicav {

using constants::hbar;
using constants::k_boltzmann;
using constants::pi;

CoolingConfig make_cooling_config(const TrapParams& trap,
                                  const CavitySetup& cavity, double zeta,
                                  double delta2) {
  if (zeta < 0 || zeta >= 1)
    throw std::invalid_argument("make_cooling_config: zeta must be in [0, 1)");
  CoolingConfig c;
  c.omega_m = trap.omega_m;
  c.kappa = cavity.kappa();
  c.delta2 = delta2;
  c.zeta = zeta;
  c.photon_number = trap.photon_number;
  double k = cavity.wavevector();
  c.omega_drive = 2.0 * trap.coupling_g * k * trap.x_zpf *
                  std::sqrt(trap.photon_number) * std::sqrt(2.0 * zeta);
  c.x_shift = zeta / k;
  c.zeta_ok = zeta <= 1.0;
  c.drive_vs_kappa_ok = c.omega_drive <= c.kappa;
  c.drive_vs_omega_ok = c.omega_drive <= c.omega_m;
  return c;
}

ScatterRates scattering_rates(const CoolingConfig& cfg) {
  ScatterRates r;
  double k2 = cfg.kappa / 2.0;
  double w2 = cfg.kappa * cfg.omega_drive * cfg.omega_drive;
  r.anti_stokes =
      w2 / ((cfg.delta2 + cfg.omega_m) * (cfg.delta2 + cfg.omega_m) + k2 * k2);
  r.stokes =
      w2 / ((cfg.delta2 - cfg.omega_m) * (cfg.delta2 - cfg.omega_m) + k2 * k2);
  r.net = r.anti_stokes - r.stokes;
  return r;
}

double optimal_detuning(double kappa, double omega_m) {
  return -0.5 * std::sqrt(kappa * kappa + 4.0 * omega_m * omega_m);
}

double sideband_limit_min(double kappa, double omega_m) {
  double s = std::sqrt(kappa * kappa + 4.0 * omega_m * omega_m);
  return (s - 2.0 * omega_m) / (4.0 * omega_m);
}

PhononLimit phonon_limit(const CoolingConfig& cfg) {
  if (!(cfg.delta2 < 0))
    throw std::invalid_argument("phonon_limit: requires delta2 < 0");
  ScatterRates r = scattering_rates(cfg);
  if (!(r.net > 0))
    throw std::runtime_error("phonon_limit: Gamma <= 0, no cooling");
  PhononLimit p;
  p.n_tilde = r.stokes / r.net;
  p.delta2_opt = optimal_detuning(cfg.kappa, cfg.omega_m);
  return p;
}

double steady_phonons(const CoolingConfig& cfg, double gamma_sc) {
  ScatterRates r = scattering_rates(cfg);
  if (!(r.net > 0))
    throw std::runtime_error("steady_phonons: Gamma <= 0, no cooling");
  return r.stokes / r.net + gamma_sc / r.net;
}

double nf_recoil_objective(double u, double phi) {
  return u * u / 16.0 + phi / u;
}

RecoilOptimum recoil_limited_optimum(double phi) {
  RecoilOptimum o;
  o.kappa_over_omega = 2.0 * std::cbrt(phi);
  o.n_min = 0.75 * std::cbrt(phi * phi);
  return o;
}

double bose_temperature(double n_phonons, double omega_m) {
  if (!(n_phonons > 0))
    throw std::invalid_argument("bose_temperature: n must be > 0");
  return hbar * omega_m / (k_boltzmann * std::log1p(1.0 / n_phonons));
}

std::vector<CoolingPoint> optimize_cooling(const Sphere& sphere,
                                           double cavity_length,
                                           double cavity_waist,
                                           double wavelength, double omega_m,
                                           const std::vector<double>& finesses) {
  if (finesses.empty())
    throw std::invalid_argument("optimize_cooling: finesse grid is empty");

  std::vector<CoolingPoint> out;
  out.reserve(finesses.size());
  for (double finesse : finesses) {
    CavitySetup cavity = CavitySetup::from_finesse(cavity_length, cavity_waist,
                                                   wavelength, finesse);
    TrapParams trap = trap_params_at_frequency(sphere, cavity, omega_m);
    double gamma_sc = recoil_jump_rate(sphere, trap).gamma_sc;
    double kappa = cavity.kappa();

    CoolingPoint pt;
    pt.finesse = finesse;
    pt.kappa = kappa;
    pt.n_tilde_min = sideband_limit_min(kappa, omega_m);

    // Gamma grows with Omega_m at fixed detuning while n_tilde does not
    // depend on it, so the drive sits at the largest value allowed by
    // zeta < 1/2, Omega_m/kappa < 1/2, Omega_m/omega_m < 1/2.
    double omega_zeta_cap = std::sqrt(0.5 * trap.coupling_g * omega_m);
    double omega_drive =
        std::min({omega_zeta_cap, kappa / 2.0, omega_m / 2.0});
    if (!(omega_drive > 0)) {
      pt.feasible = false;
      out.push_back(pt);
      continue;
    }
    double tol = 1e-9;
    pt.constraint_zeta = omega_drive >= omega_zeta_cap * (1.0 - tol);
    pt.constraint_kappa = omega_drive >= kappa / 2.0 * (1.0 - tol);
    pt.constraint_omega = omega_drive >= omega_m / 2.0 * (1.0 - tol);
    double zeta = omega_drive * omega_drive / (trap.coupling_g * omega_m);

    CoolingConfig cfg;
    cfg.omega_m = omega_m;
    cfg.kappa = kappa;
    cfg.zeta = zeta;
    cfg.omega_drive = omega_drive;
    cfg.photon_number = trap.photon_number;
    cfg.x_shift = zeta / cavity.wavevector();

    auto objective = [&](double delta2) {
      cfg.delta2 = delta2;
      ScatterRates r = scattering_rates(cfg);
      if (!(r.net > 0)) return 1e30;
      return (r.stokes + gamma_sc) / r.net;
    };
    double lo = -(omega_m + 3.0 * kappa);
    double hi = -std::max(kappa / 10.0, omega_m / 100.0);
    auto [delta2, nf] = numerics::golden_section_min(objective, lo, hi, 1e-12);

    cfg.delta2 = delta2;
    ScatterRates r = scattering_rates(cfg);
    pt.delta2 = delta2;
    pt.zeta = zeta;
    pt.omega_drive = omega_drive;
    pt.gamma_cool = r.net;
    pt.n_tilde = r.stokes / r.net;
    pt.n_f = nf;
    pt.feasible = r.net > 0;
    out.push_back(pt);
  }
  return out;
}

}  // namespace levicav
