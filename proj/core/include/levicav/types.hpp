#pragma once

#include <complex>

#include "levicav/constants.hpp"

namespace levicav {

/// Sub-wavelength dielectric sphere: geometry plus two-point optical
/// response (permittivity at the trap wavelength and the blackbody-spectrum
/// averaged absorption factor Im[(eps_bb-1)/(eps_bb+2)]).
///
/// All quantities strict SI. Immutable after construction; constructors
/// validate the physical invariants and throw std::invalid_argument.
class Sphere {
 public:
  Sphere(double radius_m, double density_kg_m3, double eps_real,
         double eps_imag = 0.0, double eps_bb_im_factor = 0.0);

  /// Idealized high-index material: (eps-1)/(eps+2) treated as exactly 1.
  static Sphere high_index(double radius_m, double density_kg_m3,
                           double eps_bb_im_factor = 0.0);

  double radius() const { return radius_; }
  double density() const { return density_; }
  double volume() const;
  double mass() const { return density_ * volume(); }
  bool is_high_index() const { return high_index_; }

  std::complex<double> permittivity() const { return {eps_re_, eps_im_}; }
  double eps_real() const { return eps_re_; }
  double eps_imag() const { return eps_im_; }
  double eps_bb_im_factor() const { return eps_bb_im_factor_; }

  /// Clausius-Mossotti factor (eps-1)/(eps+2); exactly 1 for the
  /// high-index preset.
  std::complex<double> cm_factor() const;
  double cm_real() const { return cm_factor().real(); }
  /// Im[(eps-1)/(eps+2)] = 3 Im(eps)/|eps+2|^2
  double cm_imag() const { return cm_factor().imag(); }
  /// (eps+2)/(eps-1), the inverse factor appearing in N_osc formulas.
  double cm_inverse_real() const;

 private:
  Sphere() = default;
  double radius_ = 0;
  double density_ = 0;
  double eps_re_ = 0;
  double eps_im_ = 0;
  double eps_bb_im_factor_ = 0;
  bool high_index_ = false;
};

/// Fabry-Perot cavity geometry and linewidths. Exactly one of finesse or
/// linewidth is given at construction; the other follows from
/// F = pi c / (2 kappa L).
class CavitySetup {
 public:
  static CavitySetup from_finesse(double length_m, double waist_m,
                                  double wavelength_m, double finesse,
                                  double loss_linewidth = 0.0);
  static CavitySetup from_linewidth(double length_m, double waist_m,
                                    double wavelength_m, double kappa_rad_s,
                                    double loss_linewidth = 0.0);

  double length() const { return length_; }
  double waist() const { return waist_; }
  double wavelength() const { return wavelength_; }
  double kappa() const { return kappa_; }
  double loss_linewidth() const { return kappa_loss_; }
  double finesse() const;
  /// Mode volume V_c = (pi/4) L w^2.
  double mode_volume() const;
  /// Optical angular frequency 2 pi c / lambda.
  double omega_optical() const;
  /// Wavevector 2 pi / lambda.
  double wavevector() const;

 private:
  CavitySetup(double length, double waist, double wavelength, double kappa,
              double kappa_loss);
  double length_, waist_, wavelength_, kappa_, kappa_loss_;
};

/// Two-mode drive configuration: trapping intensity plus cooling-beam and
/// parametric-drive parameters.
struct DriveConfig {
  double intensity = 0.0;        // antinode peak intensity I0, W/m^2
  double zeta = 0.0;             // intra-cavity intensity ratio, 2 zeta = |a2/a1|^2
  double cooling_detuning = 0.0; // delta_2, rad/s
  double parametric_strength = 0.0;  // eps_m (trap modulation depth)
  double threshold_offset = 0.0;     // delta_t in beta = (Gamma/2)(1 - delta_t)

  void validate() const;
};

/// Background gas state.
class Environment {
 public:
  Environment(double pressure_pa, double temperature_k, double molecular_mass_kg,
              double specific_heat_ratio, double energy_accommodation,
              double angular_accommodation);

  /// Diatomic air-like defaults: m = 28.97 u, gamma_sh = 7/5, alpha_g = 0.25,
  /// alpha_theta = 1.
  static Environment air(double pressure_pa, double temperature_k);

  double pressure() const { return pressure_; }
  double temperature() const { return temperature_; }
  double molecular_mass() const { return molecular_mass_; }
  double specific_heat_ratio() const { return gamma_sh_; }
  double energy_accommodation() const { return alpha_energy_; }
  double angular_accommodation() const { return alpha_theta_; }

  /// Mean thermal speed sqrt(8 kB T / (pi m)).
  double mean_speed() const;
  /// Root-mean-square speed sqrt(3 kB T / m).
  double rms_speed() const;
  /// Mean free path estimate kB T / (sqrt(2) pi d^2 P), d = 0.37 nm.
  double mean_free_path() const;

  Environment with_pressure(double pressure_pa) const;

 private:
  double pressure_, temperature_, molecular_mass_, gamma_sh_, alpha_energy_,
      alpha_theta_;
};

/// Vacuum-sphere polarizability alpha_ind = 3 eps0 V (eps-1)/(eps+2), C m^2/V.
std::complex<double> polarizability(const Sphere& sphere);

/// Convert a bulk attenuation figure (dB/km) into Im(eps) at wavelength
/// lambda for given Re(eps).
double bulk_loss_to_im_eps(double loss_db_per_km, double eps_real,
                           double wavelength_m);

}  // namespace levicav
