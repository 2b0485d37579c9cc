#include "levicav/types.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace levicav {

using constants::c0;
using constants::k_boltzmann;
using constants::pi;

Sphere::Sphere(double radius_m, double density_kg_m3, double eps_real,
               double eps_imag, double eps_bb_im_factor)
    : radius_(radius_m),
      density_(density_kg_m3),
      eps_re_(eps_real),
      eps_im_(eps_imag),
      eps_bb_im_factor_(eps_bb_im_factor) {
  if (!(radius_ > 0)) throw std::invalid_argument("Sphere: radius must be > 0");
  if (!(density_ > 0)) throw std::invalid_argument("Sphere: density must be > 0");
  if (!(eps_re_ > 1)) throw std::invalid_argument("Sphere: Re(eps) must be > 1");
  if (eps_im_ < 0) throw std::invalid_argument("Sphere: Im(eps) must be >= 0");
  if (eps_bb_im_factor_ < 0 || eps_bb_im_factor_ > 1)
    throw std::invalid_argument("Sphere: blackbody Im factor must be in [0, 1]");
}

Sphere Sphere::high_index(double radius_m, double density_kg_m3,
                          double eps_bb_im_factor) {
  // Large finite eps for code paths that want the raw permittivity; the
  // Clausius-Mossotti factor itself is pinned to exactly 1.
  Sphere s(radius_m, density_kg_m3, 1e9, 0.0, eps_bb_im_factor);
  s.high_index_ = true;
  return s;
}

double Sphere::volume() const { return 4.0 / 3.0 * pi * radius_ * radius_ * radius_; }

std::complex<double> Sphere::cm_factor() const {
  if (high_index_) return {1.0, 0.0};
  std::complex<double> eps(eps_re_, eps_im_);
  return (eps - 1.0) / (eps + 2.0);
}

double Sphere::cm_inverse_real() const {
  if (high_index_) return 1.0;
  return ((eps_re_ + 2.0) / (eps_re_ - 1.0));
}

CavitySetup::CavitySetup(double length, double waist, double wavelength,
                         double kappa, double kappa_loss)
    : length_(length),
      waist_(waist),
      wavelength_(wavelength),
      kappa_(kappa),
      kappa_loss_(kappa_loss) {
  if (!(length_ > 0) || !(waist_ > 0) || !(wavelength_ > 0))
    throw std::invalid_argument("CavitySetup: geometry must be positive");
  if (!(kappa_ > 0)) throw std::invalid_argument("CavitySetup: kappa must be > 0");
  if (kappa_loss_ < 0 || kappa_loss_ > kappa_)
    throw std::invalid_argument("CavitySetup: loss linewidth must be in [0, kappa]");
}

CavitySetup CavitySetup::from_finesse(double length_m, double waist_m,
                                      double wavelength_m, double finesse,
                                      double loss_linewidth) {
  if (!(finesse > 0))
    throw std::invalid_argument("CavitySetup: finesse must be > 0");
  double kappa = pi * c0 / (2.0 * finesse * length_m);
  return CavitySetup(length_m, waist_m, wavelength_m, kappa, loss_linewidth);
}

CavitySetup CavitySetup::from_linewidth(double length_m, double waist_m,
                                        double wavelength_m, double kappa_rad_s,
                                        double loss_linewidth) {
  return CavitySetup(length_m, waist_m, wavelength_m, kappa_rad_s, loss_linewidth);
}

double CavitySetup::finesse() const { return pi * c0 / (2.0 * kappa_ * length_); }

double CavitySetup::mode_volume() const {
  return pi / 4.0 * length_ * waist_ * waist_;
}

double CavitySetup::omega_optical() const { return 2.0 * pi * c0 / wavelength_; }

double CavitySetup::wavevector() const { return 2.0 * pi / wavelength_; }

void DriveConfig::validate() const {
  if (intensity < 0) throw std::invalid_argument("DriveConfig: intensity < 0");
  if (zeta < 0 || zeta >= 1)
    throw std::invalid_argument("DriveConfig: zeta must be in [0, 1)");
  if (parametric_strength < 0)
    throw std::invalid_argument("DriveConfig: parametric strength < 0");
  if (threshold_offset < 0 || threshold_offset >= 1)
    throw std::invalid_argument("DriveConfig: threshold offset must be in [0, 1)");
}

Environment::Environment(double pressure_pa, double temperature_k,
                         double molecular_mass_kg, double specific_heat_ratio,
                         double energy_accommodation, double angular_accommodation)
    : pressure_(pressure_pa),
      temperature_(temperature_k),
      molecular_mass_(molecular_mass_kg),
      gamma_sh_(specific_heat_ratio),
      alpha_energy_(energy_accommodation),
      alpha_theta_(angular_accommodation) {
  if (pressure_ < 0) throw std::invalid_argument("Environment: pressure < 0");
  if (!(temperature_ > 0)) throw std::invalid_argument("Environment: T must be > 0");
  if (!(molecular_mass_ > 0))
    throw std::invalid_argument("Environment: molecular mass must be > 0");
  if (!(gamma_sh_ > 1))
    throw std::invalid_argument("Environment: specific heat ratio must be > 1");
  if (alpha_energy_ < 0 || alpha_energy_ > 1)
    throw std::invalid_argument("Environment: energy accommodation in [0, 1]");
  if (alpha_theta_ < 0 || alpha_theta_ > 1)
    throw std::invalid_argument("Environment: angular accommodation in [0, 1]");
}

Environment Environment::air(double pressure_pa, double temperature_k) {
  return Environment(pressure_pa, temperature_k, 28.97 * constants::atomic_mass,
                     7.0 / 5.0, 0.25, 1.0);
}

double Environment::mean_speed() const {
  return std::sqrt(8.0 * k_boltzmann * temperature_ / (pi * molecular_mass_));
}

double Environment::rms_speed() const {
  return std::sqrt(3.0 * k_boltzmann * temperature_ / molecular_mass_);
}

double Environment::mean_free_path() const {
  constexpr double d_gas = 0.37e-9;
  if (pressure_ == 0) return std::numeric_limits<double>::infinity();
  return k_boltzmann * temperature_ /
         (std::sqrt(2.0) * pi * d_gas * d_gas * pressure_);
}

Environment Environment::with_pressure(double pressure_pa) const {
  Environment e = *this;
  e.pressure_ = pressure_pa;
  return e;
}

std::complex<double> polarizability(const Sphere& sphere) {
  return 3.0 * constants::eps0 * sphere.volume() * sphere.cm_factor();
}

double bulk_loss_to_im_eps(double loss_db_per_km, double eps_real,
                           double wavelength_m) {
  if (loss_db_per_km < 0)
    throw std::invalid_argument("bulk_loss_to_im_eps: loss must be >= 0");
  if (!(eps_real > 1))
    throw std::invalid_argument("bulk_loss_to_im_eps: Re(eps) must be > 1");
  // dB/km -> power attenuation coefficient in 1/m, then
  // alpha_pw = 2 k Im(sqrt(eps)), Im(sqrt(eps)) ~ Im(eps)/(2 sqrt(Re eps)).
  double alpha_pw = loss_db_per_km * std::log(10.0) / 10.0 / 1000.0;
  return alpha_pw * std::sqrt(eps_real) * wavelength_m / (2.0 * constants::pi);
}

}  // namespace levicav
