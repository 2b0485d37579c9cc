#pragma once

#include <array>
#include <complex>
#include <vector>

#include "levicav/types.hpp"

namespace levicav {

/// Linearly polarized standing wave E = x E0 cos k(z - z0) cos wt,
/// B = y (E0/c) sin k(z - z0) sin wt, decomposed into counter-propagating
/// plane waves of amplitude E0/2.
struct StandingWaveField {
  double amplitude = 0;    // E0, V/m
  double wavevector = 0;   // k, 1/m
  double node_offset = 0;  // z0, m
};

/// Mie expansion of the canonical scattering problem (unit-amplitude,
/// x-polarized, +z-propagating plane wave) for a lossless sphere.
class MieSolution {
 public:
  MieSolution(const Sphere& sphere, double wavevector, int order = 0);

  int order() const { return static_cast<int>(a_.size()); }
  double wavevector() const { return k_; }
  double refractive_index() const { return m_; }
  double size_parameter() const { return x_; }  // k r
  /// k sqrt(eps) r, the interior size parameter.
  double interior_size_parameter() const { return m_ * x_; }
  const std::vector<std::complex<double>>& electric_coefficients() const {
    return a_;
  }
  const std::vector<std::complex<double>>& magnetic_coefficients() const {
    return b_;
  }
  /// max(|a_N|,|b_N|)/max(|a_1|,|b_1|), the truncation audit ratio.
  double tail_ratio() const;

  /// Total (incident + scattered) E and B phasors of the canonical problem
  /// at an exterior Cartesian point; e^{-iwt} convention.
  struct Field {
    std::array<std::complex<double>, 3> e;
    std::array<std::complex<double>, 3> b;
  };
  Field canonical_field(const std::array<double, 3>& point) const;

  /// Superposed standing-wave field (both components, incident + scattered)
  /// at an exterior point.
  Field standing_wave_field(const StandingWaveField& field,
                            const std::array<double, 3>& point) const;

 private:
  double k_ = 0, m_ = 0, x_ = 0;
  std::vector<std::complex<double>> a_, b_;
};

/// Point-dipole (electrostatic) axial force
/// F_z = (1/4) Re(alpha) E0^2 k sin(2 k z0) on a sphere at the origin.
double dipole_force(const Sphere& sphere, const StandingWaveField& field);

MieSolution mie_solve(const Sphere& sphere, double wavevector, int order = 0);

/// Time-averaged axial force from the Maxwell stress tensor integrated over
/// a sphere of radius surface_radius >= r. Quadrature orders default to the
/// trigonometric-exactness rule (2N+4 polar Gauss-Legendre, 4N+4 azimuthal
/// trapezoid).
double stress_tensor_force(const MieSolution& solution,
                           const StandingWaveField& field,
                           double surface_radius, int polar_order = 0,
                           int azimuth_order = 0);

struct ForceCurve {
  double rho_size = 0;  // k sqrt(eps) r
  std::vector<double> k_z0;
  std::vector<double> exact;   // arbitrary units (normalized to dipole peak)
  std::vector<double> dipole;
  double peak_ratio = 0;       // max|dipole| / max|exact|
  double max_deviation = 0;    // max|exact - dipole| / max|dipole|
  int sign_disagreements = 0;  // points with opposite sign (away from zeros)
};

/// Exact-vs-dipole comparison curves for a list of interior size parameters
/// rho = k sqrt(eps) r at fixed permittivity.
std::vector<ForceCurve> force_comparison_sweep(
    double eps_real, double wavelength, const std::vector<double>& rho_sizes,
    const std::vector<double>& k_z0_grid);

}  // namespace levicav
