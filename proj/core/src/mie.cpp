#include "levicav/mie.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "levicav/numerics.hpp"

namespace levicav {

using constants::c0;
using constants::eps0;
using constants::pi;
using cplx = std::complex<double>;

namespace {

constexpr cplx I{0.0, 1.0};

/// j_0..j_n by downward recurrence (normalized against j0 = sin x / x).
std::vector<double> sph_jn(int nmax, double x) {
  std::vector<double> j(nmax + 1, 0.0);
  if (x == 0) {
    j[0] = 1.0;
    return j;
  }
  int start = nmax + 16 + static_cast<int>(std::ceil(x));
  double jp = 0.0, jc = 1e-30;
  std::vector<double> tmp(nmax + 1, 0.0);
  for (int n = start; n >= 1; --n) {
    double jm = (2.0 * n + 1.0) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (n - 1 <= nmax) tmp[n - 1] = jc;
    // rescale to avoid overflow of the unnormalized recurrence
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      for (auto& v : tmp) v *= 1e-250;
    }
  }
  double scale = (std::sin(x) / x) / tmp[0];
  for (int n = 0; n <= nmax; ++n) j[n] = tmp[n] * scale;
  return j;
}

/// y_0..y_n by (stable) upward recurrence.
std::vector<double> sph_yn(int nmax, double x) {
  std::vector<double> y(nmax + 1);
  y[0] = -std::cos(x) / x;
  if (nmax >= 1) y[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
  for (int n = 2; n <= nmax; ++n)
    y[n] = (2.0 * n - 1.0) / x * y[n - 1] - y[n - 2];
  return y;
}

void pi_tau(double mu, int nmax, std::vector<double>& pi_n,
            std::vector<double>& tau_n) {
  pi_n.assign(nmax + 1, 0.0);
  tau_n.assign(nmax + 1, 0.0);
  if (nmax < 1) return;
  pi_n[1] = 1.0;
  tau_n[1] = mu;
  for (int n = 2; n <= nmax; ++n) {
    pi_n[n] = ((2.0 * n - 1.0) * mu * pi_n[n - 1] - n * pi_n[n - 2]) / (n - 1.0);
    tau_n[n] = n * mu * pi_n[n] - (n + 1.0) * pi_n[n - 1];
  }
}

int default_order(double x) {
  return static_cast<int>(std::ceil(x + 4.0 * std::cbrt(x) + 2.0));
}

}  // namespace

MieSolution::MieSolution(const Sphere& sphere, double wavevector, int order)
    : k_(wavevector) {
  if (sphere.eps_imag() != 0.0)
    throw std::invalid_argument("MieSolution: lossless (real eps) spheres only");
  m_ = std::sqrt(sphere.eps_real());
  x_ = k_ * sphere.radius();
  int nmax = order > 0 ? order : default_order(x_);

  for (int attempt = 0; attempt < 3; ++attempt) {
    a_.assign(nmax, 0.0);
    b_.assign(nmax, 0.0);
    double mx = m_ * x_;
    auto jx = sph_jn(nmax, x_);
    auto yx = sph_yn(nmax, x_);
    auto jmx = sph_jn(nmax, mx);
    for (int n = 1; n <= nmax; ++n) {
      double psix = x_ * jx[n];
      double psixp = jx[n - 1] * x_ - n * jx[n];  // [x j_n]' = x j_{n-1} - n j_n
      double psimx = mx * jmx[n];
      double psimxp = jmx[n - 1] * mx - n * jmx[n];
      cplx hx = cplx(jx[n], yx[n]);
      cplx hxm1 = cplx(jx[n - 1], yx[n - 1]);
      cplx xix = x_ * hx;
      cplx xixp = hxm1 * x_ - static_cast<double>(n) * hx;
      a_[n - 1] = (m_ * psimx * psixp - psix * psimxp) /
                  (m_ * psimx * xixp - xix * psimxp);
      b_[n - 1] = (psimx * psixp - m_ * psix * psimxp) /
                  (psimx * xixp - m_ * xix * psimxp);
    }
    if (tail_ratio() < 1e-10) return;
    nmax += 8;  // extend and retry
  }
  throw std::runtime_error(
      "MieSolution: multipole series not converged, tail ratio " +
      std::to_string(tail_ratio()));
}

double MieSolution::tail_ratio() const {
  double head = std::max(std::abs(a_.front()), std::abs(b_.front()));
  double tail = std::max(std::abs(a_.back()), std::abs(b_.back()));
  if (head == 0) return 0.0;
  return tail / head;
}

MieSolution::Field MieSolution::canonical_field(
    const std::array<double, 3>& point) const {
  int nmax = order();
  double x = point[0], y = point[1], z = point[2];
  double r = std::sqrt(x * x + y * y + z * z);
  double rho = k_ * r;
  double mu = std::clamp(z / r, -1.0, 1.0);
  double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
  double phi = std::atan2(y, x);
  double cp = std::cos(phi), sp = std::sin(phi);

  auto jn = sph_jn(nmax, rho);
  auto yn = sph_yn(nmax, rho);
  std::vector<double> pin, taun;
  pi_tau(mu, nmax, pin, taun);

  cplx er{0, 0}, et{0, 0}, ep{0, 0}, hr{0, 0}, ht{0, 0}, hp{0, 0};
  cplx in_pow = I;  // i^n starting at n = 1
  for (int n = 1; n <= nmax; ++n) {
    double nn = static_cast<double>(n) * (n + 1.0);
    cplx en = in_pow * (2.0 * n + 1.0) / nn;
    cplx hn(jn[n], yn[n]);
    cplx hnm1(jn[n - 1], yn[n - 1]);
    cplx dhn = hnm1 - static_cast<double>(n) * hn / rho;
    cplx an = a_[n - 1], bn = b_[n - 1];
    er += en * I * an * cp * nn * st * pin[n] * hn / rho;
    et += en * (I * an * cp * taun[n] * dhn - bn * cp * pin[n] * hn);
    ep += en * (-I * an * sp * pin[n] * dhn + bn * sp * taun[n] * hn);
    hr += en * I * bn * sp * nn * st * pin[n] * hn / rho;
    ht += en * (I * bn * sp * taun[n] * dhn - an * sp * pin[n] * hn);
    hp += en * (I * bn * cp * pin[n] * dhn - an * cp * taun[n] * hn);
    in_pow *= I;
  }
  // spherical -> Cartesian basis
  std::array<double, 3> rh{st * cp, st * sp, mu};
  std::array<double, 3> th{mu * cp, mu * sp, -st};
  std::array<double, 3> ph{-sp, cp, 0.0};
  Field f;
  cplx inc = std::exp(I * k_ * z);  // incident plane wave, exact
  for (int i = 0; i < 3; ++i) {
    f.e[i] = er * rh[i] + et * th[i] + ep * ph[i];
    f.b[i] = (hr * rh[i] + ht * th[i] + hp * ph[i]) / c0;
  }
  f.e[0] += inc;
  f.b[1] += inc / c0;
  return f;
}

MieSolution::Field MieSolution::standing_wave_field(
    const StandingWaveField& field, const std::array<double, 3>& point) const {
  cplx a_plus = 0.5 * field.amplitude *
                std::exp(-I * field.wavevector * field.node_offset);
  cplx a_minus = 0.5 * field.amplitude *
                 std::exp(I * field.wavevector * field.node_offset);
  Field fp = canonical_field(point);
  // -z propagating component: rotate the canonical solution by pi about x
  std::array<double, 3> mirrored{point[0], -point[1], -point[2]};
  Field fm = canonical_field(mirrored);
  fm.e[1] = -fm.e[1];
  fm.e[2] = -fm.e[2];
  fm.b[1] = -fm.b[1];
  fm.b[2] = -fm.b[2];
  Field out;
  for (int i = 0; i < 3; ++i) {
    out.e[i] = a_plus * fp.e[i] + a_minus * fm.e[i];
    out.b[i] = a_plus * fp.b[i] + a_minus * fm.b[i];
  }
  return out;
}

double dipole_force(const Sphere& sphere, const StandingWaveField& field) {
  double re_alpha = polarizability(sphere).real();
  return 0.25 * re_alpha * field.amplitude * field.amplitude *
         field.wavevector * std::sin(2.0 * field.wavevector * field.node_offset);
}

MieSolution mie_solve(const Sphere& sphere, double wavevector, int order) {
  return MieSolution(sphere, wavevector, order);
}

double stress_tensor_force(const MieSolution& solution,
                           const StandingWaveField& field,
                           double surface_radius, int polar_order,
                           int azimuth_order) {
  int nmax = solution.order();
  if (polar_order <= 0) polar_order = 2 * nmax + 4;
  if (azimuth_order <= 0) azimuth_order = 4 * nmax + 4;
  auto gl = numerics::gauss_legendre(polar_order);
  const double mu0 = 1.0 / (eps0 * c0 * c0);
  double force = 0.0;
  for (int iq = 0; iq < polar_order; ++iq) {
    double mu = gl.nodes[iq];
    double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    double ring = 0.0;
    for (int ia = 0; ia < azimuth_order; ++ia) {
      double phi = 2.0 * pi * ia / azimuth_order;
      std::array<double, 3> pt{surface_radius * st * std::cos(phi),
                               surface_radius * st * std::sin(phi),
                               surface_radius * mu};
      auto f = solution.standing_wave_field(field, pt);
      std::array<double, 3> rh{st * std::cos(phi), st * std::sin(phi), mu};
      cplx er = f.e[0] * rh[0] + f.e[1] * rh[1] + f.e[2] * rh[2];
      cplx br = f.b[0] * rh[0] + f.b[1] * rh[1] + f.b[2] * rh[2];
      double e2 = std::norm(f.e[0]) + std::norm(f.e[1]) + std::norm(f.e[2]);
      double b2 = std::norm(f.b[0]) + std::norm(f.b[1]) + std::norm(f.b[2]);
      double tz = 0.5 * (eps0 * (f.e[2] * std::conj(er)).real() +
                         (f.b[2] * std::conj(br)).real() / mu0 -
                         0.5 * mu * (eps0 * e2 + b2 / mu0));
      ring += tz;
    }
    force += gl.weights[iq] * ring * (2.0 * pi / azimuth_order);
  }
  return force * surface_radius * surface_radius;
}

std::vector<ForceCurve> force_comparison_sweep(
    double eps_real, double wavelength, const std::vector<double>& rho_sizes,
    const std::vector<double>& k_z0_grid) {
  if (rho_sizes.empty() || k_z0_grid.empty())
    throw std::invalid_argument("force_comparison_sweep: grids must be nonempty");
  double k = 2.0 * pi / wavelength;
  double m = std::sqrt(eps_real);
  const double e_amp = 1e5;  // arbitrary; curves are normalized out

  std::vector<ForceCurve> curves;
  for (double rho : rho_sizes) {
    ForceCurve c;
    c.rho_size = rho;
    double radius = rho / (k * m);
    Sphere sphere(radius, 2000.0, eps_real);
    MieSolution sol = mie_solve(sphere, k);
    for (double kz0 : k_z0_grid) {
      StandingWaveField f{e_amp, k, kz0 / k};
      c.k_z0.push_back(kz0);
      c.exact.push_back(stress_tensor_force(sol, f, 1.5 * radius));
      c.dipole.push_back(dipole_force(sphere, f));
    }
    double dip_peak = 0.0, ex_peak = 0.0, dev = 0.0;
    for (size_t i = 0; i < c.exact.size(); ++i) {
      dip_peak = std::max(dip_peak, std::abs(c.dipole[i]));
      ex_peak = std::max(ex_peak, std::abs(c.exact[i]));
      dev = std::max(dev, std::abs(c.exact[i] - c.dipole[i]));
    }
    for (size_t i = 0; i < c.exact.size(); ++i) {
      if (c.exact[i] * c.dipole[i] < 0 &&
          std::abs(c.dipole[i]) > 0.05 * dip_peak)
        ++c.sign_disagreements;
    }
    c.peak_ratio = ex_peak > 0 ? dip_peak / ex_peak : 0.0;
    c.max_deviation = dip_peak > 0 ? dev / dip_peak : 0.0;
    // report in arbitrary units normalized to the dipole peak
    for (size_t i = 0; i < c.exact.size(); ++i) {
      c.exact[i] /= dip_peak;
      c.dipole[i] /= dip_peak;
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

}  // namespace levicav
