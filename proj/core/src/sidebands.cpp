#include "levicav/sidebands.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "levicav/constants.hpp"
#include "levicav/numerics.hpp"

namespace levicav {

using constants::pi;
using cplx = std::complex<double>;

namespace {
constexpr cplx I{0.0, 1.0};
}

SidebandSystem::SidebandSystem(const SidebandParams& p) : p_(p) {
  if (!(p_.kappa > 0) || !(p_.omega_m > 0) || !(p_.omega_drive > 0))
    throw std::invalid_argument("SidebandSystem: kappa, omega_m, Omega_m must be > 0");
  if (p_.n_max < 1)
    throw std::invalid_argument("SidebandSystem: n_max must be >= 1");
  for (int n = -p_.n_max; n <= p_.n_max; ++n) {
    slots_.push_back({InputSlot::vacuum_a, 2 * n});
    slots_.push_back({InputSlot::vacuum_a_dag, 2 * n});
  }
  for (int j = -p_.n_max - 1; j <= p_.n_max; ++j)
    slots_.push_back({InputSlot::force, 2 * j + 1});
}

int SidebandSystem::unknown_index(int n, SidebandOp op) const {
  return 4 * (n + p_.n_max) + static_cast<int>(op);
}

std::vector<cplx> SidebandSystem::matrix(double omega) const {
  int d = dim();
  std::vector<cplx> a(static_cast<size_t>(d) * d, cplx{0, 0});
  auto at = [&](int r, int c) -> cplx& { return a[static_cast<size_t>(r) * d + c]; };
  const double k = p_.kappa, om = p_.omega_drive, wm = p_.omega_m, beta = p_.beta;
  const int nmax = p_.n_max;
  const bool nonsec = !p_.secular_only;
  for (int n = -nmax; n <= nmax; ++n) {
    double nu = omega + 2.0 * n * wm;
    int ra = unknown_index(n, SidebandOp::a);
    int rad = unknown_index(n, SidebandOp::a_dag);
    int rb = unknown_index(n, SidebandOp::b);
    int rbd = unknown_index(n, SidebandOp::b_dag);
    // cavity mode
    at(ra, ra) = k / 2.0 - I * nu;
    at(ra, rb) = I * om;
    if (nonsec && n + 1 <= nmax)
      at(ra, unknown_index(n + 1, SidebandOp::b_dag)) = I * om;
    at(rad, rad) = k / 2.0 - I * nu;
    at(rad, rbd) = -I * om;
    if (nonsec && n - 1 >= -nmax)
      at(rad, unknown_index(n - 1, SidebandOp::b)) = -I * om;
    // motion
    at(rb, rb) = -I * nu;
    at(rb, ra) = I * om;
    if (nonsec && n + 1 <= nmax)
      at(rb, unknown_index(n + 1, SidebandOp::a_dag)) = I * om;
    at(rb, rbd) += -beta;
    if (n + 1 <= nmax) at(rb, unknown_index(n + 1, SidebandOp::b)) += beta;
    if (n - 1 >= -nmax) at(rb, unknown_index(n - 1, SidebandOp::b)) += -beta;
    at(rbd, rbd) = -I * nu;
    at(rbd, rad) = -I * om;
    if (nonsec && n - 1 >= -nmax)
      at(rbd, unknown_index(n - 1, SidebandOp::a)) = -I * om;
    at(rbd, rb) += -beta;
    if (n + 1 <= nmax) at(rbd, unknown_index(n + 1, SidebandOp::b_dag)) += -beta;
    if (n - 1 >= -nmax) at(rbd, unknown_index(n - 1, SidebandOp::b_dag)) += beta;
  }
  return a;
}

std::vector<cplx> SidebandSystem::transfer_row(double omega, QuadPort port,
                                               QuadSign sign) const {
  int d = dim();
  std::vector<cplx> raw = matrix(omega);
  Eigen::Map<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      A(raw.data(), d, d);

  Eigen::VectorXcd proj = Eigen::VectorXcd::Zero(d);
  std::vector<cplx> direct(slots_.size(), cplx{0, 0});
  double sk = std::sqrt(p_.kappa);
  auto slot_of = [&](InputSlot::Kind kind, int m) {
    for (size_t i = 0; i < slots_.size(); ++i)
      if (slots_[i].kind == kind && slots_[i].m == m) return i;
    throw std::logic_error("sideband slot lookup failed");
  };
  if (port == QuadPort::output) {
    if (sign == QuadSign::plus) {
      proj(unknown_index(0, SidebandOp::a)) = sk;
      proj(unknown_index(0, SidebandOp::a_dag)) = sk;
      direct[slot_of(InputSlot::vacuum_a, 0)] = -1.0;
      direct[slot_of(InputSlot::vacuum_a_dag, 0)] = -1.0;
    } else {
      proj(unknown_index(0, SidebandOp::a)) = -I * sk;
      proj(unknown_index(0, SidebandOp::a_dag)) = I * sk;
      direct[slot_of(InputSlot::vacuum_a, 0)] = I;
      direct[slot_of(InputSlot::vacuum_a_dag, 0)] = -I;
    }
  } else {
    if (sign == QuadSign::plus) {
      proj(unknown_index(0, SidebandOp::b)) = 1.0;
      proj(unknown_index(0, SidebandOp::b_dag)) = 1.0;
    } else {
      proj(unknown_index(0, SidebandOp::b)) = -I;
      proj(unknown_index(0, SidebandOp::b_dag)) = I;
    }
  }

  // Response row p^T A^{-1} B via the adjoint solve: stays well-conditioned
  // for the squeezed projections even near the parametric threshold.
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A.transpose());
  Eigen::VectorXcd y = lu.solve(proj);
  if (!y.allFinite())
    throw std::runtime_error("sideband solve singular (parametric threshold)");
  double res = (A.transpose() * y - proj).norm();
  double scale = proj.norm() + A.norm() * y.norm();
  if (!(res <= 1e-8 * scale))
    throw std::runtime_error("sideband solve singular (parametric threshold)");

  std::vector<cplx> row = direct;
  for (int n = -p_.n_max; n <= p_.n_max; ++n) {
    row[slot_of(InputSlot::vacuum_a, 2 * n)] +=
        y(unknown_index(n, SidebandOp::a)) * sk;
    row[slot_of(InputSlot::vacuum_a_dag, 2 * n)] +=
        y(unknown_index(n, SidebandOp::a_dag)) * sk;
    row[slot_of(InputSlot::force, 2 * n + 1)] +=
        y(unknown_index(n, SidebandOp::b)) * I;
    row[slot_of(InputSlot::force, 2 * n - 1)] +=
        y(unknown_index(n, SidebandOp::b_dag)) * (-I);
  }
  return row;
}

SidebandSystem build_system(const SidebandParams& base) {
  return SidebandSystem(base);
}

SidebandSystem build_system(SidebandParams base, double delta_t) {
  if (delta_t < 0)
    throw std::invalid_argument("build_system: delta_t must be >= 0");
  double dt = std::max(delta_t, 1e-9);
  base.beta = base.cooling_rate() / 2.0 * (1.0 - dt);
  return SidebandSystem(base);
}

namespace {

/// Stationary symmetrized contraction of two transfer rows (probe +omega and
/// -omega): slots pair when their frequency offsets cancel, m1 + m2 = 0.
/// cross = false: same-system correlations <a_in a_in^dag>_sym = cosh(2R)/2
/// and <F F> = phi * omega_m.  cross = true: inter-system NOPA correlations
/// <d_A d_B> = <d_A^dag d_B^dag> = -sinh(2R)/2, forces uncorrelated.
double contract(const SidebandSystem& sys, const std::vector<cplx>& rowp,
                const std::vector<cplx>& rowm, double squeeze_r, bool cross) {
  const auto& slots = sys.input_slots();
  double ch = std::cosh(2.0 * squeeze_r) / 2.0;
  double sh = std::sinh(2.0 * squeeze_r) / 2.0;
  double fw = sys.params().phi * sys.params().omega_m;
  cplx total{0, 0};
  for (size_t i = 0; i < slots.size(); ++i) {
    if (rowp[i] == cplx{0, 0}) continue;
    for (size_t j = 0; j < slots.size(); ++j) {
      if (slots[i].m + slots[j].m != 0) continue;
      double coeff;
      auto ki = slots[i].kind, kj = slots[j].kind;
      if (!cross) {
        if ((ki == SidebandSystem::InputSlot::vacuum_a &&
             kj == SidebandSystem::InputSlot::vacuum_a_dag) ||
            (ki == SidebandSystem::InputSlot::vacuum_a_dag &&
             kj == SidebandSystem::InputSlot::vacuum_a))
          coeff = ch;
        else if (ki == SidebandSystem::InputSlot::force &&
                 kj == SidebandSystem::InputSlot::force)
          coeff = fw;
        else
          continue;
      } else {
        if ((ki == SidebandSystem::InputSlot::vacuum_a &&
             kj == SidebandSystem::InputSlot::vacuum_a) ||
            (ki == SidebandSystem::InputSlot::vacuum_a_dag &&
             kj == SidebandSystem::InputSlot::vacuum_a_dag))
          coeff = -sh;
        else
          continue;
      }
      total += rowp[i] * rowm[j] * coeff;
    }
  }
  return total.real();
}

double integrate_symmetric_spectrum(const std::function<double(double)>& s,
                                    double band, double rtol, bool tail) {
  // panel seeds cover narrow near-threshold peaks down to ~1e-4 of the band
  std::vector<double> breaks{0.0,          1e-4 * band, 1e-3 * band,
                             1e-2 * band,  0.1 * band,  0.3 * band,
                             band};
  double integral = numerics::adaptive_simpson_panels(s, breaks, rtol);
  double total = 2.0 * integral;
  if (tail) total += 2.0 * s(band) * band;
  return total / (2.0 * pi);
}

}  // namespace

double quadrature_spectrum(const SidebandSystem& sys, double omega,
                           QuadPort port, QuadSign sign) {
  auto rowp = sys.transfer_row(omega, port, sign);
  auto rowm = sys.transfer_row(-omega, port, sign);
  return contract(sys, rowp, rowm, 0.0, false);
}

double integrated_variance(const SidebandSystem& sys, QuadPort port,
                           QuadSign sign, const VarianceOptions& opt) {
  double band = opt.bandwidth > 0 ? opt.bandwidth : sys.params().omega_m;
  auto s = [&](double w) { return quadrature_spectrum(sys, w, port, sign); };
  return integrate_symmetric_spectrum(s, band, opt.rtol, opt.tail_correction);
}

double nopa_epr_factor(double beta_nopa, double kappa_c) {
  if (beta_nopa < 0 || !(kappa_c > 0))
    throw std::invalid_argument("nopa_epr_factor: need beta >= 0, kappa_c > 0");
  if (beta_nopa >= kappa_c)
    throw std::invalid_argument("nopa_epr_factor: above threshold (beta >= kappa_c)");
  return (kappa_c - beta_nopa) / (kappa_c + beta_nopa);
}

double epr_variance_analytic(double squeeze_r, double u, double phi) {
  return std::exp(-2.0 * squeeze_r) +
         u * u / 16.0 *
             (3.0 * std::exp(2.0 * squeeze_r) + 2.0 * std::sinh(2.0 * squeeze_r)) +
         4.0 * phi / u;
}

EprOptimum epr_optimum_analytic(double squeeze_r, double phi) {
  double a = 3.0 * std::exp(2.0 * squeeze_r) + 2.0 * std::sinh(2.0 * squeeze_r);
  EprOptimum o;
  o.kappa_over_omega = std::cbrt(32.0 * phi / a);
  o.value = std::exp(-2.0 * squeeze_r) +
            3.0 * std::cbrt(phi * phi / 4.0) * std::cbrt(a);
  return o;
}

double epr_variance_numeric(const SidebandSystem& sys_a,
                            const SidebandSystem& sys_b, double squeeze_r,
                            QuadSign sign, const VarianceOptions& opt) {
  const auto& pa = sys_a.params();
  const auto& pb = sys_b.params();
  if (pa.kappa != pb.kappa || pa.omega_drive != pb.omega_drive ||
      pa.omega_m != pb.omega_m || pa.phi != pb.phi || pa.n_max != pb.n_max)
    throw std::invalid_argument("epr_variance_numeric: systems must be identical");
  double band = opt.bandwidth > 0 ? opt.bandwidth : pa.omega_m;
  // Var((X_A -/+ X_B)/sqrt(2)) = (S_AA + S_BB)/2 -/+ S_AB; the EPR-correlated
  // combination is X+ with '-' and X- with '+'.
  double combo = sign == QuadSign::plus ? -1.0 : 1.0;
  auto s = [&](double w) {
    auto rap = sys_a.transfer_row(w, QuadPort::motion, sign);
    auto ram = sys_a.transfer_row(-w, QuadPort::motion, sign);
    auto rbp = sys_b.transfer_row(w, QuadPort::motion, sign);
    auto rbm = sys_b.transfer_row(-w, QuadPort::motion, sign);
    double s_aa = contract(sys_a, rap, ram, squeeze_r, false);
    double s_bb = contract(sys_b, rbp, rbm, squeeze_r, false);
    double s_ab = contract(sys_a, rap, rbm, squeeze_r, true);
    return 0.5 * (s_aa + s_bb) + combo * s_ab;
  };
  return integrate_symmetric_spectrum(s, band, opt.rtol, opt.tail_correction);
}

double squeeze_output_variance_numeric(const SidebandSystem& sys) {
  return quadrature_spectrum(sys, 0.0, QuadPort::output, QuadSign::plus);
}

double squeeze_variance_analytic(double u, double phi, double delta_t) {
  return 5.0 / 16.0 * u * u + 3.0 / 32.0 * u * u * delta_t +
         2.0 * phi / u * (1.0 + delta_t) + delta_t * delta_t / 4.0;
}

SqueezeOptimum squeeze_optimum_ideal(double phi) {
  SqueezeOptimum o;
  o.kappa_over_omega = 2.0 * std::cbrt(2.0 * phi / 5.0);
  o.value = 1.5 * std::cbrt(5.0 * phi * phi / 2.0);
  return o;
}

double lossy_squeezing(double ideal_variance, double kappa_loss, double kappa) {
  if (kappa_loss < 0 || !(kappa > 0))
    throw std::invalid_argument("lossy_squeezing: bad linewidths");
  if (kappa_loss >= kappa)
    throw std::invalid_argument("lossy_squeezing: kappa_loss must be < kappa");
  double t = kappa_loss / kappa;
  return (1.0 - t) * ideal_variance + t;
}

SqueezeOptimum squeeze_optimum_lossy(double phi, double kappa_loss,
                                     double omega_m) {
  double psi = phi + kappa_loss / (2.0 * omega_m);
  SqueezeOptimum o;
  o.kappa_over_omega = 2.0 * std::cbrt(2.0 / 5.0 * psi);
  o.value = 1.5 * std::cbrt(5.0 * psi * psi / 2.0);
  return o;
}

double delta_t_for_db_above_min(double u, double phi, double db) {
  double vmin = squeeze_variance_analytic(u, phi, 0.0);
  double target = vmin * std::pow(10.0, db / 10.0);
  double a = 3.0 / 32.0 * u * u + 2.0 * phi / u;
  double d = target - vmin;
  return 2.0 * (-a + std::sqrt(a * a + d));
}

double lamb_dicke_eta(const SidebandSystem& sys, double x_zpf,
                      double wavevector, const VarianceOptions& opt) {
  double var =
      integrated_variance(sys, QuadPort::motion, QuadSign::plus, opt);
  return wavevector * x_zpf * std::sqrt(var);
}

}  // namespace levicav
