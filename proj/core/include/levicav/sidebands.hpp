#pragma once

#include <complex>
#include <vector>

namespace levicav {

/// Parameters of the linearized cooling-mode + motion system in the rotating
/// frame at delta2 = -omega_m, with non-secular e^{+-2 i omega_m t} couplings
/// retained and the frequency ladder truncated at |n| > n_max.
struct SidebandParams {
  double kappa = 0;        // cavity linewidth, rad/s
  double omega_drive = 0;  // Omega_m, rad/s
  double omega_m = 0;      // mechanical frequency, rad/s
  double beta = 0;         // parametric drive amplitude, rad/s
  double phi = 0;          // recoil parameter; force spectrum = phi * omega_m
  int n_max = 1;
  bool secular_only = false;  // drop the e^{+-2 i omega_m t} couplings

  double cooling_rate() const { return 4.0 * omega_drive * omega_drive / kappa; }
};

enum class SidebandOp { a = 0, a_dag = 1, b = 2, b_dag = 3 };
enum class QuadPort { motion, output };
enum class QuadSign { plus, minus };

/// One truncated frequency-domain linear system. Unknowns are ordered
/// (a, a_dag, b, b_dag) per sideband, ascending n; input slots are the
/// vacuum operators a_in, a_in_dag per sideband plus the recoil force
/// components at the odd half-frequencies.
class SidebandSystem {
 public:
  explicit SidebandSystem(const SidebandParams& p);

  const SidebandParams& params() const { return p_; }
  int dim() const { return 4 * (2 * p_.n_max + 1); }
  int unknown_index(int n, SidebandOp op) const;

  struct InputSlot {
    enum Kind { vacuum_a, vacuum_a_dag, force } kind;
    int m;  // slot frequency = omega + m * omega_m
  };
  const std::vector<InputSlot>& input_slots() const { return slots_; }

  /// Dense coefficient matrix at probe frequency omega, row-major dim x dim.
  std::vector<std::complex<double>> matrix(double omega) const;

  /// Response row of a quadrature over the input slots (direct feed-through
  /// for output ports included). Throws when the system is singular at the
  /// requested frequency (parametric threshold).
  std::vector<std::complex<double>> transfer_row(double omega, QuadPort port,
                                                 QuadSign sign) const;

 private:
  SidebandParams p_;
  std::vector<InputSlot> slots_;
};

/// Build the system, optionally with a parametric drive set a fraction
/// delta_t below threshold: beta = (Gamma/2)(1 - delta_t), Gamma = 4 Om^2/k.
/// delta_t is floored at 1e-9 for numeric solves.
SidebandSystem build_system(const SidebandParams& base);
SidebandSystem build_system(SidebandParams base, double delta_t);

/// Symmetrized stationary spectrum of a quadrature with vacuum light input
/// and the recoil force of params.phi; vacuum normalization S = 1.
double quadrature_spectrum(const SidebandSystem& sys, double omega,
                           QuadPort port, QuadSign sign);

struct VarianceOptions {
  double bandwidth = 0;        // 0 = omega_m
  double rtol = 1e-6;
  bool tail_correction = true; // append the 1/w^2 tail estimate beyond band
};

/// Equal-time variance (1/2pi) integral of the stationary spectrum.
double integrated_variance(const SidebandSystem& sys, QuadPort port,
                           QuadSign sign, const VarianceOptions& opt = {});

/// NOPA squeeze factor e^{-R} = (kappa_c - beta)/(kappa_c + beta); rejects
/// operation at or above threshold beta >= kappa_c.
double nopa_epr_factor(double beta_nopa, double kappa_c);

/// Eq.-(8)-form joint variance: e^{-2R} + (u^2/16)(3 e^{2R} + 2 sinh 2R)
/// + 4 phi / u, u = kappa/omega_m.
double epr_variance_analytic(double squeeze_r, double kappa_over_omega,
                             double phi);
struct EprOptimum {
  double kappa_over_omega = 0;
  double value = 0;
};
EprOptimum epr_optimum_analytic(double squeeze_r, double phi);

/// Joint motional EPR variance <(X_A - X_B)^2>/2 (sign = plus gives the
/// conjugate <(X-_A + X-_B)^2>/2 combination) from the numeric transfer
/// matrices of the two systems with NOPA-correlated inputs.
double epr_variance_numeric(const SidebandSystem& sys_a,
                            const SidebandSystem& sys_b, double squeeze_r,
                            QuadSign sign = QuadSign::plus,
                            const VarianceOptions& opt = {});

/// Output-light variance at omega = 0 (squeezed quadrature X+).
double squeeze_output_variance_numeric(const SidebandSystem& sys);

/// Off-threshold expansion (5/16)u^2 + (3/32)u^2 dt + (2 phi/u)(1+dt)
/// + dt^2/4, u = kappa/omega_m.
double squeeze_variance_analytic(double kappa_over_omega, double phi,
                                 double delta_t);
struct SqueezeOptimum {
  double kappa_over_omega = 0;
  double value = 0;
};
/// Threshold optimum u* = 2(2 phi/5)^{1/3}, value (3/2)(5 phi^2/2)^{1/3}.
SqueezeOptimum squeeze_optimum_ideal(double phi);

/// Beam-splitter loss model (1 - k'/k) ideal + k'/k.
double lossy_squeezing(double ideal_variance, double kappa_loss, double kappa);
/// Lossy optimum with psi = phi + kappa_loss/(2 omega_m).
SqueezeOptimum squeeze_optimum_lossy(double phi, double kappa_loss,
                                     double omega_m);

/// delta_t raising the output variance a given dB above the ideal minimum
/// at fixed kappa/omega_m (solves the off-threshold expansion).
double delta_t_for_db_above_min(double kappa_over_omega, double phi, double db);

/// Lamb-Dicke parameter eta = k Delta_x with Delta_x the position spread of
/// the anti-squeezed motional quadrature: k x_zpf sqrt(<X+_m^2>).
double lamb_dicke_eta(const SidebandSystem& sys, double x_zpf,
                      double wavevector, const VarianceOptions& opt = {});

}  // namespace levicav
