#include "levicav/figures.hpp"

#include <cmath>
#include <stdexcept>

#include "levicav/cooling.hpp"
#include "levicav/csv.hpp"
#include "levicav/mie.hpp"
#include "levicav/noise.hpp"
#include "levicav/numerics.hpp"
#include "levicav/sidebands.hpp"
#include "levicav/thermal.hpp"
#include "levicav/trap.hpp"
#include "levicav/units.hpp"

namespace levicav {

using constants::pi;

namespace {

std::string join(const std::string& dir, const std::string& name) {
  if (dir.empty()) return name;
  if (dir.back() == '/') return dir + name;
  return dir + "/" + name;
}

CsvWriter make_writer(const std::string& fig) {
  CsvWriter w;
  w.meta("generator", "levicav figure " + fig);
  w.meta("version", "0.1.0");
  return w;
}

Sphere default_sphere(const FigureDefaults& d) {
  return Sphere::high_index(units::nm_to_m(d.radius_nm),
                            d.density_g_cm3 * 1000.0, 0.1);
}

std::vector<std::string> fig_1c(const std::string& dir, const FigureDefaults& d) {
  Sphere s = default_sphere(d);
  double lam = d.wavelength_um * 1e-6;
  CsvWriter w = make_writer("1c");
  w.header({"intensity_w_per_um2", "omega_m_rad_s", "omega_m_over_2pi_mhz"});
  for (double i_um : numerics::log_grid(1e-3, 1e2, 61)) {
    double wm = trap_frequency(s, units::w_per_um2_to_si(i_um), lam);
    w.row({i_um, wm, units::rad_s_to_mhz(wm)});
  }
  std::string path = join(dir, "fig1c_trap_frequency.csv");
  w.write_file(path);
  return {path};
}

std::vector<std::string> fig_1d(const std::string& dir, const FigureDefaults& d) {
  CsvWriter w = make_writer("1d");
  w.header({"intensity_w_per_um2", "radius_nm", "trap_depth_k"});
  for (double i_um : numerics::log_grid(1e-3, 1e2, 41)) {
    for (double r_nm : numerics::log_grid(5.0, 100.0, 41)) {
      Sphere s = Sphere::high_index(units::nm_to_m(r_nm),
                                    d.density_g_cm3 * 1000.0);
      w.row({i_um, r_nm,
             trap_depth_kelvin(s, units::w_per_um2_to_si(i_um))});
    }
  }
  std::string path = join(dir, "fig1d_trap_depth.csv");
  w.write_file(path);
  return {path};
}

std::vector<std::string> fig_2a(const std::string& dir, const FigureDefaults& d) {
  Sphere s = default_sphere(d);
  double wm = units::mhz_to_rad_s(0.5);
  auto pts = optimize_cooling(s, d.cavity_length_cm * 1e-2,
                              d.cavity_waist_um * 1e-6,
                              d.wavelength_um * 1e-6, wm,
                              numerics::log_grid(1e3, 2e5, 120));
  CsvWriter w = make_writer("2a");
  w.header({"finesse", "kappa_rad_s", "delta2_opt", "zeta_opt", "Gamma",
            "n_tilde", "n_tilde_min", "n_f"});
  for (const auto& p : pts)
    w.row({p.finesse, p.kappa, p.delta2, p.zeta, p.gamma_cool, p.n_tilde,
           p.n_tilde_min, p.n_f});
  std::string path = join(dir, "fig2a_cooling.csv");
  w.write_file(path);
  return {path};
}

std::vector<std::string> fig_2b(const std::string& dir, const FigureDefaults& d) {
  Sphere s = default_sphere(d);
  double lam = d.wavelength_um * 1e-6;
  double wm = units::mhz_to_rad_s(0.5);
  double phi = recoil_parameter(s, lam);
  double length = d.cavity_length_cm * 1e-2;
  CavitySetup cav_ref = CavitySetup::from_finesse(length,
                                                  d.cavity_waist_um * 1e-6,
                                                  lam, 1e4);
  double g = optomech_coupling(s, cav_ref);
  CsvWriter w = make_writer("2b");
  w.header({"e_minus_2r", "delta_epr_min", "delta_epr_ideal", "finesse_opt",
            "zeta_required"});
  for (double e2r : numerics::lin_grid(0.05, 0.95, 46)) {
    double r = -0.5 * std::log(e2r);
    EprOptimum opt = epr_optimum_analytic(r, phi);
    double kappa = opt.kappa_over_omega * wm;
    double finesse = pi * constants::c0 / (2.0 * kappa * length);
    double zeta_req = kappa * kappa / (4.0 * g * wm);  // Gamma = kappa
    w.row({e2r, opt.value, e2r, finesse, zeta_req});
  }
  std::string path = join(dir, "fig2b_epr.csv");
  w.write_file(path);
  return {path};
}

std::vector<std::string> fig_2c(const std::string& dir, const FigureDefaults& d) {
  double lam = d.wavelength_um * 1e-6;
  CsvWriter w = make_writer("2c");
  w.header({"radius_nm", "dx2_min", "squeezing_db"});
  for (double r_nm : numerics::log_grid(5.0, 100.0, 61)) {
    Sphere s = Sphere::high_index(units::nm_to_m(r_nm), d.density_g_cm3 * 1000.0);
    SqueezeOptimum o = squeeze_optimum_ideal(recoil_parameter(s, lam));
    w.row({r_nm, o.value, -units::linear_to_db(o.value)});
  }
  std::string path = join(dir, "fig2c_squeezing.csv");
  w.write_file(path);
  return {path};
}

std::vector<std::string> fig_3(const std::string& dir, const FigureDefaults& d) {
  auto curves = force_comparison_sweep(2.0, d.wavelength_um * 1e-6,
                                       {0.5, 1.0, 1.5, 2.0},
                                       numerics::lin_grid(0.0, pi, 61));
  CsvWriter w = make_writer("3");
  w.header({"rho_size", "k_z0", "F_exact_arb", "F_dipole_arb"});
  for (const auto& c : curves)
    for (size_t i = 0; i < c.k_z0.size(); ++i)
      w.row({c.rho_size, c.k_z0[i], c.exact[i], c.dipole[i]});
  std::string path = join(dir, "fig3_forces.csv");
  w.write_file(path);
  return {path};
}

std::vector<std::string> fig_4(const std::string& dir, const FigureDefaults& d) {
  std::vector<std::string> paths;
  double lam = d.wavelength_um * 1e-6;
  auto pressures = numerics::log_grid(units::torr_to_pa(1e-10),
                                      units::torr_to_pa(10.0), 25);
  auto intensities = numerics::log_grid(units::w_per_um2_to_si(1e-3),
                                        units::w_per_um2_to_si(1e2), 25);
  for (double loss : {10.0, 100.0, 1000.0}) {
    double im = bulk_loss_to_im_eps(loss, 2.0, lam);
    Sphere s(units::nm_to_m(d.radius_nm), d.density_g_cm3 * 1000.0, 2.0, im, 0.1);
    Environment env = Environment::air(1.0, d.temperature_k);
    auto cells = temperature_map(s, env, pressures, intensities, lam);
    CsvWriter w = make_writer("4");
    w.meta("bulk_loss_db_km", CsvWriter::format(loss));
    w.header({"pressure_Pa", "intensity_W_m2", "T_int_K", "status"});
    for (const auto& c : cells)
      w.row_mixed({CsvWriter::format(c.pressure), CsvWriter::format(c.intensity),
                   CsvWriter::format(c.t_internal), c.status});
    std::string path = join(dir, "fig4_temperature_" +
                                     std::to_string(static_cast<int>(loss)) +
                                     "db_km.csv");
    w.write_file(path);
    paths.push_back(path);
  }
  return paths;
}

std::vector<std::string> fig_5(const std::string& dir, const FigureDefaults& d) {
  Sphere s = default_sphere(d);
  double lam = d.wavelength_um * 1e-6;
  double wm = units::mhz_to_rad_s(0.5);
  CsvWriter w = make_writer("5");
  w.header({"finesse", "n_osc_sn"});
  for (double f : numerics::log_grid(1e3, 1e5, 81)) {
    CavitySetup cav = CavitySetup::from_finesse(d.cavity_length_cm * 1e-2,
                                                d.cavity_waist_um * 1e-6, lam, f);
    TrapParams trap = trap_params_at_frequency(s, cav, wm);
    auto sn = shot_noise_heating(trap, cav, trap.photon_number);
    w.row({f, sn.n_osc});
  }
  std::string path = join(dir, "fig5_shot_noise.csv");
  w.write_file(path);
  return {path};
}

std::vector<std::string> fig_6(const std::string& dir, const FigureDefaults& d) {
  double lam = d.wavelength_um * 1e-6;
  double k = 2.0 * pi / lam;
  double wm = units::mhz_to_rad_s(1.0);
  CsvWriter w = make_writer("6");
  w.header({"radius_nm", "eta"});
  for (double r_nm : numerics::log_grid(10.0, 100.0, 25)) {
    Sphere s = Sphere::high_index(units::nm_to_m(r_nm), d.density_g_cm3 * 1000.0);
    double phi = recoil_parameter(s, lam);
    SqueezeOptimum opt = squeeze_optimum_ideal(phi);
    double kappa = opt.kappa_over_omega * wm;
    double dt = delta_t_for_db_above_min(opt.kappa_over_omega, phi, 1.0);
    SidebandParams p;
    p.kappa = kappa;
    p.omega_drive = kappa / 2.0;  // Gamma = kappa
    p.omega_m = wm;
    p.phi = phi;
    SidebandSystem sys = build_system(p, dt);
    double x_zpf = std::sqrt(constants::hbar / (2.0 * s.mass() * wm));
    w.row({r_nm, lamb_dicke_eta(sys, x_zpf, k)});
  }
  std::string path = join(dir, "fig6_lamb_dicke.csv");
  w.write_file(path);
  return {path};
}

}  // namespace

std::vector<std::string> figure_ids() {
  return {"1c", "1d", "2a", "2b", "2c", "3", "4", "5", "6"};
}

std::vector<std::string> write_figure(const std::string& fig_id,
                                      const std::string& out_dir,
                                      const FigureDefaults& d) {
  if (fig_id == "1c") return fig_1c(out_dir, d);
  if (fig_id == "1d") return fig_1d(out_dir, d);
  if (fig_id == "2a") return fig_2a(out_dir, d);
  if (fig_id == "2b") return fig_2b(out_dir, d);
  if (fig_id == "2c") return fig_2c(out_dir, d);
  if (fig_id == "3") return fig_3(out_dir, d);
  if (fig_id == "4") return fig_4(out_dir, d);
  if (fig_id == "5") return fig_5(out_dir, d);
  if (fig_id == "6") return fig_6(out_dir, d);
  throw std::invalid_argument("write_figure: unknown figure id '" + fig_id + "'");
}

}  // namespace levicav
