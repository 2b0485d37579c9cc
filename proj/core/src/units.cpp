#include "levicav/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "levicav/constants.hpp"

namespace levicav::units {

using constants::k_boltzmann;
using constants::pi;
using constants::torr_in_pa;

double torr_to_pa(double torr) { return torr * torr_in_pa; }
double pa_to_torr(double pa) { return pa / torr_in_pa; }
double w_per_um2_to_si(double i) { return i * 1e12; }
double si_to_w_per_um2(double i) { return i * 1e-12; }
double nm_to_m(double nm) { return nm * 1e-9; }
double m_to_nm(double m) { return m * 1e9; }
double mhz_to_rad_s(double mhz) { return mhz * 2.0 * pi * 1e6; }
double rad_s_to_mhz(double w) { return w / (2.0 * pi * 1e6); }
double kelvin_to_joule(double t) { return t * k_boltzmann; }
double joule_to_kelvin(double e) { return e / k_boltzmann; }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double convert(double value, std::string_view from, std::string_view to) {
  if (from == to) return value;
  struct Pair {
    std::string_view from, to;
    double (*fn)(double);
  };
  static constexpr Pair table[] = {
      {"torr", "pa", torr_to_pa},        {"pa", "torr", pa_to_torr},
      {"w_per_um2", "w_per_m2", w_per_um2_to_si},
      {"w_per_m2", "w_per_um2", si_to_w_per_um2},
      {"nm", "m", nm_to_m},              {"m", "nm", m_to_nm},
      {"mhz", "rad_s", mhz_to_rad_s},    {"rad_s", "mhz", rad_s_to_mhz},
      {"k", "j", kelvin_to_joule},       {"j", "k", joule_to_kelvin},
      {"db", "linear", db_to_linear},    {"linear", "db", linear_to_db},
  };
  for (const auto& p : table)
    if (p.from == from && p.to == to) return p.fn(value);
  throw std::invalid_argument("units::convert: unsupported pair " +
                              std::string(from) + " -> " + std::string(to));
}

}  // namespace levicav::units
