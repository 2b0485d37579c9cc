#pragma once

#include <string_view>

namespace levicav::units {

double torr_to_pa(double torr);
double pa_to_torr(double pa);
double w_per_um2_to_si(double i);
double si_to_w_per_um2(double i);
double nm_to_m(double nm);
double m_to_nm(double m);
double mhz_to_rad_s(double mhz);
double rad_s_to_mhz(double w);
double kelvin_to_joule(double t);
double joule_to_kelvin(double e);
double db_to_linear(double db);
double linear_to_db(double ratio);

/// Generic conversion over the supported pair table; throws
/// std::invalid_argument for an unsupported pair.
/// Units: "torr", "pa", "w_per_um2", "w_per_m2", "nm", "m", "mhz",
/// "rad_s", "k", "j", "db", "linear".
double convert(double value, std::string_view from, std::string_view to);

}  // namespace levicav::units
