#pragma once

#include <numbers>

namespace levicav::constants {

inline constexpr double pi = std::numbers::pi;

// CODATA 2018 / exact SI values
inline constexpr double c0 = 2.99792458e8;           // speed of light, m/s
inline constexpr double hbar = 1.054571817e-34;      // reduced Planck, J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J/K
inline constexpr double eps0 = 8.8541878128e-12;     // vacuum permittivity, F/m
inline constexpr double atomic_mass = 1.66053906660e-27;  // kg

inline constexpr double torr_in_pa = 133.322;
inline constexpr double zeta5 = 1.0369277551433699;  // Riemann zeta(5)

}  // namespace levicav::constants
