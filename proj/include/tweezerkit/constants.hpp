#pragma once

// CODATA 2018 physical constants, SI units.
namespace twk::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double planck = 6.62607015e-34;           // J s
inline constexpr double boltzmann = 1.380649e-23;          // J/K
inline constexpr double epsilon0 = 8.8541878128e-12;       // F/m
inline constexpr double speed_of_light = 299792458.0;      // m/s
inline constexpr double bohr_magneton = 9.2740100783e-24;  // J/T
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double gauss = 1e-4;                      // T

}  // namespace twk::constants
