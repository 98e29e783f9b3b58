#pragma once

#include <cmath>
#include <numbers>

namespace gravdec {

// CODATA 2018 exact / recommended values, SI units.
struct PhysicalConstants {
  static constexpr double c = 299792458.0;         // m/s
  static constexpr double G = 6.67430e-11;         // m^3 / (kg s^2)
  static constexpr double hbar = 1.054571817e-34;  // J s
  static constexpr double k_B = 1.380649e-23;      // J/K

  static double planck_energy() { return std::sqrt(hbar * c * c * c * c * c / G); }
  static double planck_mass() { return planck_energy() / (c * c); }
  static double planck_length() { return std::sqrt(hbar * G / (c * c * c)); }
  static double planck_time() { return planck_length() / c; }
};

using constants = PhysicalConstants;

inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double pi = std::numbers::pi;

// Graviton mode mass in Planck units.
inline constexpr double graviton_mode_mass = pi * pi / 2.0;

}  // namespace gravdec
