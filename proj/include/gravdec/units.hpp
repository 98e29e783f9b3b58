#pragma once

#include "gravdec/state.hpp"

namespace gravdec {

// Composite particle. Configuration 1 reads Xi and v from here.
struct SystemParams {
  double m = 0.0;      // kg
  double v = 0.0;      // m/s, arm speed
  double Xi = 0.0;     // m, mean superposition position
  double L0 = 0.0;     // m, detector size (sets the cutoff)
  double eta = 0.0;    // internal coupling, dimensionless
  double T_int = 0.0;  // K

  // Xi is tied to L0.
  static SystemParams with_xi_equal_l0(double m, double v, double L0, double eta, double T_int) {
    return {m, v, L0, L0, eta, T_int};
  }

  // Throws DomainError on non-positive m, v, Xi, L0, T_int, negative eta or v >= c.
  void validate() const;
  // v/c > 0.1 leaves the nonrelativistic regime the formulas assume.
  bool relativistic_warning() const;
};

// Newtonian source; M = 0 switches the potential off.
struct NewtonianSource {
  double M = 0.0;  // kg
  double R = 1.0;  // m

  static NewtonianSource none() { return {0.0, 1.0}; }
  static NewtonianSource earth() { return {5.972e24, 6.371e6}; }
  static NewtonianSource sun() { return {1.989e30, 6.957e8}; }
  // 1.3 solar masses inside 10 km.
  static NewtonianSource neutron_star() { return {1.3 * 1.989e30, 1.0e4}; }

  void validate() const;
  // GM/R^3 in s^-2.
  double curvature_frequency_squared() const;
};

// Scale-free inputs of the closed forms for one graviton state. Lambda_A is
// the cutoff for vacuum/coherent/squeezed and pi k_B T_g for thermal.
struct DimensionlessGroups {
  double x_scale = 0.0;            // Lambda_A / hbar, 1/s
  double v_over_c = 0.0;
  double m_over_MP = 0.0;
  double kappa_over_Erest2 = 0.0;  // kappa_A / (m c^2)^2
  double tidal_ratio = 0.0;        // (hbar/Lambda_A)^2 G M / R^3
  double T_zz_phys = 0.0;          // 2 G M / R^3, 1/s^2
  double xi_over_LA = 0.0;         // Xi Lambda_A / (hbar c)

  double x_at(double t) const { return x_scale * t; }
};

// Energy cutoff hbar c / L0 in joules.
double cutoff_from_detector(double L0);
// Cutoff as an angular frequency c / L0.
double cutoff_frequency(double L0);

// Tidal component T_zz = 2 G M / R^3 in s^-2.
double tidal_zz(const NewtonianSource& source);

// kappa / E_rest^2 = eta pi k_B T_int Lambda / (m c^2)^2 with Lambda = hbar c / L0.
double internal_ratio(const SystemParams& sys);
// L(m, T_int) = pi k_B T_int hbar c / (m c^2)^2, so internal_ratio = eta L / L0.
double internal_length(double m, double T_int);

// Lambda_A in joules for the state.
double state_energy_scale(const SystemParams& sys, const GravitonState& state);

DimensionlessGroups to_dimensionless(const SystemParams& sys, const NewtonianSource& source,
                                     const GravitonState& state);

}  // namespace gravdec
