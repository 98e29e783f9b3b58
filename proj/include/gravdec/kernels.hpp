#pragma once

#include "gravdec/state.hpp"

namespace gravdec {

struct KernelParams {
  double cutoff = 0.0;  // Lambda / hbar, 1/s
  double T_zz = 0.0;    // 1/s^2
  GravitonState state;

  void validate() const;
};

// Hadamard function of a single graviton mode in Planck units, omega in 1/s.
double hadamard(const GravitonState& state, double omega, double t, double tp);

// Noise kernel written in u = Lambda t / hbar and scaled by (hbar/Lambda)^6:
//   n(u, u') = S(u - u') + P(u + u').
// theta = pi k_B T_g / Lambda and tau_z = T_zz (hbar/Lambda)^2.
class ScaledKernel {
 public:
  ScaledKernel(const GravitonState& state, double theta, double tau_z);
  static ScaledKernel from_params(const KernelParams& params);

  // Part depending on u - u' only.
  double stationary(double delta) const;
  // Part depending on u + u' only; zero for vacuum and thermal.
  double nonstationary(double sigma) const;
  bool has_nonstationary() const { return nonstationary_weight_ != 0.0; }

  double operator()(double u, double up) const { return stationary(u - up) + nonstationary(u + up); }
  double coincident(double u) const { return stationary(0.0) + nonstationary(2.0 * u); }

  double theta() const { return theta_; }
  double tau_z() const { return tau_z_; }

 private:
  StateKind kind_;
  double theta_;
  double tau_z_;
  double vacuum_weight_;
  double nonstationary_weight_;
};

// N_g(t, t') in 1/s^6.
double noise_kernel(const KernelParams& params, double t, double tp);
// N_g(t) = lim_{t' -> t} N_g(t, t').
double noise_kernel_coincident(const KernelParams& params, double t);

// Strength eta pi k_B T_int / hbar (1/s) of the delta-correlated internal noise.
double internal_noise_strength(double eta, double T_int);

// (8 pi / 15) [3 (d_ik d_jl + d_il d_jk) - 2 d_ij d_kl], indices 1..3.
double angular_integral(int i, int j, int k, int l);

}  // namespace gravdec
