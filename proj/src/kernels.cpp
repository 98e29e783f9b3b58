#include "gravdec/kernels.hpp"

#include <cmath>

#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/special_functions.hpp"

namespace gravdec {

namespace {

// Frequency-unit combination F5 - 2 tau_z F3 shared by every cutoff-limited term.
double cutoff_piece(double y, double tau_z) { return kernel_aux(5, y) - 2.0 * tau_z * kernel_aux(3, y); }

}  // namespace

void KernelParams::validate() const {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw DomainError("kernel cutoff must be positive");
  if (!(T_zz >= 0.0) || !std::isfinite(T_zz)) throw DomainError("T_zz must be non-negative");
  state.validate();
}

double hadamard(const GravitonState& state, double omega, double t, double tp) {
  if (!(omega > 0.0)) throw DomainError("hadamard: requires omega > 0");
  state.validate();
  const double inv = 1.0 / (graviton_mode_mass * omega);
  const double vac = inv * std::cos(omega * (t - tp));
  switch (state.kind) {
    case StateKind::vacuum:
      return vac;
    case StateKind::thermal: {
      const double occupation = 1.0 / std::expm1(constants::hbar * omega / (constants::k_B * state.T_g));
      return vac * (1.0 + 2.0 * occupation);
    }
    case StateKind::coherent:
      return vac + state.alpha * state.alpha * inv * std::cos(omega * t) * std::cos(omega * tp);
    case StateKind::squeezed:
      return std::cosh(2.0 * state.r) * vac - std::sinh(2.0 * state.r) * inv * std::cos(omega * (t + tp));
  }
  return vac;
}

ScaledKernel::ScaledKernel(const GravitonState& state, double theta, double tau_z)
    : kind_(state.kind), theta_(theta), tau_z_(tau_z), vacuum_weight_(1.0), nonstationary_weight_(0.0) {
  state.validate();
  switch (kind_) {
    case StateKind::vacuum:
      break;
    case StateKind::thermal:
      if (!(theta > 0.0)) throw DomainError("thermal kernel requires theta > 0");
      break;
    case StateKind::coherent:
      vacuum_weight_ = 1.0 + 0.5 * state.alpha * state.alpha;
      nonstationary_weight_ = 0.5 * state.alpha * state.alpha;
      break;
    case StateKind::squeezed:
      vacuum_weight_ = std::cosh(2.0 * state.r);
      nonstationary_weight_ = -std::sinh(2.0 * state.r);
      break;
  }
}

ScaledKernel ScaledKernel::from_params(const KernelParams& params) {
  params.validate();
  const double theta = params.state.kind == StateKind::thermal
                           ? pi * constants::k_B * params.state.T_g / (constants::hbar * params.cutoff)
                           : 0.0;
  return ScaledKernel(params.state, theta, params.T_zz / (params.cutoff * params.cutoff));
}

double ScaledKernel::stationary(double delta) const {
  double value = vacuum_weight_ * 2.0 / (15.0 * pi) * cutoff_piece(delta, tau_z_);
  if (kind_ == StateKind::thermal) {
    const double y = theta_ * delta;
    const double th4 = theta_ * theta_ * theta_ * theta_;
    value += 8.0 * th4 / (5.0 * pi) *
             (10.0 * theta_ * theta_ * thermal_aux_even(1, y) - tau_z_ * thermal_aux_even(2, y));
  }
  return value;
}

double ScaledKernel::nonstationary(double sigma) const {
  if (nonstationary_weight_ == 0.0) return 0.0;
  return nonstationary_weight_ * 2.0 / (15.0 * pi) * cutoff_piece(sigma, tau_z_);
}

double noise_kernel(const KernelParams& params, double t, double tp) {
  const ScaledKernel kernel = ScaledKernel::from_params(params);
  const double scale = std::pow(params.cutoff, 6);
  return scale * kernel(params.cutoff * t, params.cutoff * tp);
}

double noise_kernel_coincident(const KernelParams& params, double t) {
  const ScaledKernel kernel = ScaledKernel::from_params(params);
  return std::pow(params.cutoff, 6) * kernel.coincident(params.cutoff * t);
}

double internal_noise_strength(double eta, double T_int) {
  if (!(eta >= 0.0)) throw DomainError("eta must be non-negative");
  if (!(T_int > 0.0)) throw DomainError("T_int must be positive");
  return eta * pi * constants::k_B * T_int / constants::hbar;
}

double angular_integral(int i, int j, int k, int l) {
  for (int index : {i, j, k, l}) {
    if (index < 1 || index > 3) throw DomainError("angular_integral: indices must lie in 1..3");
  }
  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  return 8.0 * pi / 15.0 * (3.0 * (d(i, k) * d(j, l) + d(i, l) * d(j, k)) - 2.0 * d(i, j) * d(k, l));
}

}  // namespace gravdec
