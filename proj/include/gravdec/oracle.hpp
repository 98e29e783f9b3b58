#pragma once

#include <functional>

#include "gravdec/decoherence.hpp"
#include "gravdec/kernels.hpp"
#include "gravdec/paths.hpp"
#include "gravdec/state.hpp"
#include "gravdec/units.hpp"

namespace gravdec {

enum class OscillationHandling { subdivide_per_period, plain };

struct QuadratureSpec {
  double abs_tol = 1e-15;
  double rel_tol = 1e-11;
  int max_depth = 40;
  OscillationHandling oscillation_handling = OscillationHandling::subdivide_per_period;
  // Time-domain grids: Simpson on `grid_intervals`, Richardson against twice as many.
  int grid_intervals = 1024;
  int max_grid_intervals = 16384;
  double grid_rel_tol = 1e-9;  // accepted Richardson correction relative to the estimate
  int points_per_unit = 64;    // minimum grid density per unit of Lambda t / hbar

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b]. Throws ConvergenceError when the
// tolerance is not met within spec.max_depth bisections.
QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec);
// Splits [a, b] into pieces of length `period` (if positive) before integrating each.
QuadratureResult integrate_oscillatory(const std::function<double(double)>& f, double a, double b, double period,
                                       const QuadratureSpec& spec);

// Frequency integral of the mode Hadamard function with both time derivatives
// applied analytically, in 1/s^6. The thermal occupation term runs to 50 k_B T_g / hbar.
double kernel_by_quadrature(const KernelParams& params, double t, double tp, const QuadratureSpec& spec = {});

// Brute-force decoherence functional: single integrals and the double kernel
// integral on uniform Simpson grids, Richardson-extrapolated.
QuadratureResult gamma_by_quadrature(const PathModel& paths, const GravitonState& state, const SystemParams& sys,
                                     const NewtonianSource& source, const QuadratureSpec& spec = {});

// Isolated Configuration-1 / Configuration-2 contribution `piece` at Lambda_A t / hbar = x,
// normalized to compare directly with f_function / g_function.
double f_by_quadrature(StateKind kind, Piece piece, double x, const QuadratureSpec& spec = {});
double g_by_quadrature(StateKind kind, Piece piece, double x, const QuadratureSpec& spec = {});

}  // namespace gravdec
