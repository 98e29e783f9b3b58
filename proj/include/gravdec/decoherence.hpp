#pragma once

#include <variant>

#include "gravdec/paths.hpp"
#include "gravdec/special_functions.hpp"
#include "gravdec/state.hpp"
#include "gravdec/units.hpp"

namespace gravdec {

// Pieces of the decoherence function: G, G+I, G+N, G+N+I.
enum class Piece { I = 1, II = 2, III = 3, IV = 4 };

struct StateConstants {
  double b = 1.0;        // weight of the vacuum term
  double Lambda_A = 0.0; // J
  double kappa_A = 0.0;  // eta pi k_B T_int Lambda_A, J^2
  double K1 = 0.0;
  double K2 = 0.0;
};

StateConstants state_constants(const GravitonState& state, const SystemParams& sys);

// Configuration 1 reads Xi and v from SystemParams.
struct Config1 {};
struct Config2 {
  double v1 = 0.0;
  double v2 = 0.0;
};
using Configuration = std::variant<Config1, Config2>;

// Configuration 1 profile functions of x = Lambda_A t / hbar.
double f_function(StateKind kind, Piece piece, double x);
// Configuration 2 profile functions.
double g_function(StateKind kind, Piece piece, double x);
// Below threshold the Taylor table is used; threshold 0 means the closed form is exact.
SeriesSwitch f_switch(StateKind kind, Piece piece);
SeriesSwitch g_switch(StateKind kind, Piece piece);
// Closed form only, never the series; for continuity checks.
double f_closed_form(StateKind kind, Piece piece, double x);
double g_closed_form(StateKind kind, Piece piece, double x);

double gamma1(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source, double t);
double gamma2(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source,
              const Config2& config, double t);
double gamma(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source,
             const Configuration& config, double t);

// Direct evaluation of the decoherence functional over sampled paths with
// trapezoid weights. O(n^2) kernel evaluations.
double gamma_general(const PathConfiguration& paths, const GravitonState& state, const SystemParams& sys,
                     const NewtonianSource& source);

// Graviton scattering cross section dsigma/dOmega in m^2/sr for a source of mass M.
double cross_section(double theta, double M);

}  // namespace gravdec
