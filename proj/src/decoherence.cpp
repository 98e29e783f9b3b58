#include "gravdec/decoherence.hpp"

#include <cmath>
#include <string>

#include "gravdec/constants.hpp"
#include "gravdec/detail/series_tables.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/kernels.hpp"

namespace gravdec {

namespace {

using detail::SeriesTable;

constexpr double kTrigSwitch = 2.0;
constexpr double kThermalSwitch = 1.0;

double ci(double x) { return cosine_integral(x); }

// ---- configuration 1 closed forms ----

double fv1(double x) {
  return 1.0 + 2.0 / (3.0 * x) * (std::sin(x) - 8.0 * std::sin(0.5 * x)) +
         (2.0 / 3.0 * std::cos(x) - 32.0 / 3.0 * std::cos(0.5 * x) + 10.0) / (x * x);
}

double fv3(double x) {
  return 8.0 * euler_gamma - 4.0 / 3.0 * std::log(4.0) - 32.0 / 3.0 * ci(0.5 * x) + 8.0 / 3.0 * ci(x) +
         8.0 * std::log(0.5 * x);
}

double ft1(double x) {
  // (1 + 16e^x + 26e^2x + 16e^3x + e^4x) / (e^2x - 1)^2, divided through by e^4x.
  const double u = std::exp(-x);
  const double den = -std::expm1(-2.0 * x);
  return ((((u + 16.0) * u + 26.0) * u + 16.0) * u + 1.0) / (den * den) - 15.0 / (x * x);
}

double ft3(double x) {
  // 4 ln[2 (e^x - 1)^3 / (x^3 (e^x + 1))] - 4x
  const double u = std::exp(-x);
  return 4.0 * (std::log(2.0) + x + 3.0 * std::log1p(-u) - std::log1p(u) - 3.0 * std::log(x));
}

double fc1(double x) {
  return 3.5 +
         (3.0 * std::sin(2.0 * x) - 16.0 * (9.0 * std::sin(0.5 * x) - 3.0 * std::sin(x) + std::sin(1.5 * x))) /
             (6.0 * x) +
         (1495.0 - 1728.0 * std::cos(0.5 * x) + 288.0 * std::cos(x) - 64.0 * std::cos(1.5 * x) +
          9.0 * std::cos(2.0 * x)) /
             (36.0 * x * x);
}

double cs2(double x) {
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double x2 = x * x;
  return (49.0 + 24.0 * (x2 - 2.0) * c + (2.0 * x2 - 1.0) * std::cos(2.0 * x) - 4.0 * x * (12.0 - 2.0 * x2 + c) * s) /
         (8.0 * x2 * x);
}

double fc3(double x) {
  return 28.0 * euler_gamma + 4.0 * (std::log(81.0) + 7.0 * std::log(x) - 17.0 * std::log(2.0)) - 48.0 * ci(0.5 * x) +
         32.0 * ci(x) - 16.0 * ci(1.5 * x) + 4.0 * ci(2.0 * x);
}

double fs4(double x) {
  const double c = std::cos(x);
  return 4.0 * std::sin(x) + 2.0 / x * (2.0 * c + c * c - 3.0);
}

double fs1(double x) {
  return 0.5 +
         (std::sin(2.0 * x) + 12.0 * std::sin(x) - 16.0 * std::sin(0.5 * x) - 16.0 / 3.0 * std::sin(1.5 * x)) /
             (2.0 * x) +
         (415.0 - 576.0 * std::cos(0.5 * x) + 216.0 * std::cos(x) - 64.0 * std::cos(1.5 * x) +
          9.0 * std::cos(2.0 * x)) /
             (36.0 * x * x);
}

double fs3(double x) {
  return 4.0 * euler_gamma + 4.0 * (std::log(81.0) + std::log(x) - 9.0 * std::log(2.0)) - 16.0 * ci(0.5 * x) +
         24.0 * ci(x) - 16.0 * ci(1.5 * x) + 4.0 * ci(2.0 * x);
}

// ---- configuration 2 closed forms ----

double gv1(double x) {
  return 0.25 * x * x * x * x + 8.0 * euler_gamma - 12.0 - 8.0 * ci(x) + 8.0 * std::log(x) + 4.0 * x * std::sin(x) +
         12.0 * std::cos(x);
}

double gv3(double x) {
  const double x2 = x * x;
  return 2.0 * x2 * x2 - 8.0 * x2 + 16.0 * std::cos(x) + 16.0 * x * std::sin(x) - 16.0;
}

double gt1(double x) {
  // ln((e^2x - 1)/(2x)) = 2x + ln(1 - e^-2x) - ln 2x;
  // (sinh 2x + x)/sinh^2 x = 2 coth x + 4 x u^2/(1 - u^2)^2 with u = e^-x.
  const double u = std::exp(-x);
  const double u2 = u * u;
  const double sm = -std::expm1(-2.0 * x);
  const double coth = (1.0 + u2) / sm;
  const double log_term = 2.0 * x + std::log1p(-u2) - std::log(2.0 * x);
  const double x4 = x * x * x * x;
  return 1.0 - 2.0 * x / 3.0 + x4 / 90.0 + 2.0 / 3.0 * log_term -
         x / 3.0 * (2.0 * coth + 4.0 * x * u2 / (sm * sm));
}

double gc1(double x) {
  const double x2 = x * x;
  return x2 * x2 / 8.0 + 2.0 * euler_gamma - 59.0 / 16.0 + (59.0 - 22.0 * x2) * std::cos(2.0 * x) / 16.0 -
         2.0 * ci(2.0 * x) - 2.0 * std::log(0.5 * x) + 4.0 * std::log(x) + x / 8.0 * (27.0 - 2.0 * x2) * std::sin(2.0 * x);
}

double gs2(double x) {
  const double x2 = x * x;
  return (15.0 + (-15.0 + 18.0 * x2 - 2.0 * x2 * x2) * std::cos(2.0 * x)) / (4.0 * x) + 2.0 * (x2 - 3.0) * std::sin(2.0 * x);
}

double gc3(double x) {
  const double x2 = x * x;
  return x2 * x2 - 3.5 * x2 - 4.0 + (4.0 - 4.5 * x2) * std::cos(2.0 * x) - x * (x2 - 8.0) * std::sin(2.0 * x);
}

double gs4(double x) {
  const double x2 = x * x;
  return 3.0 * x + x * (9.0 - 2.0 * x2) * std::cos(2.0 * x) + 6.0 * (x2 - 1.0) * std::sin(2.0 * x);
}

double gs1(double x) {
  const double x2 = x * x;
  return 37.0 / 8.0 - 4.0 * euler_gamma - 12.0 * std::cos(x) + (59.0 - 22.0 * x2) * std::cos(2.0 * x) / 8.0 +
         8.0 * ci(x) - 4.0 * ci(2.0 * x) - 4.0 * std::log(0.5 * x) -
         0.5 * x * (8.0 + (2.0 * x2 - 27.0) * std::cos(x)) * std::sin(x);
}

double gs3(double x) {
  const double x2 = x * x;
  const double c = std::cos(x);
  return x2 + 8.0 - 16.0 * c + (8.0 - 9.0 * x2) * std::cos(2.0 * x) - 4.0 * x * (4.0 + (x2 - 8.0) * c) * std::sin(x);
}

struct Entry {
  double (*closed)(double);
  const SeriesTable* series;
  double threshold;
};

double cube_over(double x, double d) { return x * x * x / d; }
double fifth_over(double x, double d) { return x * x * x * x * x / d; }

double fv2(double x) { return cube_over(x, 108.0); }
double fv4(double x) { return cube_over(x, 18.0); }
double ft2(double x) { return 4.0 * cube_over(x, 189.0); }
double ft4(double x) { return 2.0 * cube_over(x, 45.0); }
double fc2(double x) { return cube_over(x, 36.0) + cs2(x); }
double fc4(double x) { return cube_over(x, 6.0) + fs4(x); }
double fs2(double x) { return cs2(x); }

double gv2(double x) { return fifth_over(x, 15.0); }
double gv4(double x) { return 2.0 * fifth_over(x, 5.0); }
double gt2(double x) { return 8.0 * fifth_over(x, 945.0); }
double gt3(double x) { return polylog_combination_gt3(x); }
double gt4(double x) { return 4.0 * fifth_over(x, 225.0); }
double gc2(double x) { return fifth_over(x, 30.0) + 0.5 * gs2(x); }
double gc4(double x) { return 1.5 * x + fifth_over(x, 5.0) + x * (4.5 - x * x) * std::cos(2.0 * x) + 3.0 * (x * x - 1.0) * std::sin(2.0 * x); }

Entry f_entry(StateKind kind, Piece piece) {
  using namespace detail;
  switch (kind) {
    case StateKind::vacuum:
      switch (piece) {
        case Piece::I: return {fv1, &f_v_I_series, kTrigSwitch};
        case Piece::II: return {fv2, nullptr, 0.0};
        case Piece::III: return {fv3, &f_v_III_series, kTrigSwitch};
        case Piece::IV: return {fv4, nullptr, 0.0};
      }
      break;
    case StateKind::thermal:
      switch (piece) {
        case Piece::I: return {ft1, &f_t_I_series, kThermalSwitch};
        case Piece::II: return {ft2, nullptr, 0.0};
        case Piece::III: return {ft3, &f_t_III_series, kThermalSwitch};
        case Piece::IV: return {ft4, nullptr, 0.0};
      }
      break;
    case StateKind::coherent:
      switch (piece) {
        case Piece::I: return {fc1, &f_c_I_series, kTrigSwitch};
        case Piece::II: return {fc2, &f_c_II_series, kTrigSwitch};
        case Piece::III: return {fc3, &f_c_III_series, kTrigSwitch};
        case Piece::IV: return {fc4, &f_c_IV_series, kTrigSwitch};
      }
      break;
    case StateKind::squeezed:
      switch (piece) {
        case Piece::I: return {fs1, &f_s_I_series, kTrigSwitch};
        case Piece::II: return {fs2, &f_s_II_series, kTrigSwitch};
        case Piece::III: return {fs3, &f_s_III_series, kTrigSwitch};
        case Piece::IV: return {fs4, &f_s_IV_series, kTrigSwitch};
      }
      break;
  }
  throw DomainError("unknown f family");
}

Entry g_entry(StateKind kind, Piece piece) {
  using namespace detail;
  switch (kind) {
    case StateKind::vacuum:
      switch (piece) {
        case Piece::I: return {gv1, &g_v_I_series, kTrigSwitch};
        case Piece::II: return {gv2, nullptr, 0.0};
        case Piece::III: return {gv3, &g_v_III_series, kTrigSwitch};
        case Piece::IV: return {gv4, nullptr, 0.0};
      }
      break;
    case StateKind::thermal:
      switch (piece) {
        case Piece::I: return {gt1, &g_t_I_series, kThermalSwitch};
        case Piece::II: return {gt2, nullptr, 0.0};
        // Switching is handled inside polylog_combination_gt3.
        case Piece::III: return {gt3, nullptr, 0.0};
        case Piece::IV: return {gt4, nullptr, 0.0};
      }
      break;
    case StateKind::coherent:
      switch (piece) {
        case Piece::I: return {gc1, &g_c_I_series, kTrigSwitch};
        case Piece::II: return {gc2, &g_c_II_series, kTrigSwitch};
        case Piece::III: return {gc3, &g_c_III_series, kTrigSwitch};
        case Piece::IV: return {gc4, &g_c_IV_series, kTrigSwitch};
      }
      break;
    case StateKind::squeezed:
      switch (piece) {
        case Piece::I: return {gs1, &g_s_I_series, kTrigSwitch};
        case Piece::II: return {gs2, &g_s_II_series, kTrigSwitch};
        case Piece::III: return {gs3, &g_s_III_series, kTrigSwitch};
        case Piece::IV: return {gs4, &g_s_IV_series, kTrigSwitch};
      }
      break;
  }
  throw DomainError("unknown g family");
}

double evaluate(const Entry& e, double x) {
  if (!(x >= 0.0)) throw DomainError("profile functions require x >= 0");
  if (x == 0.0) return 0.0;
  if (e.series != nullptr && x < e.threshold) return detail::eval_series(*e.series, x);
  return e.closed(x);
}

SeriesSwitch switch_of(const Entry& e) {
  if (e.series == nullptr) return {0.0, 0};
  return {e.threshold, static_cast<int>(e.series->coefficients.size())};
}

struct Scaled {
  double x;
  double R;    // kappa_A / (m c^2)^2
  double rho;  // (hbar / Lambda_A)^2 G M / R^3
  double xi;   // Xi Lambda_A / (hbar c)
};

Scaled scaled(double Lambda_A, const SystemParams& sys, const NewtonianSource& source, double t) {
  const double rest = sys.m * constants::c * constants::c;
  const double h_over = constants::hbar / Lambda_A;
  Scaled s;
  s.x = t / h_over;
  s.R = sys.eta * pi * constants::k_B * sys.T_int * Lambda_A / (rest * rest);
  s.rho = h_over * h_over * source.curvature_frequency_squared();
  s.xi = sys.Xi * Lambda_A / (constants::hbar * constants::c);
  return s;
}

template <class F>
double bracket(F fn, StateKind kind, const Scaled& s) {
  if (s.x == 0.0) return 0.0;
  const double inner = fn(kind, Piece::I, s.x) + s.R * fn(kind, Piece::II, s.x);
  if (s.rho == 0.0) return inner;
  return inner - s.rho * (fn(kind, Piece::III, s.x) + s.R * fn(kind, Piece::IV, s.x));
}

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
}

}  // namespace

StateConstants state_constants(const GravitonState& state, const SystemParams& sys) {
  state.validate();
  StateConstants k;
  k.Lambda_A = state_energy_scale(sys, state);
  k.kappa_A = sys.eta * pi * constants::k_B * sys.T_int * k.Lambda_A;
  switch (state.kind) {
    case StateKind::vacuum:
      k.K1 = 2.0;
      k.K2 = 1.0;
      break;
    case StateKind::thermal:
      k.K1 = 4.0 / 3.0;
      k.K2 = 12.0;
      break;
    case StateKind::coherent:
      k.K1 = state.alpha * state.alpha / 3.0;
      k.K2 = state.alpha * state.alpha;
      break;
    case StateKind::squeezed:
      k.b = std::cosh(2.0 * state.r);
      k.K1 = -2.0 / 3.0 * std::sinh(2.0 * state.r);
      k.K2 = -std::sinh(2.0 * state.r);
      break;
  }
  return k;
}

double f_function(StateKind kind, Piece piece, double x) { return evaluate(f_entry(kind, piece), x); }
double g_function(StateKind kind, Piece piece, double x) { return evaluate(g_entry(kind, piece), x); }
SeriesSwitch f_switch(StateKind kind, Piece piece) { return switch_of(f_entry(kind, piece)); }
SeriesSwitch g_switch(StateKind kind, Piece piece) {
  if (kind == StateKind::thermal && piece == Piece::III) return polylog_combination_gt3_switch();
  return switch_of(g_entry(kind, piece));
}

double f_closed_form(StateKind kind, Piece piece, double x) {
  if (!(x > 0.0)) throw DomainError("closed forms require x > 0");
  return f_entry(kind, piece).closed(x);
}

double g_closed_form(StateKind kind, Piece piece, double x) {
  if (!(x > 0.0)) throw DomainError("closed forms require x > 0");
  if (kind == StateKind::thermal && piece == Piece::III) {
    // The real rewrite itself, bypassing the series branch.
    const double u = std::exp(-2.0 * x);
    const double x2 = x * x;
    return x2 * x2 / 9.0 - 4.0 / 9.0 * x2 * x + 2.0 / 3.0 * x2 - 4.0 / 3.0 * x2 * std::log1p(-u) +
           4.0 / 3.0 * x * polylog_small(2, u) + 2.0 / 3.0 * polylog_small(3, u) - 2.0 / 3.0 * zeta3();
  }
  return g_entry(kind, piece).closed(x);
}

double gamma1(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source, double t) {
  check_time(t);
  sys.validate();
  source.validate();
  state.validate();
  const double mu = sys.m / constants::planck_mass();
  const double beta = sys.v / constants::c;
  const double pref = 8.0 / (5.0 * pi) * mu * mu * beta * beta;

  const Scaled sv = scaled(cutoff_from_detector(sys.L0), sys, source, t);
  const double vac = pref * sv.xi * sv.xi * 2.0 * bracket(f_function, StateKind::vacuum, sv);
  if (state.kind == StateKind::vacuum) return vac;

  const StateConstants k = state_constants(state, sys);
  if (k.K1 == 0.0) return k.b * vac;
  const Scaled sa = scaled(k.Lambda_A, sys, source, t);
  return k.b * vac + pref * sa.xi * sa.xi * k.K1 * bracket(f_function, state.kind, sa);
}

double gamma2(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source,
              const Config2& config, double t) {
  check_time(t);
  sys.validate();
  source.validate();
  state.validate();
  if (!(std::abs(config.v1) < constants::c) || !(std::abs(config.v2) < constants::c)) {
    throw DomainError("configuration speeds must be below c");
  }
  const double b1 = config.v1 / constants::c;
  const double b2 = config.v2 / constants::c;
  const double d = (b1 * b1 - b2 * b2) * (b1 * b1 - b2 * b2);
  if (d == 0.0) return 0.0;
  const double mu = sys.m / constants::planck_mass();

  const double free_term = pi * sys.eta * constants::k_B * sys.T_int / (4.0 * constants::hbar) * d *
                           (0.5 * t + 2.0 / 3.0 * source.curvature_frequency_squared() * t * t * t);
  const double pref = mu * mu * d / (15.0 * pi);

  const Scaled sv = scaled(cutoff_from_detector(sys.L0), sys, source, t);
  const double vac = pref * bracket(g_function, StateKind::vacuum, sv);
  if (state.kind == StateKind::vacuum) return free_term + vac;

  const StateConstants k = state_constants(state, sys);
  if (k.K2 == 0.0) return free_term + k.b * vac;
  const Scaled sa = scaled(k.Lambda_A, sys, source, t);
  return free_term + k.b * vac + pref * k.K2 * bracket(g_function, state.kind, sa);
}

double gamma(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source,
             const Configuration& config, double t) {
  if (const auto* c2 = std::get_if<Config2>(&config)) return gamma2(state, sys, source, *c2, t);
  return gamma1(state, sys, source, t);
}

double gamma_general(const PathConfiguration& paths, const GravitonState& state, const SystemParams& sys,
                     const NewtonianSource& source) {
  paths.validate();
  sys.validate();
  source.validate();
  const double lambda = cutoff_from_detector(sys.L0);
  const double nu = lambda / constants::hbar;
  const double c2 = constants::c * constants::c;
  const double l0 = constants::hbar * constants::c / lambda;
  const double tau_z = tidal_zz(source) / (nu * nu);
  const double theta = state.kind == StateKind::thermal ? pi * constants::k_B * state.T_g / lambda : 0.0;
  const ScaledKernel kernel(state, theta, tau_z);

  const std::size_t n = paths.t.size();
  std::vector<double> u(n), w(n, 0.0), p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = nu * paths.t[i];
    p[i] = paths.V[i] * paths.dv[i] / c2;
    q[i] = paths.Xi[i] * paths.dxi[i] / (l0 * l0);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = 0.5 * (u[i + 1] - u[i]);
    w[i] += h;
    w[i + 1] += h;
  }

  const double a = sys.eta * pi * constants::k_B * sys.T_int / lambda;
  const double mu = sys.m / constants::planck_mass();
  const double ep = constants::planck_energy();
  const double eps = sys.eta * pi * constants::k_B * sys.T_int * lambda / (ep * ep);

  double single = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    single += w[i] * (0.5 * a * p[i] * p[i] + a * tau_z * p[i] * q[i] + 4.0 * eps * q[i] * q[i] * kernel.coincident(u[i]));
  }
  double dbl = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = w[i] * q[i];
    if (wi == 0.0) continue;
    double row = 0.5 * w[i] * q[i] * kernel(u[i], u[i]);
    for (std::size_t j = 0; j < i; ++j) row += w[j] * q[j] * kernel(u[i], u[j]);
    dbl += 2.0 * wi * row;
  }
  return single + 2.0 * mu * mu * dbl;
}

double cross_section(double theta, double M) {
  if (!(theta > 0.0) || !(theta < 2.0 * pi)) {
    throw DomainError("cross_section: theta must lie in (0, 2 pi); forward scattering diverges");
  }
  if (!(M >= 0.0)) throw DomainError("cross_section: mass must be non-negative");
  const double s4 = std::pow(std::sin(0.25 * theta), 4);
  const double scale = constants::G * M / (constants::c * constants::c);
  return scale * scale * (std::pow(std::cos(theta), 8) + std::pow(std::sin(theta), 8)) / s4;
}

}  // namespace gravdec
