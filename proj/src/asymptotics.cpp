#include "gravdec/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <variant>

#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"

namespace gravdec {

namespace {

double log_cosh(double y) { return std::abs(y) + std::log1p(std::exp(-2.0 * std::abs(y))) - std::log(2.0); }

double thermal_ratio6(const SystemParams& sys, double T_g) {
  const double th = pi * constants::k_B * T_g / cutoff_from_detector(sys.L0);
  return std::pow(th, 6);
}

// Brent's method for f(a) f(b) < 0.
template <class F>
double brent(F f, double a, double b, double fa, double fb, double ftol, int max_iter) {
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 1e-15;
    const double m = 0.5 * (c - b);
    if (std::abs(fb) <= ftol || std::abs(m) <= tol) return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

}  // namespace

std::string_view to_string(TimeRegime regime) {
  switch (regime) {
    case TimeRegime::short_time_formula:
      return "short_time_formula";
    case TimeRegime::long_time_formula:
      return "long_time_formula";
    case TimeRegime::numeric_root:
      return "numeric_root";
  }
  return "unknown";
}

double LogTime::seconds() const {
  if (log_seconds > std::log(std::numeric_limits<double>::max())) return std::numeric_limits<double>::infinity();
  return std::exp(log_seconds);
}

double LogTime::log10_seconds() const { return log_seconds / std::log(10.0); }

double delta_omega(const SystemParams& sys, const NewtonianSource& source) {
  const double h = 1.0 / cutoff_frequency(sys.L0);
  return 1.0 - 6.0 * h * h * source.curvature_frequency_squared();
}

double delta_omega_thermal(const SystemParams& sys, const NewtonianSource& source, double T_g) {
  if (!(T_g > 0.0)) throw DomainError("delta_omega_thermal: requires T_g > 0");
  const double h = 1.0 / cutoff_frequency(sys.L0);
  const double ht = constants::hbar / (pi * constants::k_B * T_g);
  return 1.0 + 6.0 * (h * h - 0.35 * ht * ht) * source.curvature_frequency_squared();
}

double log_short_time_state_factor(const GravitonState& state, const SystemParams& sys,
                                   const NewtonianSource& source) {
  state.validate();
  switch (state.kind) {
    case StateKind::vacuum:
      return 0.0;
    case StateKind::thermal:
      return -0.25 * std::log1p(32.0 / 21.0 * delta_omega_thermal(sys, source, state.T_g) * thermal_ratio6(sys, state.T_g));
    case StateKind::coherent:
      return -0.25 * std::log1p(state.alpha * state.alpha);
    case StateKind::squeezed:
      // Leading x^4 coefficient carries cosh 2r - sinh 2r = e^{-2r}.
      return 0.5 * state.r;
  }
  return 0.0;
}

double log_long_time_state_factor(const GravitonState& state, const SystemParams& sys,
                                  const NewtonianSource& source) {
  state.validate();
  switch (state.kind) {
    case StateKind::vacuum:
      return 0.0;
    case StateKind::thermal:
      return -std::log1p(32.0 / 21.0 * delta_omega_thermal(sys, source, state.T_g) * thermal_ratio6(sys, state.T_g)) / 3.0;
    case StateKind::coherent:
      return -std::log1p(0.5 * state.alpha * state.alpha) / 3.0;
    case StateKind::squeezed:
      return -log_cosh(2.0 * state.r) / 3.0;
  }
  return 0.0;
}

DecoherenceTime dec_time_short(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source) {
  sys.validate();
  source.validate();
  const double d_omega = delta_omega(sys, source);
  if (!(d_omega > 0.0)) throw DomainError("dec_time_short: delta_omega <= 0, no short-time decoherence");
  const double t_cut = 1.0 / cutoff_frequency(sys.L0);
  const double geometry = std::sqrt(sys.L0 / sys.Xi);
  const double vac = t_cut * std::sqrt(std::sqrt(90.0 * pi / d_omega) * (constants::c / sys.v) *
                                       (constants::planck_mass() / sys.m)) *
                     geometry;
  DecoherenceTime out;
  out.regime = TimeRegime::short_time_formula;
  const double log_factor = log_short_time_state_factor(state, sys, source);
  out.state_factor = std::exp(log_factor);
  out.seconds = vac * out.state_factor;
  out.valid = out.seconds < 0.1 * t_cut;
  return out;
}

DecoherenceTime dec_time_long(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source) {
  sys.validate();
  source.validate();
  if (!(sys.eta > 0.0)) throw DomainError("dec_time_long: eta = 0 leaves no long-time channel");
  const double d_omega = delta_omega(sys, source);
  if (!(d_omega > 0.0)) throw DomainError("dec_time_long: delta_omega <= 0");
  const double cv = constants::c / sys.v;
  const double l4 = std::pow(sys.L0, 4);
  const double arg = 135.0 / 4.0 / d_omega * cv * cv * constants::c * l4 /
                     (constants::G * constants::k_B * sys.eta * sys.T_int);
  const double geometry = std::pow(sys.L0 / sys.Xi, 2.0 / 3.0);
  const double log_factor = log_long_time_state_factor(state, sys, source);
  DecoherenceTime out;
  out.regime = TimeRegime::long_time_formula;
  out.state_factor = std::exp(log_factor);
  out.seconds = std::exp(std::log(arg) / 3.0 + log_factor) * geometry;
  const double t_state = constants::hbar / state_energy_scale(sys, state);
  out.valid = out.seconds > 10.0 * t_state;
  return out;
}

DecoherenceTime dec_time_numeric(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source,
                                 const Configuration& config) {
  sys.validate();
  source.validate();
  state.validate();
  auto excess = [&](double log_t) { return gamma(state, sys, source, config, std::exp(log_t)) - 1.0; };

  DecoherenceTime out;
  out.regime = TimeRegime::numeric_root;
  const double t_cut = 1.0 / cutoff_frequency(sys.L0);
  double lo = std::log(1e-3 * t_cut);
  double f_lo = excess(lo);
  if (f_lo >= 0.0) {
    // Already decohered at the first sample; walk down.
    for (int k = 0; k < 200 && f_lo >= 0.0; ++k) {
      lo -= std::log(10.0);
      f_lo = excess(lo);
    }
    if (f_lo >= 0.0) throw DomainError("dec_time_numeric: Gamma >= 1 at every sampled time");
  }
  double hi = lo;
  double f_hi = f_lo;
  const double step = std::log(10.0);
  const double log_t_max = std::log(1e60 * t_cut);
  // Without the internal bath Configuration 1 saturates or turns over for x >> 1.
  const bool bounded = sys.eta == 0.0 && std::holds_alternative<Config1>(config);
  const double log_plateau_start = std::log(1e4 * t_cut);
  while (f_hi < 0.0) {
    const double next = hi + step;
    const double f_next = excess(next);
    if (bounded && f_next < 0.0 && next > log_plateau_start && f_next + 1.0 <= (f_hi + 1.0) * (1.0 + 1e-3)) {
      out.seconds = std::numeric_limits<double>::infinity();
      out.decoheres = false;
      out.valid = true;
      return out;
    }
    lo = hi;
    f_lo = f_hi;
    hi = next;
    f_hi = f_next;
    if (hi > log_t_max && f_hi < 0.0) {
      out.seconds = std::numeric_limits<double>::infinity();
      out.decoheres = false;
      out.valid = false;
      return out;
    }
  }
  const double root = brent(excess, lo, hi, f_lo, f_hi, 1e-11, 200);
  out.seconds = std::exp(root);
  out.valid = std::abs(excess(root)) <= 1e-8;
  return out;
}

double momentum_threshold(const SystemParams& sys, const NewtonianSource& source) {
  const double d_omega = delta_omega(sys, source);
  if (!(d_omega > 0.0)) throw DomainError("momentum_threshold: delta_omega <= 0");
  return std::sqrt(90.0 * pi / d_omega) * constants::planck_mass() * constants::c;
}

double mass_threshold(const SystemParams& sys, const NewtonianSource& source) {
  return momentum_threshold(sys, source) / constants::c;
}

double saturation_value(const SystemParams& sys, const NewtonianSource& source) {
  sys.validate();
  const double beta = sys.v / constants::c;
  const double mu = sys.m / constants::planck_mass();
  const double xi = sys.Xi / sys.L0;
  return 16.0 / (5.0 * pi) * delta_omega(sys, source) * beta * beta * mu * mu * xi * xi;
}

double recoherence_exponent_argument(const SystemParams& sys, const NewtonianSource& source) {
  const double w2 = source.curvature_frequency_squared();
  if (!(w2 > 0.0)) throw DomainError("recoherence needs a Newtonian source (M > 0)");
  const double nu = cutoff_frequency(sys.L0);
  return nu * nu / w2;
}

LogTime recoherence_threshold(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source) {
  if (sys.eta != 0.0) throw DomainError("recoherence threshold is defined for eta = 0 only");
  const double w2 = source.curvature_frequency_squared();
  if (!(w2 > 0.0)) throw DomainError("recoherence needs a Newtonian source (M > 0)");
  const double nu = cutoff_frequency(sys.L0);
  switch (state.kind) {
    case StateKind::vacuum:
      return {-std::log(nu) + recoherence_exponent_argument(sys, source) / 8.0};
    case StateKind::thermal: {
      state.validate();
      const double nu_t = pi * constants::k_B * state.T_g / constants::hbar;
      const double ratio = nu / nu_t;
      return {std::log(nu_t / (4.0 * w2)) + std::log1p(ratio * ratio)};
    }
    default:
      throw DomainError("recoherence threshold is available for vacuum and thermal states");
  }
}

double vacuum_recoherence_asymptote(const SystemParams& sys, const NewtonianSource& source, double log_t) {
  const double nu = cutoff_frequency(sys.L0);
  const double rho = source.curvature_frequency_squared() / (nu * nu);
  const double beta = sys.v / constants::c;
  const double mu = sys.m / constants::planck_mass();
  const double xi = sys.Xi / sys.L0;
  return 16.0 / (5.0 * pi) * beta * beta * mu * mu * xi * xi * (1.0 - 8.0 * rho * (log_t + std::log(nu)));
}

double short_time_lower_bound(const SystemParams& sys) {
  return 8.0 / 3.0 * sys.eta * internal_length(sys.m, sys.T_int) / constants::c;
}

}  // namespace gravdec

namespace gravdec {

namespace {

struct TableRow {
  StateKind kind;
  Piece piece;
  double coeff;
  int power;
  double (*large)(double);
  bool polynomial;
  double slack = 150.0;  // coefficient of the allowed 1/x deviation
};

double one(double) { return 1.0; }
double seven_halves(double) { return 3.5; }
double one_half(double) { return 0.5; }
double cube108(double x) { return x * x * x / 108.0; }
double cube18(double x) { return x * x * x / 18.0; }
double t2(double x) { return 4.0 * x * x * x / 189.0; }
double t4(double x) { return 2.0 * x * x * x / 45.0; }
double v3(double x) { return 8.0 * euler_gamma - 32.0 / 3.0 * std::log(2.0) + 8.0 * std::log(x); }
double t3(double x) { return 4.0 * std::log(2.0) + 4.0 * x - 12.0 * std::log(x); }
double c2(double x) { return x * x * x / 36.0 + std::sin(x); }
double c3(double x) {
  return 28.0 * euler_gamma + 16.0 * std::log(3.0) - 68.0 * std::log(2.0) + 28.0 * std::log(x);
}
double c4(double x) { return x * x * x / 6.0 + 4.0 * std::sin(x); }
double s2(double x) { return std::sin(x); }
double s3(double x) { return 4.0 * euler_gamma + 4.0 * std::log(81.0 / 512.0) + 4.0 * std::log(x); }
double s4(double x) { return 4.0 * std::sin(x); }

const TableRow kRows[] = {
    {StateKind::vacuum, Piece::I, 1.0 / 288.0, 4, one, false, 10.0},
    {StateKind::vacuum, Piece::II, 1.0 / 108.0, 3, cube108, true},
    {StateKind::vacuum, Piece::III, 1.0 / 48.0, 4, v3, false, 50.0},
    {StateKind::vacuum, Piece::IV, 1.0 / 18.0, 3, cube18, true},
    {StateKind::thermal, Piece::I, 1.0 / 126.0, 4, one, false},
    {StateKind::thermal, Piece::II, 4.0 / 189.0, 3, t2, true},
    {StateKind::thermal, Piece::III, 1.0 / 60.0, 4, t3, false},
    {StateKind::thermal, Piece::IV, 2.0 / 45.0, 3, t4, true},
    {StateKind::coherent, Piece::I, 1.0 / 48.0, 4, seven_halves, false},
    {StateKind::coherent, Piece::II, 1.0 / 18.0, 3, c2, false},
    {StateKind::coherent, Piece::III, 1.0 / 8.0, 4, c3, false},
    {StateKind::coherent, Piece::IV, 1.0 / 3.0, 3, c4, false},
    {StateKind::squeezed, Piece::I, 1.0 / 96.0, 4, one_half, false},
    {StateKind::squeezed, Piece::II, 1.0 / 36.0, 3, s2, false},
    {StateKind::squeezed, Piece::III, 1.0 / 16.0, 4, s3, false},
    {StateKind::squeezed, Piece::IV, 1.0 / 6.0, 3, s4, false},
};

}  // namespace

std::vector<AsymptoticCheck> check_profile_asymptotics(double small_x, double large_x) {
  std::vector<AsymptoticCheck> out;
  for (const TableRow& row : kRows) {
    AsymptoticCheck c;
    c.kind = row.kind;
    c.piece = row.piece;
    c.small_x = small_x;
    c.small_ratio = f_function(row.kind, row.piece, small_x) / (row.coeff * std::pow(small_x, row.power));
    c.small_ok = std::abs(c.small_ratio - 1.0) <= 0.01;
    c.large_x = large_x;
    c.large_value = f_function(row.kind, row.piece, large_x);
    c.large_expected = row.large(large_x);
    // Coherent and squeezed rows carry oscillating 1/x tails with amplitude near 110.
    c.large_slack = row.polynomial ? 1e-12 * std::abs(c.large_expected) : row.slack / large_x;
    c.large_ok = std::abs(c.large_value - c.large_expected) <= c.large_slack;
    out.push_back(c);
  }
  return out;
}

}  // namespace gravdec
