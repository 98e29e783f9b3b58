#include "gravdec/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/special_functions.hpp"

namespace gravdec {

namespace {

// Kronrod 15-point nodes on [-1, 1] (non-negative half) and weights; the
// embedded Gauss 7-point rule uses the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    resk += kWgk[j] * sum;
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  return {resk * half, std::abs((resk - resg) * half)};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           const QuadratureSpec& spec, QuadratureResult& out, bool& converged) {
  const Panel p = gk15(f, a, b);
  out.evaluations += 15;
  if (p.error <= tol || depth >= spec.max_depth) {
    if (p.error > tol) converged = false;
    out.value += p.kronrod;
    out.error += p.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.5 * tol, depth + 1, spec, out, converged);
  adapt(f, mid, b, 0.5 * tol, depth + 1, spec, out, converged);
}

// Simpson weights on n (even) intervals of width h.
std::vector<double> simpson_weights(int n, double h) {
  std::vector<double> w(n + 1);
  for (int i = 0; i <= n; ++i) {
    w[i] = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    w[i] *= h / 3.0;
  }
  return w;
}

// Sum_{i,j} a_i a_j [S((i-j) h) + P((i+j) h)] for S even.
double kernel_double_sum(const std::vector<double>& a, double h, const std::function<double(double)>& S,
                         const std::function<double(double)>* P) {
  const int n = static_cast<int>(a.size());
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    double corr = 0.0;
    for (int i = 0; i + k < n; ++i) corr += a[i] * a[i + k];
    total += (k == 0 ? 1.0 : 2.0) * corr * S(k * h);
  }
  if (P != nullptr) {
    for (int m = 0; m <= 2 * (n - 1); ++m) {
      const int lo = std::max(0, m - (n - 1));
      const int hi = std::min(m, n - 1);
      double conv = 0.0;
      for (int i = lo; i <= hi; ++i) conv += a[i] * a[m - i];
      total += conv * (*P)(m * h);
    }
  }
  return total;
}

// Repeats `estimate(n)` on doubled grids until the Richardson correction meets tol.
QuadratureResult richardson(const std::function<double(int)>& estimate, int n0, const QuadratureSpec& spec,
                            const char* what) {
  int n = n0;
  double coarse = estimate(n);
  double best = coarse;
  double err = std::abs(coarse);
  while (2 * n <= spec.max_grid_intervals) {
    const double fine = estimate(2 * n);
    best = (16.0 * fine - coarse) / 15.0;
    err = std::abs(fine - coarse) / 15.0;
    n *= 2;
    if (err <= spec.abs_tol || err <= spec.grid_rel_tol * std::abs(best)) {
      return {best, err, n};
    }
    coarse = fine;
  }
  throw ConvergenceError(std::string(what) + ": grid refinement did not converge", best, err);
}

int initial_intervals(double span, int segments, const QuadratureSpec& spec) {
  // Kernel oscillations have period 2 pi in u.
  const int per_unit = static_cast<int>(std::ceil(span * spec.points_per_unit));
  int n = std::max(spec.grid_intervals, per_unit);
  const int step = 4 * std::max(1, segments);
  n = ((n + step - 1) / step) * step;
  return std::min(n, std::max(step, spec.max_grid_intervals / 2));
}

struct PiecePair {
  std::function<double(double)> stationary;
  std::function<double(double)> nonstationary;
  bool has_nonstationary = false;
};

// Kernel pieces with unit state parameter at Lambda_A = 1: n = 5 for the
// cutoff^2 pieces (I, II), n = 3 for the tidal pieces (III, IV).
PiecePair unit_pieces(StateKind kind, int n) {
  const double c = n == 5 ? 2.0 / (15.0 * pi) : -4.0 / (15.0 * pi);
  PiecePair out;
  switch (kind) {
    case StateKind::vacuum:
      out.stationary = [c, n](double d) { return c * kernel_aux(n, d); };
      break;
    case StateKind::thermal:
      if (n == 5) {
        out.stationary = [](double d) { return 16.0 / pi * thermal_aux_even(1, d); };
      } else {
        out.stationary = [](double d) { return -8.0 / (5.0 * pi) * thermal_aux_even(2, d); };
      }
      break;
    case StateKind::coherent:
      out.stationary = [c, n](double d) { return 0.5 * c * kernel_aux(n, d); };
      out.nonstationary = [c, n](double s) { return 0.5 * c * kernel_aux(n, s); };
      out.has_nonstationary = true;
      break;
    case StateKind::squeezed:
      out.stationary = [](double) { return 0.0; };
      out.nonstationary = [c, n](double s) { return -c * kernel_aux(n, s); };
      out.has_nonstationary = true;
      break;
  }
  return out;
}

double unit_K1(StateKind kind) {
  switch (kind) {
    case StateKind::vacuum: return 2.0;
    case StateKind::thermal: return 4.0 / 3.0;
    case StateKind::coherent: return 1.0 / 3.0;
    case StateKind::squeezed: return -2.0 / 3.0;
  }
  return 1.0;
}

double unit_K2(StateKind kind) {
  switch (kind) {
    case StateKind::vacuum: return 1.0;
    case StateKind::thermal: return 12.0;
    case StateKind::coherent: return 1.0;
    case StateKind::squeezed: return -1.0;
  }
  return 1.0;
}

// Double or coincident integral of `weight` against the kernel pieces on [0, x].
double profile_integral(StateKind kind, Piece piece, double x, const std::function<double(double)>& weight,
                        int segments, const QuadratureSpec& spec) {
  const int n = (piece == Piece::I || piece == Piece::II) ? 5 : 3;
  const PiecePair pieces = unit_pieces(kind, n);
  const bool doubled = (piece == Piece::I || piece == Piece::III);
  auto estimate = [&](int intervals) {
    const double h = x / intervals;
    const std::vector<double> w = simpson_weights(intervals, h);
    if (doubled) {
      std::vector<double> a(intervals + 1);
      for (int i = 0; i <= intervals; ++i) a[i] = w[i] * weight(i * h);
      return kernel_double_sum(a, h, pieces.stationary, pieces.has_nonstationary ? &pieces.nonstationary : nullptr);
    }
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
      const double s = i * h;
      const double q = weight(s);
      double k = pieces.stationary(0.0);
      if (pieces.has_nonstationary) k += pieces.nonstationary(2.0 * s);
      sum += w[i] * q * q * k;
    }
    return sum;
  };
  return richardson(estimate, initial_intervals(x, segments, spec), spec, "profile quadrature").value;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(grid_rel_tol > 0.0)) throw InputError("quadrature", "tolerances must be positive");
  if (max_depth < 1) throw InputError("quadrature.max_depth", "must be at least 1");
  if (points_per_unit < 1) throw InputError("quadrature.points_per_unit", "must be at least 1");
  if (grid_intervals < 4 || max_grid_intervals < grid_intervals) {
    throw InputError("quadrature.grid_intervals", "need 4 <= grid_intervals <= max_grid_intervals");
  }
}

QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec) {
  spec.validate();
  QuadratureResult out;
  if (a == b) return out;
  // Tolerance from a first coarse pass.
  const Panel first = gk15(f, a, b);
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(first.kronrod));
  bool converged = true;
  adapt(f, a, b, tol, 0, spec, out, converged);
  if (!converged) throw ConvergenceError("adaptive quadrature: tolerance not met", out.value, out.error);
  return out;
}

QuadratureResult integrate_oscillatory(const std::function<double(double)>& f, double a, double b, double period,
                                       const QuadratureSpec& spec) {
  if (spec.oscillation_handling == OscillationHandling::plain || !(period > 0.0) || (b - a) <= period) {
    return integrate_gk15(f, a, b, spec);
  }
  const int pieces = static_cast<int>(std::ceil((b - a) / period));
  QuadratureResult total;
  for (int k = 0; k < pieces; ++k) {
    const double lo = a + (b - a) * k / pieces;
    const double hi = a + (b - a) * (k + 1) / pieces;
    const QuadratureResult r = integrate_gk15(f, lo, hi, spec);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
  }
  return total;
}

double kernel_by_quadrature(const KernelParams& params, double t, double tp, const QuadratureSpec& spec) {
  params.validate();
  spec.validate();
  const double nu = params.cutoff;
  const double tau_z = params.T_zz / (nu * nu);
  const GravitonState& st = params.state;
  // Everything in y = omega / nu; t, t' become u = nu t.
  const double u = nu * t;
  const double up = nu * tp;
  const double delta = u - up;
  const double sigma = u + up;

  // omega^2 [d_t^2 d_t'^2 + T_zz (d_t^2 + d_t'^2)] applied to cos(y(u -+ u')) / (m_g y).
  auto mode = [tau_z](double y, double phase_arg) {
    const double y2 = y * y;
    return y2 * (y2 * y2 - 2.0 * tau_z * y2) * std::cos(phase_arg) / (graviton_mode_mass * y);
  };

  std::function<double(double)> cutoff_part;
  switch (st.kind) {
    case StateKind::vacuum:
    case StateKind::thermal:
      cutoff_part = [&](double y) { return mode(y, y * delta); };
      break;
    case StateKind::coherent: {
      const double a2 = st.alpha * st.alpha;
      // cos(y u) cos(y u') = [cos(y sigma) + cos(y delta)] / 2
      cutoff_part = [&, a2](double y) {
        return mode(y, y * delta) + 0.5 * a2 * (mode(y, y * sigma) + mode(y, y * delta));
      };
      break;
    }
    case StateKind::squeezed: {
      const double ch = std::cosh(2.0 * st.r);
      const double sh = std::sinh(2.0 * st.r);
      cutoff_part = [&, ch, sh](double y) { return ch * mode(y, y * delta) - sh * mode(y, y * sigma); };
      break;
    }
  }

  const double span = std::max(std::abs(delta), std::abs(sigma));
  const double period = span > 0.0 ? 2.0 * pi / span : 0.0;
  double value = integrate_oscillatory(cutoff_part, 0.0, 1.0, period, spec).value;

  if (st.kind == StateKind::thermal) {
    // Occupation in y: hbar omega / (k_B T_g) = y / theta_bar.
    const double temp = constants::k_B * st.T_g / (constants::hbar * nu);
    auto bose_part = [&, temp](double y) { return 2.0 / std::expm1(y / temp) * mode(y, y * delta); };
    const double period_th = std::abs(delta) > 0.0 ? 2.0 * pi / std::abs(delta) : 0.0;
    value += integrate_oscillatory(bose_part, 0.0, 50.0 * temp, period_th, spec).value;
  }
  return pi / 15.0 * value * std::pow(nu, 6);
}

QuadratureResult gamma_by_quadrature(const PathModel& paths, const GravitonState& state, const SystemParams& sys,
                                     const NewtonianSource& source, const QuadratureSpec& spec) {
  spec.validate();
  sys.validate();
  source.validate();
  state.validate();
  if (!(paths.t_final >= 0.0)) throw InputError("paths.t_final", "must be non-negative");
  if (paths.segments < 1) throw InputError("paths.segments", "must be at least 1");
  if (paths.t_final == 0.0) return {};

  const double lambda = cutoff_from_detector(sys.L0);
  const double nu = lambda / constants::hbar;
  const double c2 = constants::c * constants::c;
  const double l0 = constants::hbar * constants::c / lambda;
  const double tau_z = tidal_zz(source) / (nu * nu);
  const double theta = state.kind == StateKind::thermal ? pi * constants::k_B * state.T_g / lambda : 0.0;
  const ScaledKernel kernel(state, theta, tau_z);
  const double a = sys.eta * pi * constants::k_B * sys.T_int / lambda;
  const double mu = sys.m / constants::planck_mass();
  const double ep = constants::planck_energy();
  const double eps = sys.eta * pi * constants::k_B * sys.T_int * lambda / (ep * ep);
  const double uf = nu * paths.t_final;

  const std::function<double(double)> S = [&](double d) { return kernel.stationary(d); };
  const std::function<double(double)> P = [&](double s) { return kernel.nonstationary(s); };

  auto estimate = [&](int n) {
    const double h = uf / n;
    const std::vector<double> w = simpson_weights(n, h);
    std::vector<double> q(n + 1), aq(n + 1);
    double single = 0.0;
    bool any = false;
    for (int i = 0; i <= n; ++i) {
      const double t = (i * h) / nu;
      const double p = paths.V(t) * paths.dv(t) / c2;
      q[i] = paths.Xi(t) * paths.dxi(t) / (l0 * l0);
      aq[i] = w[i] * q[i];
      any = any || q[i] != 0.0;
      single += w[i] * (0.5 * a * p * p + a * tau_z * p * q[i] + 4.0 * eps * q[i] * q[i] * kernel.coincident(i * h));
    }
    if (!any) return single;
    const double dbl = kernel_double_sum(aq, h, S, kernel.has_nonstationary() ? &P : nullptr);
    return single + 2.0 * mu * mu * dbl;
  };
  return richardson(estimate, initial_intervals(uf, paths.segments, spec), spec, "gamma quadrature");
}

double f_by_quadrature(StateKind kind, Piece piece, double x, const QuadratureSpec& spec) {
  if (!(x > 0.0)) throw DomainError("f_by_quadrature: requires x > 0");
  spec.validate();
  auto w = [x](double s) { return std::min(s, x - s); };
  const double integral = profile_integral(kind, piece, x, w, 2, spec);
  const double k = unit_K1(kind);
  switch (piece) {
    case Piece::I: return 5.0 * pi * integral / k;
    case Piece::II: return 10.0 * pi * integral / k;
    case Piece::III: return -10.0 * pi * integral / k;
    case Piece::IV: return -20.0 * pi * integral / k;
  }
  return 0.0;
}

double g_by_quadrature(StateKind kind, Piece piece, double x, const QuadratureSpec& spec) {
  if (!(x > 0.0)) throw DomainError("g_by_quadrature: requires x > 0");
  spec.validate();
  auto w = [](double s) { return s * s; };
  const double integral = profile_integral(kind, piece, x, w, 1, spec);
  const double k = unit_K2(kind);
  switch (piece) {
    case Piece::I: return 7.5 * pi * integral / k;
    case Piece::II: return 15.0 * pi * integral / k;
    case Piece::III: return -15.0 * pi * integral / k;
    case Piece::IV: return -30.0 * pi * integral / k;
  }
  return 0.0;
}

}  // namespace gravdec
