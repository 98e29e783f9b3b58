#include "gravdec/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "gravdec/constants.hpp"
#include "gravdec/detail/series_tables.hpp"
#include "gravdec/errors.hpp"

namespace gravdec {

namespace detail {

double eval_series(const SeriesTable& table, double x) {
  double acc = 0.0;
  for (auto it = table.coefficients.rbegin(); it != table.coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc * std::pow(x, table.leading_power);
}

}  // namespace detail

namespace {

constexpr double kCiSeriesLimit = 2.0;
constexpr double kKernelAuxSwitch = 1.0;
constexpr double kThermalAuxSwitch = 1.0;
constexpr double kGt3Switch = 1.0;

double ci_series(double x) {
  // gamma + ln x + sum_k (-1)^k x^2k / (2k (2k)!)
  const double x2 = x * x;
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 100; ++k) {
    term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    const double contribution = term / (2.0 * k);
    sum += contribution;
    if (std::abs(contribution) < 1e-18 * std::abs(sum)) {
      break;
    }
  }
  return euler_gamma + std::log(x) + sum;
}

double ci_continued_fraction(double x) {
  // Modified Lentz evaluation of E1(ix) e^{ix}; Ci(x) = -Re E1(ix).
  using cplx = std::complex<double>;
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  cplx b(1.0, x);
  cplx c(1.0 / tiny, 0.0);
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps) {
      break;
    }
  }
  h *= cplx(std::cos(x), -std::sin(x));
  return -h.real();
}

const detail::SeriesTable& kernel_aux_table(int n) {
  if (n == 3) return detail::F3_series;
  if (n == 5) return detail::F5_series;
  throw DomainError("kernel_aux: n must be 3 or 5, got " + std::to_string(n));
}

double kernel_aux_closed(int n, double x) {
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double x2 = x * x;
  if (n == 5) {
    return ((5.0 * x2 * x2 - 60.0 * x2 + 120.0) * c + x * (x2 * x2 - 20.0 * x2 + 120.0) * s - 120.0) /
           (x2 * x2 * x2);
  }
  return ((3.0 * x2 - 6.0) * c + (x2 * x - 6.0 * x) * s + 6.0) / (x2 * x2);
}

const detail::SeriesTable& thermal_table(int which) {
  if (which == 1) return detail::Fth1_series;
  if (which == 2) return detail::Fth2_series;
  throw DomainError("thermal_aux: which must be 1 or 2, got " + std::to_string(which));
}

double thermal_closed(int which, double x) {
  // cosh = (1+u^2)/(2u), sinh = (1-u^2)/(2u) with u = e^{-x}; no overflow for large x.
  const double u = std::exp(-x);
  const double u2 = u * u;
  const double cp = 1.0 + u2;
  const double sm = -std::expm1(-2.0 * x);
  if (which == 1) {
    const double sm6 = std::pow(sm, 6);
    const double hyperbolic = (8.0 * u2 * std::pow(cp, 4) + 176.0 * u2 * u2 * cp * cp + 128.0 * u2 * u2 * u2) /
                              (15.0 * sm6);
    return 1.0 / std::pow(x, 6) - hyperbolic;
  }
  const double sm4 = std::pow(sm, 4);
  return (8.0 * u2 * cp * cp + 16.0 * u2 * u2) / (3.0 * sm4) - 1.0 / std::pow(x, 4);
}

}  // namespace

double cosine_integral(double x) {
  if (!(x > 0.0)) {
    throw DomainError("cosine_integral: requires x > 0");
  }
  if (std::isinf(x)) return 0.0;
  return x <= kCiSeriesLimit ? ci_series(x) : ci_continued_fraction(x);
}

double kernel_aux(int n, double x) {
  const auto& table = kernel_aux_table(n);
  const double ax = std::abs(x);
  if (ax < kKernelAuxSwitch) {
    return detail::eval_series(table, ax);
  }
  return kernel_aux_closed(n, ax);
}

SeriesSwitch kernel_aux_switch(int n) {
  return {kKernelAuxSwitch, static_cast<int>(kernel_aux_table(n).coefficients.size())};
}

double thermal_aux_even(int which, double x) {
  const auto& table = thermal_table(which);
  const double ax = std::abs(x);
  if (ax < kThermalAuxSwitch) {
    return detail::eval_series(table, ax);
  }
  return thermal_closed(which, ax);
}

double thermal_aux(int which, double x) {
  if (!(x > 0.0)) {
    throw DomainError("thermal_aux: requires x > 0");
  }
  return thermal_aux_even(which, x);
}

SeriesSwitch thermal_aux_switch(int which) {
  return {kThermalAuxSwitch, static_cast<int>(thermal_table(which).coefficients.size())};
}

double zeta3() { return 1.2020569031595942853997381615114; }

double polylog_small(int n, double u) {
  if (n != 2 && n != 3) {
    throw DomainError("polylog_small: order must be 2 or 3");
  }
  if (!(std::abs(u) <= 0.5)) {
    throw DomainError("polylog_small: requires |u| <= 1/2");
  }
  double power = u;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double kk = static_cast<double>(k);
    const double term = power / (n == 2 ? kk * kk : kk * kk * kk);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    power *= u;
  }
  return sum;
}

double polylog_combination_gt3(double x) {
  if (!(x > 0.0)) {
    throw DomainError("polylog_combination_gt3: requires x > 0");
  }
  if (x < kGt3Switch) {
    return detail::eval_series(detail::g_t_III_series, x);
  }
  const double u = std::exp(-2.0 * x);
  const double x2 = x * x;
  return x2 * x2 / 9.0 - 4.0 / 9.0 * x2 * x + 2.0 / 3.0 * x2 - 4.0 / 3.0 * x2 * std::log1p(-u) +
         4.0 / 3.0 * x * polylog_small(2, u) + 2.0 / 3.0 * polylog_small(3, u) - 2.0 / 3.0 * zeta3();
}

SeriesSwitch polylog_combination_gt3_switch() {
  return {kGt3Switch, static_cast<int>(detail::g_t_III_series.coefficients.size())};
}

}  // namespace gravdec
