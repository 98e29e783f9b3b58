#pragma once

namespace gravdec {

// Below `threshold` a Taylor table of `terms` coefficients replaces the closed form.
struct SeriesSwitch {
  double threshold;
  int terms;
};

// Ci(x) = -int_x^inf cos(t)/t dt for x > 0. Power series up to x = 2,
// continued fraction for E1(ix) above.
double cosine_integral(double x);

// F_n(x) = x^-(n+1) int_0^x y^n cos(y) dy for n in {3, 5}; even in x, F_n(0) = 1/(n+1).
double kernel_aux(int n, double x);
SeriesSwitch kernel_aux_switch(int n);

// Thermal kernel auxiliaries F_1^(th), F_2^(th) for x > 0.
double thermal_aux(int which, double x);
SeriesSwitch thermal_aux_switch(int which);
// Even extension including the x -> 0 limits 2/945 and 1/45.
double thermal_aux_even(int which, double x);

// ζ(3).
double zeta3();

// Real-valued thermal G+N Configuration-2 combination
//   x^4/9 + 4x^3/9 + 2x^2/3 - 4/3 x^2 ln(1-e^{2x}) - 4/3 x Li2(e^{2x}) + 2/3 Li3(e^{2x}) - 2/3 ζ(3)
// with every logarithm and polylogarithm on the principal branch and the real part
// taken. Rewritten through u = e^{-2x} by the inversion formulas:
//   x^4/9 - 4x^3/9 + 2x^2/3 - 4/3 x^2 ln(1-u) + 4/3 x Li2(u) + 2/3 Li3(u) - 2/3 ζ(3).
double polylog_combination_gt3(double x);
SeriesSwitch polylog_combination_gt3_switch();

// Li_n(u) for n in {2, 3} and |u| <= 1/2.
double polylog_small(int n, double u);

namespace detail {
struct SeriesTable;
// x^p * sum_k c_k x^k by Horner.
double eval_series(const SeriesTable& table, double x);
}  // namespace detail

}  // namespace gravdec
