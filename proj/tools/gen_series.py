#!/usr/bin/env python3
"""Generate small-argument Taylor tables for the closed forms in gravdec.

Every closed form below is expanded exactly (rational arithmetic) around
x = 0 and written to include/gravdec/detail/series_tables.hpp. The cosine
integral is replaced by its convergent power series, so the logarithms in
the G+N families cancel symbolically.

Usage: python3 tools/gen_series.py > include/gravdec/detail/series_tables.hpp
"""
import sys

import sympy as sp

x = sp.symbols("x", positive=True)
gE = sp.EulerGamma
ORDER = 44  # highest power of x kept (absolute, after the leading power)


def ci(z, terms=ORDER // 2 + 4):
    s = gE + sp.log(z)
    for k in range(1, terms):
        s += (-1) ** k * z ** (2 * k) / (2 * k * sp.factorial(2 * k))
    return s


R = sp.Rational
E = sp.exp
sin, cos, ln = sp.sin, sp.cos, sp.log

FUNCS = {}
# kernel auxiliaries
FUNCS["F5"] = ((5 * x**4 - 60 * x**2 + 120) * cos(x) + x * (x**4 - 20 * x**2 + 120) * sin(x) - 120) / x**6
FUNCS["F3"] = ((3 * x**2 - 6) * cos(x) + (x**3 - 6 * x) * sin(x) + 6) / x**4
FUNCS["Fth1"] = 1 / x**6 - (2 * sp.cosh(x) ** 4 + 11 * sp.cosh(x) ** 2 + 2) / (15 * sp.sinh(x) ** 6)
FUNCS["Fth2"] = (2 * sp.cosh(x) ** 2 + 1) / (3 * sp.sinh(x) ** 4) - 1 / x**4

# configuration 1
FUNCS["f_v_I"] = 1 + R(2, 3) / x * (sin(x) - 8 * sin(x / 2)) + (R(2, 3) * cos(x) - R(32, 3) * cos(x / 2) + 10) / x**2
FUNCS["f_v_III"] = 8 * gE - R(4, 3) * ln(4) - R(32, 3) * ci(x / 2) + R(8, 3) * ci(x) + 8 * ln(x / 2)
FUNCS["f_t_I"] = (1 + 16 * E(x) + 26 * E(2 * x) + 16 * E(3 * x) + E(4 * x)) / (E(2 * x) - 1) ** 2 - 15 / x**2
FUNCS["f_t_III"] = 4 * (ln(2) + 3 * ln((E(x) - 1) / x) - ln(E(x) + 1)) - 4 * x
FUNCS["f_c_I"] = (R(7, 2) + (3 * sin(2 * x) - 16 * (9 * sin(x / 2) - 3 * sin(x) + sin(3 * x / 2))) / (6 * x)
                  + (1495 - 1728 * cos(x / 2) + 288 * cos(x) - 64 * cos(3 * x / 2) + 9 * cos(2 * x)) / (36 * x**2))
_cs2 = (49 + 24 * (x**2 - 2) * cos(x) + (2 * x**2 - 1) * cos(2 * x) - 4 * x * (12 - 2 * x**2 + cos(x)) * sin(x)) / (8 * x**3)
FUNCS["f_c_II"] = x**3 / 36 + _cs2
FUNCS["f_c_III"] = (28 * gE + 4 * (ln(81) + 7 * ln(x) - 17 * ln(2)) - 48 * ci(x / 2) + 32 * ci(x)
                    - 16 * ci(3 * x / 2) + 4 * ci(2 * x))
FUNCS["f_c_IV"] = x**3 / 6 + 4 * sin(x) + 2 / x * (2 * cos(x) + cos(x) ** 2 - 3)
FUNCS["f_s_I"] = (R(1, 2) + (sin(2 * x) + 12 * sin(x) - 16 * sin(x / 2) - R(16, 3) * sin(3 * x / 2)) / (2 * x)
                  + (415 - 576 * cos(x / 2) + 216 * cos(x) - 64 * cos(3 * x / 2) + 9 * cos(2 * x)) / (36 * x**2))
FUNCS["f_s_II"] = _cs2
FUNCS["f_s_III"] = (4 * gE + 4 * (ln(81) + ln(x) - 9 * ln(2)) - 16 * ci(x / 2) + 24 * ci(x)
                    - 16 * ci(3 * x / 2) + 4 * ci(2 * x))
FUNCS["f_s_IV"] = 4 * sin(x) + 2 / x * (2 * cos(x) + cos(x) ** 2 - 3)

# configuration 2
FUNCS["g_v_I"] = x**4 / 4 + 8 * gE - 12 - 8 * ci(x) + 8 * ln(x) + 4 * x * sin(x) + 12 * cos(x)
FUNCS["g_v_III"] = 2 * x**4 - 8 * x**2 + 16 * cos(x) + 16 * x * sin(x) - 16
FUNCS["g_t_I"] = (1 - 2 * x / 3 + x**4 / 90 + R(2, 3) * ln((E(2 * x) - 1) / (2 * x))
                  - x / 3 * ((sp.sinh(2 * x) + x) / sp.sinh(x) ** 2))
FUNCS["g_c_I"] = (x**4 / 8 + 2 * gE - R(59, 16) + (59 - 22 * x**2) * cos(2 * x) / 16 - 2 * ci(2 * x)
                  - 2 * (ln(x) - ln(2)) + 4 * ln(x) + x / 8 * (27 - 2 * x**2) * sin(2 * x))
FUNCS["g_c_II"] = x**5 / 30 + (15 + (-15 + 18 * x**2 - 2 * x**4) * cos(2 * x)) / (8 * x) + (x**2 - 3) * sin(2 * x)
FUNCS["g_c_III"] = x**4 - R(7, 2) * x**2 - 4 + (4 - R(9, 2) * x**2) * cos(2 * x) - x * (x**2 - 8) * sin(2 * x)
FUNCS["g_c_IV"] = R(3, 2) * x + x**5 / 5 + x * (R(9, 2) - x**2) * cos(2 * x) + 3 * (x**2 - 1) * sin(2 * x)
FUNCS["g_s_I"] = (R(37, 8) - 4 * gE - 12 * cos(x) + (59 - 22 * x**2) * cos(2 * x) / 8 + 8 * ci(x) - 4 * ci(2 * x)
                  - 4 * (ln(x) - ln(2)) - x / 2 * (8 + (2 * x**2 - 27) * cos(x)) * sin(x))
FUNCS["g_s_II"] = (15 + (-15 + 18 * x**2 - 2 * x**4) * cos(2 * x)) / (4 * x) + 2 * (x**2 - 3) * sin(2 * x)
FUNCS["g_s_III"] = x**2 + 8 - 16 * cos(x) + (8 - 9 * x**2) * cos(2 * x) - 4 * x * (4 + (x**2 - 8) * cos(x)) * sin(x)
FUNCS["g_s_IV"] = 3 * x + x * (9 - 2 * x**2) * cos(2 * x) + 6 * (x**2 - 1) * sin(2 * x)


def g_t_III_taylor(order):
    # The real-valued combination has derivative (4/9)x^3 + (4/3)x - (4/3)x^2 coth(x),
    # which is analytic at 0; integrate its series term by term.
    d = R(4, 9) * x**3 + R(4, 3) * x - R(4, 3) * x**2 * sp.cosh(x) / sp.sinh(x)
    ds = sp.expand(sp.series(d, x, 0, order).removeO())
    return taylor(sp.integrate(ds, x), order)


def taylor(expr, order):
    s = sp.series(expr, x, 0, order + 1).removeO()
    s = sp.expand(s)
    poly = sp.Poly(s, x)
    coeffs = {m[0]: c for m, c in zip(poly.monoms(), poly.coeffs())}
    return coeffs


def emit(name, coeffs, out):
    powers = sorted(p for p, c in coeffs.items() if c != 0)
    lead = powers[0]
    top = powers[-1]
    vals = []
    for p in range(lead, top + 1):
        c = sp.nsimplify(coeffs.get(p, 0))
        vals.append(sp.N(c, 21))
    out.write(f"// {name}(x) = x^{lead} * sum_k c_k x^k\n")
    out.write(f"inline constexpr double {name}_coefficients[] = {{\n")
    for v in vals:
        out.write(f"    {sp.sstr(v, full_prec=False) if v != 0 else '0.0'},\n")
    out.write("};\n")
    out.write(f"inline constexpr SeriesTable {name}_series{{{lead}, {name}_coefficients}};\n\n")


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_series.py. Do not edit.\n")
    out.write("#pragma once\n\n#include <span>\n\n")
    out.write("namespace gravdec::detail {\n\n")
    out.write("struct SeriesTable {\n  int leading_power;\n  std::span<const double> coefficients;\n};\n\n")
    for name, expr in FUNCS.items():
        sys.stderr.write(f"expanding {name}\n")
        coeffs = taylor(expr, ORDER)
        emit(name, coeffs, out)
    sys.stderr.write("expanding g_t_III\n")
    emit("g_t_III", g_t_III_taylor(ORDER), out)
    out.write("}  // namespace gravdec::detail\n")


if __name__ == "__main__":
    main()
