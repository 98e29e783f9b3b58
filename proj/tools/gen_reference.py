#!/usr/bin/env python3
"""Reference values for the unit tests, computed with mpmath.

Profile functions come from their frequency-space definition (one mode
integral with the time integrals done analytically), not from the closed
forms the library implements. Kernel auxiliaries are integrated directly.

Usage: python3 tools/gen_reference.py > tests/reference_values.hpp
"""
import sys

import mpmath as mp

mp.mp.dps = 40
pi = mp.pi
sin, cos = mp.sin, mp.cos

XS = ["0.01", "0.3", "1.7", "7.5", "25"]
STATES = "vtcs"
PIECES = ["I", "II", "III", "IV"]


def breakpoints(x, upper):
    if upper == mp.inf:
        return [0, 1, 3, 8, 20, 50, 120]
    n = max(2, int(2 * x) + 2)
    return mp.linspace(0, 1, n)


# Configuration 1: separation 2 s up to x/2, back to 0 at x.
def c1_T(om, t):
    return 4 * sin(om * t / 4) ** 2 / om**2


def c1_Q(om, t):
    return t / (2 * om**2) - sin(om * t) / (2 * om**3)


def c1_diag(om, t, kind):
    if kind == "stat":
        return t**3 / 12
    if kind == "coh":
        return t**3 / 24 + cos(om * t) * c1_Q(om, t) / 2
    return cos(om * t) * c1_Q(om, t)


def c1_double(om, t, kind):
    tt = c1_T(om, t) ** 2
    return {"stat": tt, "coh": cos(om * t / 2) ** 2 * tt, "sq": cos(om * t) * tt}[kind]


# Configuration 2: separation s^2 on straight paths.
def c2_W(om, t):
    c = (t**2 / om) * sin(om * t) + (2 * t / om**2) * cos(om * t) - (2 / om**3) * sin(om * t)
    s = -(t**2 / om) * cos(om * t) + (2 * t / om**2) * sin(om * t) + (2 / om**3) * cos(om * t) - 2 / om**3
    return c, s


def c2_A4(k, t):
    y = k * t
    return ((y**4 - 12 * y**2 + 24) * sin(y) + (4 * y**3 - 24 * y) * cos(y)) / k**5


def c2_diag(om, t, kind):
    if kind == "stat":
        return t**5 / 5
    if kind == "coh":
        return t**5 / 10 + c2_A4(2 * om, t) / 2
    return c2_A4(2 * om, t)


def c2_double(om, t, kind):
    c, s = c2_W(om, t)
    return {"stat": c * c + s * s, "coh": c * c, "sq": c * c - s * s}[kind]


def state_setup(state):
    kind = {"v": "stat", "t": "stat", "c": "coh", "s": "sq"}[state]
    pref = {"v": 2, "t": 4, "c": 2, "s": -2}[state] / (15 * pi)
    if state == "t":
        weight, upper = (lambda o: 1 / mp.expm1(o * pi)), mp.inf
    else:
        weight, upper = (lambda o: 1), 1
    return kind, pref, weight, upper


def profile(config, state, piece, x):
    kind, pref, weight, upper = state_setup(state)
    n = 5 if piece in ("I", "II") else 3
    sign = 1 if n == 5 else -2
    diag, double = (c1_diag, c1_double) if config == 1 else (c2_diag, c2_double)
    inner = double if piece in ("I", "III") else diag
    integrand = lambda o: pref * sign * o**n * weight(o) * inner(o, x, kind)
    val = mp.quad(integrand, breakpoints(x, upper), maxdegree=12)
    if config == 1:
        K = {"v": 2, "t": mp.mpf(4) / 3, "c": mp.mpf(1) / 3, "s": -mp.mpf(2) / 3}[state]
        scale = {"I": 5 * pi, "II": 10 * pi, "III": -10 * pi, "IV": -20 * pi}[piece]
    else:
        K = {"v": 1, "t": 12, "c": 1, "s": -1}[state]
        scale = {"I": 15 * pi / 2, "II": 15 * pi, "III": -15 * pi, "IV": -30 * pi}[piece]
    return scale * val / K


def kernel_aux(n, x):
    return mp.quad(lambda y: y**n * cos(y), [0, x]) / x ** (n + 1)


def thermal_aux(which, x):
    # Bose integrals of w^5 cos, w^3 cos normalized to the closed-form auxiliaries.
    if which == 1:
        val = mp.quad(lambda w: w**5 * cos(w * x / pi) / mp.expm1(w), [0, 5, 20, 60, 200])
        return val / (60 * pi**6)
    val = mp.quad(lambda w: w**3 * cos(w * x / pi) / mp.expm1(w), [0, 5, 20, 60, 200])
    return val / (3 * pi**4)


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-1, max_fixed=0)


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_reference.py. Do not edit.\n#pragma once\n\n")
    out.write("namespace ref {\n\n")
    out.write("inline constexpr double xs[] = {" + ", ".join(XS) + "};\n\n")
    out.write("struct CiRow { double x, value; };\n")
    out.write("inline constexpr CiRow ci[] = {\n")
    for x in ["1e-8", "0.01", "0.5", "1.999", "2.001", "7.5", "40", "1e4"]:
        out.write(f"    {{{x}, {fmt(mp.ci(mp.mpf(x)))}}},\n")
    out.write("};\n\n")
    out.write("struct AuxRow { int n; double x, value; };\n")
    out.write("inline constexpr AuxRow kernel_aux[] = {\n")
    for n in (3, 5):
        for x in XS:
            out.write(f"    {{{n}, {x}, {fmt(kernel_aux(n, mp.mpf(x)))}}},\n")
    out.write("};\n")
    out.write("inline constexpr AuxRow thermal_aux[] = {\n")
    for which in (1, 2):
        for x in XS[:4]:
            out.write(f"    {{{which}, {x}, {fmt(thermal_aux(which, mp.mpf(x)))}}},\n")
    out.write("};\n\n")
    out.write("// [state][piece][x] with states vacuum, thermal, coherent, squeezed.\n")
    for config, name in ((1, "f"), (2, "g")):
        out.write(f"inline constexpr double {name}[4][4][{len(XS)}] = {{\n")
        for st in STATES:
            out.write("    {\n")
            for pc in PIECES:
                vals = [fmt(profile(config, st, pc, mp.mpf(x))) for x in XS]
                out.write("        {" + ", ".join(vals) + "},\n")
                print(name, st, pc, file=sys.stderr, flush=True)
            out.write("    },\n")
        out.write("};\n")
    out.write("\n}  // namespace ref\n")


if __name__ == "__main__":
    main()
