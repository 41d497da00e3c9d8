#!/usr/bin/env python3
"""Reference values for the unit tests, computed with mpmath.

Usage: generate.py > tests/unit/oracle_values.hpp
Every value is computed from a formula independent of the C++ code paths.
"""
import sys

import mpmath as mp

mp.mp.dps = 40

entries = []


def real(name, value):
    entries.append((name, mp.mpf(value), None))


def cplx(name, value):
    value = mp.mpc(value)
    entries.append((name, value.real, value.imag))


def periodic_l(values, s):
    return mp.dirichlet(s, values)


# numerics
real("kGammaHalf", mp.gamma(0.5))
cplx("kLogGamma_3p7_2p1i", mp.loggamma(mp.mpc(3.7, 2.1)))
cplx("kGamma_2p5_1i", mp.gamma(mp.mpc(2.5, 1)))
cplx("kGamma_m2p5_0p5i", mp.gamma(mp.mpc(-2.5, 0.5)))
real("kBesselJ0_1", mp.besselj(0, 1))
real("kBesselJ11_30p5", mp.besselj(11, 30.5))
real("kBesselJ11_3", mp.besselj(11, 3))
real("kBesselJhalf_100p3", mp.besselj(0.5, 100.3))
real("kBesselJ1p5_7p25", mp.besselj(1.5, 7.25))
real("kBesselJ0_60", mp.besselj(0, 60))
real("kBesselJ1_50", mp.besselj(1, 50))

# lfun
cplx("kZeta_half_14i", mp.zeta(mp.mpc(0.5, 14)))
cplx("kZeta_2_30i", mp.zeta(mp.mpc(2, 30)))
real("kZeta_m1p5", mp.zeta(-1.5))
real("kZeta3", mp.zeta(3))
real("kHurwitz_2p5_0p3", mp.zeta(2.5, 0.3))
cplx("kHurwitz_half_3i_0p75", mp.zeta(mp.mpc(0.5, 3), 0.75))
chi4 = [0, 1, 0, -1]
cplx("kLchi4_half_2i", periodic_l(chi4, mp.mpc(0.5, 2)))
chi5 = [0, mp.mpc(0, 1) ** 0, mp.mpc(0, 1) ** 1, mp.mpc(0, 1) ** 3, mp.mpc(0, 1) ** 2]
cplx("kLchi5_2", periodic_l(chi5, 2))
cplx("kLchi5_half", periodic_l(chi5, 0.5))
chi7 = [0, 1, 1, -1, 1, -1, -1]
real("kDedekindQ7_2", mp.zeta(2) * periodic_l(chi7, 2))
chi3 = [0, 1, -1]
cplx("kDedekindQ3_1p5_1i", mp.zeta(mp.mpc(1.5, 1)) * periodic_l(chi3, mp.mpc(1.5, 1)))
real("kEpsteinSum4_3", 8 * (1 - mp.mpf(4) ** (1 - 3)) * mp.zeta(3) * mp.zeta(2))
s = mp.mpc(1.5, 2)
cplx("kEpsteinTwoSquares_1p5_2i", 4 * mp.zeta(s) * periodic_l(chi4, s))
real("kEisensteinL4_5", 240 * mp.zeta(5) * mp.zeta(2))
real("kEisensteinL6_7p5", -504 * mp.zeta(7.5) * mp.zeta(2.5))


def tau_naive(count):
    # q prod (1 - q^n)^24, one factor at a time
    poly = [0] * (count + 1)
    poly[1] = 1
    for n in range(1, count + 1):
        for _ in range(24):
            for i in range(count, n - 1, -1):
                poly[i] -= poly[i - n]
    return poly


taus = tau_naive(1200)
real("kRamanujanL12", mp.fsum(mp.mpf(taus[n]) / mp.mpf(n) ** 12 for n in range(1, 1201)))


# moments: I_n(u) = int_0^1 t^{(k-1)/2-u} J_{k-1}(4 pi sqrt(n t) / lambda) dt
def moment_quad(k, lam, n, u):
    X = 2 * mp.pi * mp.sqrt(n) / lam
    f = lambda s: 2 * s ** (k - 2 * u) * mp.besselj(k - 1, 2 * X * s)
    pts = [0] + [mp.mpf(j) / 64 for j in range(1, 65)]
    return mp.quad(f, pts)


def moment_series(k, lam, n, u):
    X = 2 * mp.pi * mp.sqrt(n) / lam
    with mp.workdps(int(4 * X) + 60):
        total = mp.nsum(lambda m: (-1) ** m * X ** (2 * m + k - 1)
                        / (mp.factorial(m) * mp.gamma(m + k) * (m + k - u)), [0, mp.inf],
                        method="direct", steps=[int(6 * X) + 80])
    return total


real("kMomentTheta_n3_u0p2", moment_quad(mp.mpf(0.5), 2, 3, mp.mpf(0.2)))
real("kMomentDelta_n2_u11p5", moment_quad(12, 1, 2, mp.mpf(11.5)))
real("kMomentOdd4_n5_u1p25", moment_quad(mp.mpf(1.5), 8, 5, mp.mpf(1.25)))
real("kMomentTheta_n200_u0p3", moment_quad(mp.mpf(0.5), 2, 200, mp.mpf(0.3)))
real("kMomentTheta_n1_u0p75", moment_series(mp.mpf(0.5), 2, 1, mp.mpf(0.75)))
real("kMomentTheta_n200_u0p75", moment_series(mp.mpf(0.5), 2, 200, mp.mpf(0.75)))
real("kMomentDelta_n1_u12p5", moment_series(12, 1, 1, mp.mpf(12.5)))
real("kMomentDelta_n41_u14p5", moment_series(12, 1, 41, mp.mpf(14.5)))
real("kMomentDelta_n160_u14p5", moment_series(12, 1, 160, mp.mpf(14.5)))
real("kMomentDelta_n160_u11p5", moment_quad(12, 1, 160, mp.mpf(11.5)))
cplx("kMomentTheta_n4_u0p8_0p3i", moment_series(mp.mpf(0.5), 2, 4, mp.mpc(0.8, 0.3)))


# classical Wilton
def wilton_lhs(u, v):
    return mp.zeta(u) * mp.zeta(v) - (1 / (u - 1) + 1 / (v - 1)) * mp.zeta(u + v - 1)


real("kWiltonLhs_2_3", wilton_lhs(mp.mpf(2), mp.mpf(3)))
cplx("kWiltonLhs_half_1i_1p7", wilton_lhs(mp.mpc(0.5, 1), mp.mpf(1.7)))


def wilton_tail(u, A):
    # int_A^inf t^{-s} e^{+-it} dt = (-+i)^{s-1} Gamma(1-s, -+iA), s = u + 1
    s = u + 1
    plus = mp.power(mp.mpc(0, -1), s - 1) * mp.gammainc(1 - s, mp.mpc(0, -A))
    minus = mp.power(mp.mpc(0, 1), s - 1) * mp.gammainc(1 - s, mp.mpc(0, A))
    return (plus - minus) / mp.mpc(0, 2)


real("kWiltonTail_u2_A2pi", mp.re(wilton_tail(mp.mpf(2), 2 * mp.pi)))
real("kWiltonTail_u2_A60pi", mp.re(wilton_tail(mp.mpf(2), 60 * mp.pi)))
cplx("kWiltonTail_u0p4_1i_A60pi", wilton_tail(mp.mpc(0.4, 1), 60 * mp.pi))
real("kWiltonTail_um0p5_A4pi", mp.re(wilton_tail(mp.mpf(-0.5), 4 * mp.pi)))


def fmt(x):
    return mp.nstr(x, 20)


out = sys.stdout
out.write("#pragma once\n\n// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.\n\n")
out.write("#include <complex>\n\nnamespace oracle_values {\n\n")
for name, re, im in entries:
    if im is None:
        out.write(f"inline constexpr double {name} = {fmt(re)};\n")
    else:
        out.write(f"inline const std::complex<double> {name}{{{fmt(re)}, {fmt(im)}}};\n")
out.write("\n}  // namespace oracle_values\n")
