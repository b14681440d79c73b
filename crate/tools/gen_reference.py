"""Regenerate the frozen reference tables used by the specfun contract tests.

Values are computed with mpmath at 40 significant digits and written with 17
significant digits, which is enough to pin double-precision results.
"""
import csv
import os

import mpmath as mp

mp.mp.dps = 40
OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "tests", "data")

ORDERS = [-0.75, -0.5, -0.3, 0.0, 0.25, 0.5, 1.0, 1.5, 2.5, 3.0, 5.0, 8.5]
XS = [0.01, 0.1, 0.5, 1.0, 2.0, 3.7, 5.0, 8.0, 12.0, 16.5, 17.5, 20.0, 25.0, 33.0, 50.0, 80.0, 150.0]
XS_IK = [0.01, 0.1, 0.5, 1.0, 2.0, 3.7, 5.0, 8.0, 12.0, 20.0, 30.0, 31.0, 45.0, 50.0, 100.0, 300.0, 700.0]


def f(v):
    return repr(float(v))


def write(name, header, rows):
    with open(os.path.join(OUT, name), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def bessel_jy():
    rows = []
    for nu in ORDERS:
        for x in XS:
            rows.append([nu, x, f(mp.besselj(nu, x)), f(mp.bessely(nu, x))])
    write("bessel_jy.csv", ["nu", "x", "j", "y"], rows)


def bessel_ik():
    rows = []
    for nu in ORDERS:
        for x in XS_IK:
            x_ = mp.mpf(x)
            i_s = mp.besseli(nu, x_) * mp.exp(-x_)
            k_s = mp.besselk(nu, x_) * mp.exp(x_)
            rows.append([nu, x, f(i_s), f(k_s)])
    write("bessel_ik_scaled.csv", ["nu", "x", "i_scaled", "k_scaled"], rows)


def bessel_k_complex():
    rows = []
    for nu in [0.0, 0.3, 1.0, 2.5, 4.0, 5.0]:
        for r in [0.05, 0.3, 1.0, 2.0, 5.0, 12.0, 40.0]:
            for sign in (1, -1):
                z = mp.mpf(r) * mp.exp(sign * 1j * mp.pi / 4)
                k = mp.besselk(nu, z)
                rows.append([nu, r, sign, f(k.real), f(k.imag)])
    write("bessel_k_complex.csv", ["nu", "modulus", "ray", "re", "im"], rows)


def struve():
    rows = []
    for nu in [-0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 2.0]:
        for x in [0.01, 0.5, 1.0, 3.0, 5.9, 6.1, 9.0, 15.0, 25.0, 40.0, 100.0]:
            rows.append([nu, x, f(mp.struveh(nu, x))])
    write("struve_h.csv", ["nu", "x", "h"], rows)


def legendre():
    rows = []
    for nu in [-0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5]:
        for mu in [0.0, 0.3, 0.5, 1.0]:
            if nu - mu + 1 <= 0 and (nu - mu) == int(nu - mu):
                continue
            for x in [1.0001, 1.01, 1.2, 2.0, 5.0, 20.0, 100.0]:
                p = mp.legenp(nu, -mu, x, type=3)
                q = mp.legenq(nu, -mu, x, type=3) * mp.exp(1j * mp.pi * mu)
                rows.append([nu, mu, x, f(mp.re(p)), f(mp.re(q))])
    write("legendre.csv", ["nu", "mu", "x", "p", "q"], rows)


def hyp2f1():
    rows = []
    params = [(0.3, 0.7, 1.0), (0.25, 1.25, 3.5), (1.5, 0.5, 5.0), (0.4, 0.9, 0.3),
              (-0.5, 1.2, 2.7), (1.75, 1.25, 2.5), (0.5, 0.5, 1.0), (2.0, 3.0, 4.5)]
    for a, b, c in params:
        for z in [-5.0, -0.9, -0.2, 0.1, 0.45, 0.55, 0.8, 0.95, 0.999]:
            rows.append([a, b, c, z, f(mp.hyp2f1(a, b, c, z))])
    write("hyp2f1.csv", ["a", "b", "c", "z", "f"], rows)


def zeros():
    rows = []
    for nu in [-0.3, 0.0, 0.7, 1.0, 2.5, 6.0]:
        for k in [1, 2, 3, 5, 10, 40]:
            if nu >= 0:
                z = mp.besseljzero(nu, k)
            else:
                # root of J_nu near McMahon's estimate
                beta = (k + nu / 2 - mp.mpf(1) / 4) * mp.pi
                z = mp.findroot(lambda t: mp.besselj(nu, t), beta - (4 * nu * nu - 1) / (8 * beta))
            rows.append([nu, k, f(z)])
    write("bessel_zeros.csv", ["nu", "k", "zero"], rows)


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    bessel_jy()
    bessel_ik()
    bessel_k_complex()
    struve()
    legendre()
    hyp2f1()
    zeros()
