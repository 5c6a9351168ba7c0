"""Exact reference formulas for the tests.

Written independently of the package: plain ``fractions.Fraction`` arithmetic
with builtin min/max, straight from the closed forms. Transcendental pieces
(sine / sqrt profiles, Frank t-norm) use mpmath at high precision.
"""

from fractions import Fraction

import mpmath

mpmath.mp.dps = 50


def fr(x):
    # floats are read as the decimal they print as, so 0.6 means 3/5
    return Fraction(repr(x)) if isinstance(x, float) else Fraction(x)


def tetra(T, I, F):
    T, I, F = fr(T), fr(I), fr(F)
    m = min(T, I, F)
    t = T - (min(T, I) + min(T, F)) / 2 + m / 3
    f = F - (min(F, I) + min(T, F)) / 2 + m / 3
    n = I - (min(T, I) + min(I, F)) / 2 + m / 3
    w = 1 - max(T, I, F)
    return t, n, w, f


def penta_sat(T, I, F):
    """Saturation route: the tetra components minus their common minimum."""
    bt, bn, _, bf = tetra(T, I, F)
    m = min(bt, bn, bf)
    w = 1 - max(fr(T), fr(I), fr(F))
    return bt - m, bn - m, 3 * m, w, bf - m


def rational_omega(lam):
    lam = fr(lam)
    return (3 * lam - 1) / (1 + lam)


def penta_def_rational(T, I, F):
    T, I, F = fr(T), fr(I), fr(F)
    lam = (T + I + F) / 3
    om = rational_omega(lam)
    over, under = max(om, 0), max(-om, 0)
    d = 3 * lam + under
    return (1 - over) * T / d, (1 - over) * I / d, (1 - over) * F / d, over, under / d


def scalars_rational(T, I, F):
    T, I, F = fr(T), fr(I), fr(F)
    tau = (T - F) / (1 + I)
    lam = (T + I + F) / 3
    om = rational_omega(lam)
    eta = tau / (1 + abs(om))
    spread = I + abs(T + I + F - 1)
    ec = 1 - abs(T - F) / (1 + spread)
    er = (1 - abs(T - F) + spread) / (1 + abs(T - F) + spread)
    return {"tau": tau, "lambda": lam, "omega": om, "eta": eta, "entropy_c": ec, "entropy_r": er}


def distances(T, I, F):
    T, I, F = fr(T), fr(I), fr(F)
    excess = abs(T + I + F - 1)
    return abs(T - F - 1) + excess + I, abs(T - F + 1) + excess + I


def frank(s, x, y):
    s, x, y = mpmath.mpf(s), mpmath.mpf(x), mpmath.mpf(y)
    return mpmath.log(1 + (s**x - 1) * (s**y - 1) / (s - 1), s)


def omega(profile, lam):
    lam = mpmath.mpf(lam)
    if profile == "rational":
        return (3 * lam - 1) / (1 + lam)
    if profile == "sine":
        return 2 * mpmath.sin(lam * mpmath.pi / 2) - 1
    if profile == "quadratic":
        return (7 * lam - 3 * lam**2) / 2 - 1
    if profile == "piecewise":
        return (9 * lam - 3 - abs(3 * lam - 1)) / 4
    if profile == "sqrt":
        a, b = mpmath.sqrt(2 * lam), mpmath.sqrt(1 - lam)
        return (a - b) / (a + b)
    raise ValueError(profile)


def as_floats(values):
    return tuple(float(v) for v in values)
