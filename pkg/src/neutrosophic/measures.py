"""Scalar features of a triple: net truth, definedness, score and entropy."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import plain_floats

SCORE_TIE_TOL = 1e-12


class Profile(enum.Enum):
    """Definedness curves mapping the component mean onto [-1, 1].

    Each passes through (0, -1), (1/3, 0) and (1, 1) and is increasing.
    """

    RATIONAL = "rational"
    SINE = "sine"
    QUADRATIC = "quadratic"
    PIECEWISE = "piecewise"
    SQRT = "sqrt"

    def __str__(self):
        return self.value


DEFAULT_PROFILE = Profile.RATIONAL


def parse_profile(text: str | Profile) -> Profile:
    if isinstance(text, Profile):
        return text
    try:
        return Profile(text.strip().lower())
    except ValueError:
        names = ", ".join(p.value for p in Profile)
        raise ValueError(f"unknown definedness profile {text!r} (expected one of {names})") from None


def _component_sum(q):
    # (T + F) + I keeps the result bit-identical under the T/F mirror
    return (q.T + q.F) + q.I


def net_truth(q):
    return (q.T - q.F) / (1 + q.I)


def mean_component(q):
    return _component_sum(q) / 3


def definedness(lam, profile: Profile = DEFAULT_PROFILE):
    """Signed definedness of a component mean: < 0 under-defined, > 0 over-defined."""
    if profile is Profile.RATIONAL:
        return (3 * lam - 1) / (1 + lam)
    if profile is Profile.SINE:
        return 2 * np.sin(lam * (math.pi / 2)) - 1
    if profile is Profile.QUADRATIC:
        return (7 * lam - 3 * lam * lam) / 2 - 1
    if profile is Profile.PIECEWISE:
        return (9 * lam - 3 - np.abs(3 * lam - 1)) / 4
    if profile is Profile.SQRT:
        a = np.sqrt(2 * lam)
        b = np.sqrt(1 - lam)
        return (a - b) / (a + b)
    raise ValueError(f"unknown profile {profile!r}")


def score(q, profile: Profile = DEFAULT_PROFILE):
    """Neutrosophic score: net truth damped by the size of the definedness."""
    omega = definedness(mean_component(q), profile)
    return net_truth(q) / (1 + np.abs(omega))


def compare(q1, q2, profile: Profile = DEFAULT_PROFILE) -> int:
    """Order two triples by score: 1 if q1 ranks above q2, -1 below, 0 tied."""
    d = score(q1, profile) - score(q2, profile)
    if abs(d) <= SCORE_TIE_TOL:
        return 0
    return 1 if d > 0 else -1


def crisp_distances(q):
    """City-block distances from (T-F, T+I+F-1, I) to the images of crisp true and crisp false."""
    excess = np.abs(_component_sum(q) - 1)
    d_true = np.abs(q.T - q.F - 1) + excess + q.I
    d_false = np.abs(q.T - q.F + 1) + excess + q.I
    return d_true, d_false


def entropy_czekanowski(q):
    spread = q.I + np.abs(_component_sum(q) - 1)
    return 1 - np.abs(q.T - q.F) / (1 + spread)


def entropy_ruzicka(q):
    spread = q.I + np.abs(_component_sum(q) - 1)
    gap = np.abs(q.T - q.F)
    return (1 - gap + spread) / (1 + gap + spread)


@dataclass(frozen=True)
class ScalarReport:
    tau: float
    lam: float
    omega: float
    eta: float
    entropy_c: float
    entropy_r: float

    def __post_init__(self):
        plain_floats(self)

    def as_dict(self):
        return {
            "tau": self.tau,
            "lambda": self.lam,
            "omega": self.omega,
            "eta": self.eta,
            "entropy_c": self.entropy_c,
            "entropy_r": self.entropy_r,
        }


def scalar_report(q, profile: Profile = DEFAULT_PROFILE) -> ScalarReport:
    lam = mean_component(q)
    omega = definedness(lam, profile)
    tau = net_truth(q)
    return ScalarReport(
        tau=tau,
        lam=lam,
        omega=omega,
        eta=tau / (1 + np.abs(omega)),
        entropy_c=entropy_czekanowski(q),
        entropy_r=entropy_ruzicka(q),
    )
