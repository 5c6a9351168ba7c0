"""Penta-valued logic with saturation: true, neutral, saturated, unknown, false.

Saturation ``s = min(T, I, F)`` measures closeness to (1, 1, 1) and is the
mass the tetra-valued truth, neutrality and falsity have in common. Removing
it from them gives

    t = T - (min(T, I) + min(T, F)) / 2
    n = I - (min(T, I) + min(I, F)) / 2
    f = F - (min(F, I) + min(T, F)) / 2

and ignorance keeps its tetra-valued form ``w = 1 - max(T, I, F)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .core import PartitionVector, checked_sum, clamp_noise, pairwise_mins
from .norms import TNormFamily, tconorm, tnorm


@dataclass(frozen=True)
class PentaSatVector(PartitionVector):
    t: float
    n: float
    s: float
    w: float
    f: float

    indeterminacy_fields: ClassVar[tuple[str, ...]] = ("n", "s", "w")


TRUE = PentaSatVector(1.0, 0.0, 0.0, 0.0, 0.0)
NEUTRAL = PentaSatVector(0.0, 1.0, 0.0, 0.0, 0.0)
SATURATED = PentaSatVector(0.0, 0.0, 1.0, 0.0, 0.0)
UNKNOWN = PentaSatVector(0.0, 0.0, 0.0, 1.0, 0.0)
FALSE = PentaSatVector(0.0, 0.0, 0.0, 0.0, 1.0)


def decompose5s(q) -> PentaSatVector:
    m_ti, m_tf, m_if, m3 = pairwise_mins(q)
    return PentaSatVector(
        t=clamp_noise(q.T - (m_ti + m_tf) / 2),
        n=clamp_noise(q.I - (m_ti + m_if) / 2),
        s=m3,
        w=clamp_noise(1 - np.maximum(np.maximum(q.T, q.I), q.F)),
        f=clamp_noise(q.F - (m_if + m_tf) / 2),
    )


def indeterminacy5s(v: PentaSatVector):
    return v.n + v.s + v.w


def negate5s(v: PentaSatVector) -> PentaSatVector:
    return PentaSatVector(t=v.f, n=v.n, s=v.s, w=v.w, f=v.t)


def _remainder(t, f, s, w):
    # grouped so that negating both operands gives a bit-identical result
    return 1.0 - (t + f) - (s + w)


def union5s(v1: PentaSatVector, v2: PentaSatVector, family: TNormFamily) -> PentaSatVector:
    t = tconorm(family, v1.t, v2.t)
    f = tnorm(family, v1.f, v2.f)
    s = tconorm(family, checked_sum(v1.s, v1.t), checked_sum(v2.s, v2.t)) - t
    w = tnorm(family, checked_sum(v1.w, v1.f), checked_sum(v2.w, v2.f)) - f
    return PentaSatVector(t=t, n=_remainder(t, f, s, w), s=s, w=w, f=f)


def intersect5s(v1: PentaSatVector, v2: PentaSatVector, family: TNormFamily) -> PentaSatVector:
    t = tnorm(family, v1.t, v2.t)
    f = tconorm(family, v1.f, v2.f)
    w = tnorm(family, checked_sum(v1.w, v1.t), checked_sum(v2.w, v2.t)) - t
    s = tconorm(family, checked_sum(v1.s, v1.f), checked_sum(v2.s, v2.f)) - f
    return PentaSatVector(t=t, n=_remainder(t, f, s, w), s=s, w=w, f=f)
