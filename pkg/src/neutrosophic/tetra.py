"""Tetra-valued logic: true, neutral, unknown, false.

The unit cube of triples is compressed onto the tetrahedron spanned by
(1,0,0), (0,1,0), (0,0,1) and (0,0,0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .core import PartitionVector, checked_sum, clamp_noise, pairwise_mins
from .norms import TNormFamily, tconorm, tnorm


@dataclass(frozen=True)
class TetraVector(PartitionVector):
    t: float
    n: float
    w: float
    f: float

    indeterminacy_fields: ClassVar[tuple[str, ...]] = ("n", "w")


TRUE = TetraVector(1.0, 0.0, 0.0, 0.0)
NEUTRAL = TetraVector(0.0, 1.0, 0.0, 0.0)
UNKNOWN = TetraVector(0.0, 0.0, 1.0, 0.0)
FALSE = TetraVector(0.0, 0.0, 0.0, 1.0)


def decompose4(q) -> TetraVector:
    m_ti, m_tf, m_if, m3 = pairwise_mins(q)
    third = m3 / 3
    return TetraVector(
        t=clamp_noise(q.T - (m_ti + m_tf) / 2 + third),
        n=clamp_noise(q.I - (m_ti + m_if) / 2 + third),
        # w is independent of the other three; the partition rests on
        # T + I + F - (pairwise mins) + min = max.
        w=clamp_noise(1 - np.maximum(np.maximum(q.T, q.I), q.F)),
        f=clamp_noise(q.F - (m_if + m_tf) / 2 + third),
    )


def indeterminacy4(v: TetraVector):
    return v.n + v.w


def negate4(v: TetraVector) -> TetraVector:
    return TetraVector(t=v.f, n=v.n, w=v.w, f=v.t)


def union4(v1: TetraVector, v2: TetraVector, family: TNormFamily) -> TetraVector:
    t = tconorm(family, v1.t, v2.t)
    f = tnorm(family, v1.f, v2.f)
    n = tconorm(family, checked_sum(v1.n, v1.t), checked_sum(v2.n, v2.t)) - t
    w = tnorm(family, checked_sum(v1.w, v1.f), checked_sum(v2.w, v2.f)) - f
    return TetraVector(t=t, n=n, w=w, f=f)


def intersect4(v1: TetraVector, v2: TetraVector, family: TNormFamily) -> TetraVector:
    t = tnorm(family, v1.t, v2.t)
    f = tconorm(family, v1.f, v2.f)
    w = tnorm(family, checked_sum(v1.w, v1.t), checked_sum(v2.w, v2.t)) - t
    n = tconorm(family, checked_sum(v1.n, v1.f), checked_sum(v2.n, v2.f)) - f
    return TetraVector(t=t, n=n, w=w, f=f)
