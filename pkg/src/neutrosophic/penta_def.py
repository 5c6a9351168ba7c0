"""Penta-valued logic driven by definedness: true, neutral, false,
over-defined, under-defined.

With ``lam`` the component mean and ``omega`` its definedness, the positive
part of omega becomes over-definedness directly, while the negative part is
normalised together with the components:

    d = 3*lam + max(-omega, 0)
    (t, n, f) = (1 - max(omega, 0)) * (T, I, F) / d
    o = max(omega, 0)
    u = max(-omega, 0) / d

At least one of ``o`` and ``u`` is always zero. ``d`` never vanishes because
every profile maps ``lam = 0`` to ``omega = -1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .core import PartitionVector, checked_sum
from .measures import DEFAULT_PROFILE, Profile, definedness, mean_component
from .norms import TNormFamily, tconorm, tnorm


@dataclass(frozen=True)
class PentaDefVector(PartitionVector):
    t: float
    n: float
    f: float
    o: float
    u: float

    indeterminacy_fields: ClassVar[tuple[str, ...]] = ("n", "o", "u")


TRUE = PentaDefVector(1.0, 0.0, 0.0, 0.0, 0.0)
NEUTRAL = PentaDefVector(0.0, 1.0, 0.0, 0.0, 0.0)
FALSE = PentaDefVector(0.0, 0.0, 1.0, 0.0, 0.0)
OVER_DEFINED = PentaDefVector(0.0, 0.0, 0.0, 1.0, 0.0)
UNDER_DEFINED = PentaDefVector(0.0, 0.0, 0.0, 0.0, 1.0)


def decompose5d(q, profile: Profile = DEFAULT_PROFILE) -> PentaDefVector:
    lam = mean_component(q)
    omega = definedness(lam, profile)
    over = np.maximum(omega, 0.0)
    under = np.maximum(-omega, 0.0)
    denom = 3 * lam + under
    scale = (1 - over) / denom
    return PentaDefVector(t=scale * q.T, n=scale * q.I, f=scale * q.F, o=over, u=under / denom)


def indeterminacy5d(v: PentaDefVector):
    return v.n + v.o + v.u


def negate5d(v: PentaDefVector) -> PentaDefVector:
    return PentaDefVector(t=v.f, n=v.n, f=v.t, o=v.o, u=v.u)


def _remainder(t, f, o, u):
    return 1.0 - (t + f) - (o + u)


def union5d(v1: PentaDefVector, v2: PentaDefVector, family: TNormFamily) -> PentaDefVector:
    t = tconorm(family, v1.t, v2.t)
    f = tnorm(family, v1.f, v2.f)
    o = tnorm(family, checked_sum(v1.o, v1.f), checked_sum(v2.o, v2.f)) - f
    u = tnorm(family, checked_sum(v1.u, v1.f), checked_sum(v2.u, v2.f)) - f
    return PentaDefVector(t=t, n=_remainder(t, f, o, u), f=f, o=o, u=u)


def intersect5d(v1: PentaDefVector, v2: PentaDefVector, family: TNormFamily) -> PentaDefVector:
    t = tnorm(family, v1.t, v2.t)
    f = tconorm(family, v1.f, v2.f)
    o = tnorm(family, checked_sum(v1.o, v1.t), checked_sum(v2.o, v2.t)) - t
    u = tnorm(family, checked_sum(v1.u, v1.t), checked_sum(v2.u, v2.t)) - t
    return PentaDefVector(t=t, n=_remainder(t, f, o, u), f=f, o=o, u=u)
