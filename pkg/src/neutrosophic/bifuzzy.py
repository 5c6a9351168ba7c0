"""Multi-valued readings of fuzzy, intuitionistic and bifuzzy information.

These are the two-component ancestors of the neutrosophic decompositions and
double as reduction oracles for them. Every function accepts scalars or
numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import BifuzzyPair, ConstraintViolation, PartitionVector, SNAP_TOL


@dataclass(frozen=True)
class Fuzzy3Vector(PartitionVector):
    t: float
    v: float
    f: float


@dataclass(frozen=True)
class Ifs4Vector(PartitionVector):
    t: float
    v: float
    u: float
    f: float


@dataclass(frozen=True)
class Bifuzzy3Vector(PartitionVector):
    t: float
    w: float
    f: float


@dataclass(frozen=True)
class Bifuzzy4DefVector(PartitionVector):
    t: float
    o: float
    u: float
    f: float


@dataclass(frozen=True)
class Bifuzzy4IgnVector(PartitionVector):
    t: float
    c: float
    w: float
    f: float


@dataclass(frozen=True)
class Bifuzzy5Vector(PartitionVector):
    t: float
    o: float
    v: float
    u: float
    f: float


def fuzzy3(mu) -> Fuzzy3Vector:
    """Truth, ambiguity and falsity of a membership degree."""
    return Fuzzy3Vector(
        t=np.maximum(2 * mu - 1, 0.0),
        v=1 - np.abs(2 * mu - 1),
        f=np.maximum(1 - 2 * mu, 0.0),
    )


def ifs4(p: BifuzzyPair) -> Ifs4Vector:
    """Four-valued reading of an intuitionistic pair; requires mu + nu <= 1."""
    mu, nu = p.mu, p.nu
    if np.any(mu + nu > 1 + SNAP_TOL):
        raise ConstraintViolation(f"intuitionistic pair needs mu + nu <= 1, got {mu} + {nu}")
    return Ifs4Vector(
        t=np.maximum(mu - nu, 0.0),
        v=2 * np.minimum(mu, nu),
        u=1 - (mu + nu),
        f=np.maximum(nu - mu, 0.0),
    )


def bifuzzy3(p: BifuzzyPair) -> Bifuzzy3Vector:
    mu, nu = p.mu, p.nu
    half_overlap = np.minimum(mu, nu) / 2
    return Bifuzzy3Vector(t=mu - half_overlap, w=1 - np.maximum(mu, nu), f=nu - half_overlap)


def bifuzzy4_def(p: BifuzzyPair) -> Bifuzzy4DefVector:
    mu, nu = p.mu, p.nu
    return Bifuzzy4DefVector(
        t=np.minimum(mu, 1 - nu),
        o=np.maximum(mu + nu - 1, 0.0),
        u=np.maximum(1 - (mu + nu), 0.0),
        f=np.minimum(1 - mu, nu),
    )


def bifuzzy4_ign(p: BifuzzyPair) -> Bifuzzy4IgnVector:
    mu, nu = p.mu, p.nu
    return Bifuzzy4IgnVector(
        t=np.maximum(mu - nu, 0.0),
        c=np.minimum(mu, nu),
        w=1 - np.maximum(mu, nu),
        f=np.maximum(nu - mu, 0.0),
    )


def bifuzzy5(p: BifuzzyPair) -> Bifuzzy5Vector:
    mu, nu = p.mu, p.nu
    return Bifuzzy5Vector(
        t=np.maximum(mu - nu, 0.0),
        o=np.maximum(mu + nu - 1, 0.0),
        v=1 - np.abs(mu - nu) - np.abs(mu + nu - 1),
        u=np.maximum(1 - (mu + nu), 0.0),
        f=np.maximum(nu - mu, 0.0),
    )
