"""Value types shared by every representation: triples, bifuzzy pairs and
partition vectors.

All numeric routines in this package are written against numpy ufuncs, so a
triple whose components are arrays (see :func:`make_triples`) flows through
the same formulas as a scalar one and yields array-valued vectors.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Sequence
from dataclasses import dataclass, fields, replace
from typing import Any, ClassVar

import numpy as np

SNAP_TOL = 1e-12
PARTITION_TOL = 1e-9
NOISE_TOL = 1e-12


class OutOfRange(ValueError):
    def __init__(self, component: str, value: Any):
        self.component = component
        self.value = value
        super().__init__(f"{component}={value!r} is outside [0, 1]")


class ConstraintViolation(ValueError):
    pass


def _snap_scalar(name: str, value: Any) -> float:
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise OutOfRange(name, value) from None
    if math.isnan(x) or x < -SNAP_TOL or x > 1.0 + SNAP_TOL:
        raise OutOfRange(name, value)
    return min(max(x, 0.0), 1.0)


def _snap_array(name: str, value: Any) -> np.ndarray:
    x = np.asarray(value, dtype=float)
    bad = np.isnan(x) | (x < -SNAP_TOL) | (x > 1.0 + SNAP_TOL)
    if bad.any():
        raise OutOfRange(name, x[bad].flat[0].item())
    return np.clip(x, 0.0, 1.0)


@dataclass(frozen=True)
class NeutrosophicTriple:
    """Degrees of truth ``T``, neutrality ``I`` and falsity ``F``.

    Each lies in [0, 1]; the sum is unconstrained. Build through
    :func:`make_triple` to get validation and bound snapping.
    """

    T: float
    I: float  # noqa: E741
    F: float

    def __iter__(self):
        return iter((self.T, self.I, self.F))


@dataclass(frozen=True, eq=False)
class TripleArray:
    """Column-wise batch of triples; same attribute names as a single triple."""

    T: np.ndarray
    I: np.ndarray  # noqa: E741
    F: np.ndarray

    def __len__(self):
        return len(self.T)

    def __getitem__(self, k):
        if isinstance(k, (int, np.integer)):
            return NeutrosophicTriple(float(self.T[k]), float(self.I[k]), float(self.F[k]))
        return TripleArray(self.T[k], self.I[k], self.F[k])


@dataclass(frozen=True)
class BifuzzyPair:
    mu: float
    nu: float


def make_triple(T, I, F) -> NeutrosophicTriple:  # noqa: E741
    """Validate three degrees and return a triple.

    Values within 1e-12 of a bound are snapped onto it; anything further out
    raises :class:`OutOfRange`.
    """
    return NeutrosophicTriple(_snap_scalar("T", T), _snap_scalar("I", I), _snap_scalar("F", F))


def make_triples(T, I, F) -> TripleArray:  # noqa: E741
    T, I, F = (_snap_array(n, v) for n, v in (("T", T), ("I", I), ("F", F)))
    T, I, F = np.broadcast_arrays(T, I, F)
    return TripleArray(T, I, F)


def make_pair(mu, nu) -> BifuzzyPair:
    return BifuzzyPair(_snap_scalar("mu", mu), _snap_scalar("nu", nu))


def swap_tf(q):
    """Mirror a triple: (T, I, F) -> (F, I, T)."""
    return replace(q, T=q.F, F=q.T)


def plain_floats(obj):
    """Replace numpy scalar fields of a frozen dataclass by Python floats."""
    for f in fields(obj):
        value = getattr(obj, f.name)
        if isinstance(value, np.generic) or (isinstance(value, np.ndarray) and value.ndim == 0):
            object.__setattr__(obj, f.name, float(value))


class PartitionVector:
    """Mixin for dataclass vectors whose components form a partition of unity."""

    indeterminacy_fields: ClassVar[tuple[str, ...]] = ()

    def __post_init__(self):
        plain_floats(self)

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def components(self) -> tuple:
        return tuple(getattr(self, name) for name in self.field_names())

    def total(self):
        return sum(self.components())

    def indeterminacy(self):
        return sum(getattr(self, name) for name in self.indeterminacy_fields)

    def as_dict(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in self.field_names()}

    def __getitem__(self, k):
        """Select a record from an array-valued vector."""
        cls = type(self)
        return cls(*(c[k] for c in self.components()))


def check_partition(v: PartitionVector | Sequence[float], tol: float = PARTITION_TOL) -> bool:
    """True iff every component is >= -tol and the components sum to 1 within tol.

    For array-valued vectors the answer covers every record.
    """
    comps = v.components() if isinstance(v, PartitionVector) else tuple(v)
    arrs = [np.asarray(c, dtype=float) for c in comps]
    nonneg = all(bool(np.all(a >= -tol)) for a in arrs)
    return nonneg and bool(np.all(np.abs(sum(arrs) - 1.0) <= tol))


class _Diagnostics:
    def __init__(self):
        self._lock = threading.Lock()
        self._clamped = 0

    def add_clamped(self, n: int):
        if n:
            with self._lock:
                self._clamped += n

    @property
    def clamped(self) -> int:
        return self._clamped

    def reset(self):
        with self._lock:
            self._clamped = 0


diagnostics = _Diagnostics()


def clamp_noise(x):
    """Zero out rounding noise in [-1e-12, 0); larger negatives pass through."""
    if isinstance(x, np.ndarray):
        mask = (x < 0.0) & (x >= -NOISE_TOL)
        n = int(mask.sum())
        if n:
            diagnostics.add_clamped(n)
            return np.where(mask, 0.0, x)
        return x
    if -NOISE_TOL <= x < 0.0:
        diagnostics.add_clamped(1)
        return 0.0
    return x


def checked_sum(a, b):
    """a + b for operator arguments that the partition invariant keeps <= 1."""
    s = a + b
    assert np.all(s <= 1.0 + PARTITION_TOL), f"aggregate {s} exceeds 1; input is not a partition"
    return s


def pairwise_mins(q):
    """min(T, I), min(T, F), min(I, F) and min(T, I, F) of a triple."""
    m_ti = np.minimum(q.T, q.I)
    m_tf = np.minimum(q.T, q.F)
    m_if = np.minimum(q.I, q.F)
    return m_ti, m_tf, m_if, np.minimum(m_ti, q.F)
