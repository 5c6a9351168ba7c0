"""Frank t-norm family with De Morgan dual t-conorms.

Family strings: ``godel``, ``product``, ``lukasiewicz`` or ``frank:<s>`` with
``s > 0`` and ``s != 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

KINDS = ("godel", "product", "lukasiewicz", "frank")

# Outside this band s**x leaves the double range; the family is then
# indistinguishable from its limit member at double precision anyway.
_FRANK_MIN = 1e-300
_FRANK_MAX = 1e300


class InvalidParameter(ValueError):
    pass


@dataclass(frozen=True)
class TNormFamily:
    kind: str
    s: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameter(f"unknown t-norm family {self.kind!r}")
        if self.kind == "frank":
            s = self.s
            if s is None or not math.isfinite(s) or s <= 0 or s == 1:
                raise InvalidParameter(f"Frank parameter must be positive, finite and != 1, got {s!r}")
        elif self.s is not None:
            raise InvalidParameter(f"{self.kind} takes no parameter")

    def __str__(self):
        if self.kind != "frank":
            return self.kind
        text = repr(float(self.s))
        return "frank:" + (text[:-2] if text.endswith(".0") else text)

    def tnorm(self, x, y):
        return tnorm(self, x, y)

    def tconorm(self, x, y):
        return tconorm(self, x, y)


GODEL = TNormFamily("godel")
PRODUCT = TNormFamily("product")
LUKASIEWICZ = TNormFamily("lukasiewicz")


def frank(s: float) -> TNormFamily:
    return TNormFamily("frank", float(s))


def parse_family(text: str) -> TNormFamily:
    """Parse a family string such as ``"product"`` or ``"frank:2"``."""
    name, _, arg = text.strip().lower().partition(":")
    if name == "frank":
        try:
            s = float(arg)
        except ValueError:
            raise InvalidParameter(f"bad Frank parameter in {text!r}") from None
        return frank(s)
    if arg or name not in KINDS:
        raise InvalidParameter(f"unknown t-norm family {text!r}")
    return TNormFamily(name)


def _frank(s: float, x, y):
    if s < _FRANK_MIN:
        return np.minimum(x, y)
    if s > _FRANK_MAX:
        return np.maximum(x + y - 1.0, 0.0)
    L = math.log(s)
    hi = np.maximum(x, y)
    lo = np.minimum(x, y)
    if s >= 1e-2:
        z = np.expm1(hi * L) * (np.expm1(lo * L) / math.expm1(L))
        r = np.log1p(z) / L
    else:
        # 1 + (a-1)(b-1)/(s-1) rewritten as ((a - s) + b(1 - a)) / (1 - s),
        # a = s**hi, b = s**lo; every term is nonnegative, so no cancellation.
        num = s * np.expm1((hi - 1.0) * L) - np.exp(lo * L) * np.expm1(hi * L)
        r = (np.log(num) - math.log1p(-s)) / L
    # the family lies between Lukasiewicz and min; this only trims rounding
    return np.clip(r, np.maximum(x + y - 1.0, 0.0), lo)


def tnorm(family: TNormFamily, x, y):
    """Conjunction x AND y under the selected family."""
    kind = family.kind
    if kind == "godel":
        return np.minimum(x, y)
    if kind == "product":
        return x * y
    if kind == "lukasiewicz":
        return np.maximum(x + y - 1.0, 0.0)
    return _frank(family.s, x, y)


def tconorm(family: TNormFamily, x, y):
    """De Morgan dual of :func:`tnorm`: 1 - tnorm(1 - x, 1 - y)."""
    return 1.0 - tnorm(family, 1.0 - x, 1.0 - y)
