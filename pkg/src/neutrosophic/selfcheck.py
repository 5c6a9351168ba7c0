"""Seeded randomized verification of the library's invariants.

Every property is evaluated over the same batch of random triples (vectorised),
and reported as a pass count with the first failing input, if any.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import bifuzzy, measures, penta_def, penta_sat, tetra
from .core import BifuzzyPair, TripleArray, swap_tf
from .measures import Profile
from .norms import GODEL, LUKASIEWICZ, PRODUCT, TNormFamily, frank, tconorm, tnorm

FAMILIES = (GODEL, PRODUCT, LUKASIEWICZ, frank(2.0), frank(10.0))
IDENTITY_TOL = 1e-12
PROFILE_GRID = 1001


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: int
    total: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def _fmt(value, k) -> str:
    if isinstance(value, TripleArray):
        return f"({value.T[k]!r}, {value.I[k]!r}, {value.F[k]!r})"
    return repr(float(np.asarray(value).reshape(-1)[k]))


def _result(name: str, mask, **inputs) -> PropertyResult:
    mask = np.atleast_1d(np.asarray(mask, dtype=bool))
    passed = int(mask.sum())
    example = None
    if passed < mask.size:
        k = int(np.flatnonzero(~mask)[0])
        example = ", ".join(f"{key}={_fmt(v, k)}" for key, v in inputs.items()) or f"sample {k}"
    return PropertyResult(name, passed, int(mask.size), example)


def _close(a, b, tol=IDENTITY_TOL):
    return np.abs(np.asarray(a) - np.asarray(b)) <= tol


def _vec_close(v1, v2, tol=IDENTITY_TOL):
    return functools.reduce(np.logical_and, (_close(a, b, tol) for a, b in zip(v1.components(), v2.components())))


def _vec_equal(v1, v2):
    return functools.reduce(np.logical_and, (np.asarray(a) == np.asarray(b) for a, b in zip(v1.components(), v2.components())))


def _partition(v, tol):
    comps = [np.asarray(c) for c in v.components()]
    nonneg = functools.reduce(np.logical_and, (c >= -tol for c in comps))
    return nonneg & (np.abs(sum(comps) - 1.0) <= tol)


@dataclass(frozen=True)
class _Samples:
    q1: TripleArray
    q2: TripleArray
    q3: TripleArray
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    r: np.ndarray
    simplex: TripleArray

    @classmethod
    def draw(cls, n: int, seed: int) -> "_Samples":
        rng = np.random.default_rng(seed)
        cube = rng.random((9, n))
        u = rng.random((4, n))
        simplex = rng.dirichlet(np.ones(3), size=n).T
        return cls(
            q1=TripleArray(*cube[0:3]),
            q2=TripleArray(*cube[3:6]),
            q3=TripleArray(*cube[6:9]),
            x=u[0],
            y=u[1],
            z=u[2],
            r=u[3],
            simplex=TripleArray(*simplex),
        )


def _norm_checks(s: _Samples, fam: TNormFamily) -> Iterator[PropertyResult]:
    x, y, z = s.x, s.y, s.z
    T = functools.partial(tnorm, fam)
    S = functools.partial(tconorm, fam)
    p = f"norms.{fam}"
    yield _result(f"{p}.range", (T(x, y) >= 0) & (T(x, y) <= 1) & (S(x, y) >= 0) & (S(x, y) <= 1), x=x, y=y)
    yield _result(f"{p}.commutative", _close(T(x, y), T(y, x)) & _close(S(x, y), S(y, x)), x=x, y=y)
    yield _result(
        f"{p}.associative",
        _close(T(T(x, y), z), T(x, T(y, z))) & _close(S(S(x, y), z), S(x, S(y, z))),
        x=x, y=y, z=z,
    )
    lo, hi = np.minimum(x, z), np.maximum(x, z)
    yield _result(
        f"{p}.monotone",
        (T(lo, y) <= T(hi, y) + IDENTITY_TOL) & (S(lo, y) <= S(hi, y) + IDENTITY_TOL),
        x=lo, x2=hi, y=y,
    )
    yield _result(f"{p}.boundary", _close(T(x, 1.0), x) & _close(S(x, 0.0), x), x=x)
    yield _result(f"{p}.frank_equation", _close(T(x, y) + S(x, y), x + y), x=x, y=y)


def _bifuzzy_checks(s: _Samples, tol: float) -> Iterator[PropertyResult]:
    mu, nu = s.x, s.y
    pair, mirror = BifuzzyPair(mu, nu), BifuzzyPair(nu, mu)
    f3 = bifuzzy.fuzzy3(mu)
    yield _result("bifuzzy.fuzzy3.partition", _partition(f3, tol) & _close(f3.t * f3.f, 0.0), mu=mu)
    ipair = BifuzzyPair(mu, nu * (1 - mu))
    i4 = bifuzzy.ifs4(ipair)
    yield _result("bifuzzy.ifs4.partition", _partition(i4, tol) & _close(i4.t * i4.f, 0.0), mu=mu, nu=ipair.nu)
    ops = (
        (bifuzzy.bifuzzy3, ()),
        (bifuzzy.bifuzzy4_def, ("u", "o")),
        (bifuzzy.bifuzzy4_ign, ("t", "f")),
        (bifuzzy.bifuzzy5, ("u", "o")),
    )
    for op, exclusive in ops:
        v = op(pair)
        ok = _partition(v, tol)
        if exclusive:
            ok = ok & _close(getattr(v, exclusive[0]) * getattr(v, exclusive[1]), 0.0)
        if op is bifuzzy.bifuzzy5:
            ok = ok & _close(v.t * v.f, 0.0)
        yield _result(f"bifuzzy.{op.__name__}.partition", ok, mu=mu, nu=nu)
        m = op(mirror)
        same = [np.asarray(getattr(m, k)) == np.asarray(getattr(v, k)) for k in v.field_names() if k not in ("t", "f")]
        ok = (np.asarray(m.t) == np.asarray(v.f)) & (np.asarray(m.f) == np.asarray(v.t))
        yield _result(f"bifuzzy.{op.__name__}.mirror", functools.reduce(np.logical_and, same, ok), mu=mu, nu=nu)


def _measure_checks(s: _Samples) -> Iterator[PropertyResult]:
    q = s.q1
    grid = np.linspace(0.0, 1.0, PROFILE_GRID)
    for prof in Profile:
        at = measures.definedness(np.array([0.0, 1 / 3, 1.0]), prof)
        yield _result(f"measures.profile.{prof}.anchors", _close(at, [-1.0, 0.0, 1.0], 1e-9), lam=np.array([0.0, 1 / 3, 1.0]))
        yield _result(f"measures.profile.{prof}.nondecreasing", np.diff(measures.definedness(grid, prof)) >= 0, lam=grid[1:])

    rep = measures.scalar_report(q)
    m = swap_tf(q)
    ranges = (
        (np.abs(rep.tau) <= 1) & (np.abs(rep.omega) <= 1) & (np.abs(rep.eta) <= 1)
        & (rep.lam >= 0) & (rep.lam <= 1)
        & (rep.entropy_r >= 0) & (rep.entropy_c <= 1) & (rep.entropy_r <= rep.entropy_c + IDENTITY_TOL)
    )
    yield _result("measures.ranges", ranges, q=q)
    for prof in Profile:
        yield _result(
            f"measures.mirror.{prof}",
            _close(measures.net_truth(m), -measures.net_truth(q)) & _close(measures.score(m, prof), -measures.score(q, prof)),
            q=q,
        )
    yield _result(
        "measures.entropy.mirror_invariant",
        _close(measures.entropy_czekanowski(m), rep.entropy_c) & _close(measures.entropy_ruzicka(m), rep.entropy_r),
        q=q,
    )

    d_true, d_false = measures.crisp_distances(q)
    sim_c = 1 - np.abs(d_true - d_false) / (d_true + d_false)
    sim_r = 1 - np.abs(d_true - d_false) / np.maximum(d_true, d_false)
    yield _result("measures.entropy.distance_route", _close(sim_c, rep.entropy_c) & _close(sim_r, rep.entropy_r), q=q)

    mu = s.x
    fuzzy = TripleArray(mu, np.zeros_like(mu), 1 - mu)
    gap = np.abs(2 * mu - 1)
    yield _result("measures.entropy.kaufman", _close(measures.entropy_czekanowski(fuzzy), 1 - gap), mu=mu)
    yield _result("measures.entropy.kosko", _close(measures.entropy_ruzicka(fuzzy), (1 - gap) / (1 + gap)), mu=mu)

    sx = s.simplex
    d = np.abs(sx.T - sx.F)
    yield _result(
        "measures.entropy.simplex",
        _close(measures.entropy_czekanowski(sx), 1 - d / (1 + sx.I))
        & _close(measures.entropy_ruzicka(sx), (1 - d + sx.I) / (1 + d + sx.I)),
        q=sx,
    )

    # pull T and F toward their mean: same I and T + F, smaller |T - F|
    half_sum = (q.T + q.F) / 2
    half_gap = (q.T - q.F) / 2
    closer = TripleArray(half_sum + s.r * half_gap, q.I, half_sum - s.r * half_gap)
    yield _result(
        "measures.entropy.monotone_in_gap",
        (measures.entropy_czekanowski(closer) >= rep.entropy_c - IDENTITY_TOL)
        & (measures.entropy_ruzicka(closer) >= rep.entropy_r - IDENTITY_TOL),
        q=q, r=s.r,
    )

    e1, e2, e3 = (measures.score(t) for t in (s.q1, s.q2, s.q3))

    def geq(a, b):
        return a - b >= -measures.SCORE_TIE_TOL

    yield _result("measures.order.reflexive", geq(e1, e1), q=s.q1)
    yield _result("measures.order.transitive", ~(geq(e1, e2) & geq(e2, e3)) | geq(e1, e3) | _close(e1, e3, 3e-12), q1=s.q1, q2=s.q2, q3=s.q3)


SchemeOps = tuple[Callable, Callable, Callable, Callable]


def _algebra_checks(prefix, ops: SchemeOps, s: _Samples, tol: float) -> Iterator[PropertyResult]:
    decompose, negate, union, intersect = ops
    a, b, c = decompose(s.q1), decompose(s.q2), decompose(s.q3)
    yield _result(f"{prefix}.negation.involution", _vec_equal(negate(negate(a)), a), q=s.q1)
    for fam in FAMILIES:
        p = f"{prefix}.{fam}"
        u, i = union(a, b, fam), intersect(a, b, fam)
        yield _result(f"{p}.union.partition", _partition(u, tol), q1=s.q1, q2=s.q2)
        yield _result(f"{p}.intersection.partition", _partition(i, tol), q1=s.q1, q2=s.q2)
        yield _result(
            f"{p}.de_morgan",
            _vec_close(negate(u), intersect(negate(a), negate(b), fam))
            & _vec_close(negate(i), union(negate(a), negate(b), fam)),
            q1=s.q1, q2=s.q2,
        )
        yield _result(
            f"{p}.commutative",
            _vec_close(u, union(b, a, fam)) & _vec_close(i, intersect(b, a, fam)),
            q1=s.q1, q2=s.q2,
        )
        yield _result(
            f"{p}.associative",
            _vec_close(union(u, c, fam), union(a, union(b, c, fam), fam), tol)
            & _vec_close(intersect(i, c, fam), intersect(a, intersect(b, c, fam), fam), tol),
            q1=s.q1, q2=s.q2, q3=s.q3,
        )
        if fam == GODEL:
            yield _result(
                f"{p}.idempotent",
                _vec_close(union(a, a, fam), a) & _vec_close(intersect(a, a, fam), a),
                q=s.q1,
            )


def _tetra_checks(s: _Samples, tol: float) -> Iterator[PropertyResult]:
    q = s.q1
    v = tetra.decompose4(q)
    yield _result("tetra.partition", _partition(v, tol), q=q)
    yield _result("tetra.incomplete", v.t + v.f + v.n <= 1 + tol, q=q)
    yield _result("tetra.mirror", _vec_equal(tetra.decompose4(swap_tf(q)), tetra.negate4(v)), q=q)
    flat = TripleArray(q.T, np.zeros_like(q.I), q.F)
    v0 = tetra.decompose4(flat)
    b3 = bifuzzy.bifuzzy3(BifuzzyPair(q.T, q.F))
    yield _result(
        "tetra.reduces_to_bifuzzy3",
        _close(v0.n, 0.0) & _close(v0.t, b3.t) & _close(v0.w, b3.w) & _close(v0.f, b3.f),
        mu=q.T, nu=q.F,
    )
    yield from _algebra_checks("tetra", (tetra.decompose4, tetra.negate4, tetra.union4, tetra.intersect4), s, tol)


def _penta_sat_checks(s: _Samples, tol: float) -> Iterator[PropertyResult]:
    q = s.q1
    v = penta_sat.decompose5s(q)
    yield _result("penta_sat.partition", _partition(v, tol), q=q)
    yield _result("penta_sat.mirror", _vec_equal(penta_sat.decompose5s(swap_tf(q)), penta_sat.negate5s(v)), q=q)
    v4 = tetra.decompose4(q)
    beta_min = np.minimum(np.minimum(v4.t, v4.n), v4.f)
    m3 = np.minimum(np.minimum(q.T, q.I), q.F)
    yield _result("penta_sat.beta_min", _close(beta_min, m3 / 3), q=q)
    yield _result(
        "penta_sat.beta_route",
        _close(v.t, v4.t - beta_min) & _close(v.n, v4.n - beta_min) & _close(v.f, v4.f - beta_min) & _close(v.s, 3 * beta_min),
        q=q,
    )
    yield _result(
        "penta_sat.below_tetra",
        (v.t <= v4.t + IDENTITY_TOL) & (v.n <= v4.n + IDENTITY_TOL) & (v.f <= v4.f + IDENTITY_TOL),
        q=q,
    )
    yield from _algebra_checks(
        "penta_sat", (penta_sat.decompose5s, penta_sat.negate5s, penta_sat.union5s, penta_sat.intersect5s), s, tol
    )


def _penta_def_checks(s: _Samples, tol: float) -> Iterator[PropertyResult]:
    q = s.q1
    for prof in Profile:
        v = penta_def.decompose5d(q, prof)
        yield _result(f"penta_def.{prof}.partition", _partition(v, tol), q=q)
        yield _result(f"penta_def.{prof}.exclusive", np.asarray(v.o) * np.asarray(v.u) == 0, q=q)
        yield _result(
            f"penta_def.{prof}.mirror",
            _vec_close(penta_def.decompose5d(swap_tf(q), prof), penta_def.negate5d(v)),
            q=q,
        )
    # T + I > 1 with F = 0: over-defined, yet nothing in common with (1, 1, 1)
    over = TripleArray(0.5 + 0.5 * s.x, 0.5 + 0.5 * s.y, np.zeros_like(s.x))
    dense = (over.T + over.I > 1) & (penta_def.decompose5d(over).o > 0) & (penta_sat.decompose5s(over).s == 0)
    yield _result("penta_def.over_vs_saturation", dense, q=over)
    yield from _algebra_checks(
        "penta_def", (penta_def.decompose5d, penta_def.negate5d, penta_def.union5d, penta_def.intersect5d), s, tol
    )


def run_selfcheck(samples: int, seed: int = 0, tol: float = 1e-9) -> list[PropertyResult]:
    """Evaluate every property on ``samples`` seeded random inputs.

    ``tol`` bounds partition sums and component signs; algebraic identities
    use a fixed 1e-12.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    s = _Samples.draw(samples, seed)
    results = [_result("core.swap_involution", _vec_triple_equal(swap_tf(swap_tf(s.q1)), s.q1), q=s.q1)]
    for fam in FAMILIES:
        results.extend(_norm_checks(s, fam))
    results.extend(_bifuzzy_checks(s, tol))
    results.extend(_measure_checks(s))
    results.extend(_tetra_checks(s, tol))
    results.extend(_penta_sat_checks(s, tol))
    results.extend(_penta_def_checks(s, tol))
    return results


def _vec_triple_equal(a: TripleArray, b: TripleArray):
    return (a.T == b.T) & (a.I == b.I) & (a.F == b.F)


def format_results(results: list[PropertyResult], samples: int, seed: int) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        line = f"{status}  {r.name:<{width}}  {r.passed}/{r.total}"
        if r.counterexample:
            line += f"  first counterexample: {r.counterexample}"
        lines.append(line)
    failed = sum(not r.ok for r in results)
    lines.append(f"{len(results)} properties, {failed} failed (samples={samples}, seed={seed})")
    return "\n".join(lines) + "\n"
