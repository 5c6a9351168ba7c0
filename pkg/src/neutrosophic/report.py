"""Feature reports, score rankings and logic evaluations as JSON-ready dicts."""

from __future__ import annotations

import functools
import json
import math
from typing import Any

from . import __version__
from .core import NeutrosophicTriple
from .measures import DEFAULT_PROFILE, SCORE_TIE_TOL, Profile, scalar_report, score
from .norms import PRODUCT, TNormFamily
from .penta_def import decompose5d, intersect5d, negate5d, union5d
from .penta_sat import decompose5s, intersect5s, negate5s, union5s
from .records import RecordBatch
from .tetra import decompose4, intersect4, negate4, union4

SIGNIFICANT_DIGITS = 12

SCHEMES = {
    "tetra": (decompose4, negate4, union4, intersect4),
    "penta-sat": (decompose5s, negate5s, union5s, intersect5s),
    "penta-def": (decompose5d, negate5d, union5d, intersect5d),
}
OPERATIONS = ("union", "intersection", "negation")


class MissingOperand(ValueError):
    pass


def _vector_entry(v) -> dict[str, Any]:
    entry = v.as_dict()
    entry["indeterminacy"] = v.indeterminacy()
    return entry


def _triple_entry(q: NeutrosophicTriple) -> dict[str, float]:
    return {"T": q.T, "I": q.I, "F": q.F}


def analyze_triple(q: NeutrosophicTriple, profile: Profile = DEFAULT_PROFILE) -> dict[str, Any]:
    return {
        "triple": _triple_entry(q),
        "scalars": scalar_report(q, profile).as_dict(),
        "tetra": _vector_entry(decompose4(q)),
        "penta_sat": _vector_entry(decompose5s(q)),
        "penta_def": _vector_entry(decompose5d(q, profile)),
    }


def run_analyze(batch: RecordBatch, profile: Profile = DEFAULT_PROFILE, family: TNormFamily = PRODUCT):
    records = []
    for k, rec in enumerate(batch):
        entry = {"index": k, "id": rec.id}
        entry.update(analyze_triple(rec.triple, profile))
        records.append(entry)
    return {
        "tool": "neutrosophic",
        "version": __version__,
        "profile": str(profile),
        "tnorm": str(family),
        "count": len(records),
        "records": records,
    }


def rank_order(etas: list[float], tol: float = SCORE_TIE_TOL) -> list[int]:
    """Indices by descending score; scores within ``tol`` of a run's leader keep input order."""
    by_score = sorted(range(len(etas)), key=lambda k: -etas[k])
    order: list[int] = []
    run: list[int] = []
    for k in by_score:
        if run and etas[run[0]] - etas[k] > tol:
            order.extend(sorted(run))
            run = []
        run.append(k)
    order.extend(sorted(run))
    return order


def run_rank(batch: RecordBatch, profile: Profile = DEFAULT_PROFILE) -> list[tuple[str | None, float]]:
    etas = [float(score(rec.triple, profile)) for rec in batch]
    return [(batch.records[k].id, etas[k]) for k in rank_order(etas)]


def rank_document(batch: RecordBatch, profile: Profile = DEFAULT_PROFILE) -> dict[str, Any]:
    etas = [float(score(rec.triple, profile)) for rec in batch]
    ranking = [
        {"rank": r, "index": k, "id": batch.records[k].id, "eta": etas[k]}
        for r, k in enumerate(rank_order(etas), start=1)
    ]
    return {"tool": "neutrosophic", "version": __version__, "profile": str(profile), "count": len(ranking), "ranking": ranking}


def run_logic(
    op: str,
    scheme: str,
    family: TNormFamily,
    lhs: NeutrosophicTriple,
    rhs: NeutrosophicTriple | None = None,
    profile: Profile = DEFAULT_PROFILE,
) -> dict[str, Any]:
    """Decompose the operands in ``scheme`` and combine them with ``op``."""
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r} (expected one of {', '.join(SCHEMES)})")
    if op not in OPERATIONS:
        raise ValueError(f"unknown operation {op!r} (expected one of {', '.join(OPERATIONS)})")
    decompose, negate, union, intersect = SCHEMES[scheme]
    if scheme == "penta-def":
        decompose = functools.partial(decompose, profile=profile)

    def show(v):
        entry = v.as_dict()
        entry["sum"] = v.total()
        return entry

    a = decompose(lhs)
    doc: dict[str, Any] = {"op": op, "scheme": scheme, "tnorm": str(family)}
    if scheme == "penta-def":
        doc["profile"] = str(profile)
    doc["lhs"] = {"triple": _triple_entry(lhs), "vector": show(a)}
    if op == "negation":
        result = negate(a)
    else:
        if rhs is None:
            raise MissingOperand(f"{op} needs a right-hand operand")
        b = decompose(rhs)
        doc["rhs"] = {"triple": _triple_entry(rhs), "vector": show(b)}
        result = union(a, b, family) if op == "union" else intersect(a, b, family)
    doc["result"] = show(result)
    return doc


def _round(obj):
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return obj
        return float(f"{obj:.{SIGNIFICANT_DIGITS}g}") + 0.0  # + 0.0 folds -0.0
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def to_json(doc: Any) -> str:
    """Serialise with numbers cut to 12 significant digits."""
    return json.dumps(_round(doc), indent=2) + "\n"
