"""Clean decomposition deciders.

Each variant asks whether every element splits as companion + complement,
where the companion is an idempotent or a projection, the complement a unit
or a radical element, optionally commuting, and optionally unique.  Witness
enumeration is the single source of truth; decisions just inspect counts.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .core import StarRing, inverse
from .errors import NotIdempotent, RadicalPreconditionFailed, StarCleanError
from .structure import idempotents, jacobson_radical, projections, units


class Variant(str, Enum):
    CLEAN = "CLEAN"
    UNIQUELY_CLEAN = "UNIQUELY_CLEAN"
    STRONGLY_CLEAN = "STRONGLY_CLEAN"
    UNIQUELY_STRONGLY_CLEAN = "UNIQUELY_STRONGLY_CLEAN"
    STAR_CLEAN = "STAR_CLEAN"
    STRONGLY_STAR_CLEAN = "STRONGLY_STAR_CLEAN"
    UNIQUELY_STRONGLY_STAR_CLEAN = "UNIQUELY_STRONGLY_STAR_CLEAN"
    J_CLEAN = "J_CLEAN"
    STRONGLY_J_CLEAN = "STRONGLY_J_CLEAN"
    J_STAR_CLEAN = "J_STAR_CLEAN"
    STRONGLY_J_STAR_CLEAN = "STRONGLY_J_STAR_CLEAN"
    UNIQUELY_J_STAR_CLEAN = "UNIQUELY_J_STAR_CLEAN"
    COND_T32_5 = "COND_T32_5"


@dataclass(frozen=True)
class _Profile:
    projection: bool      # companion must be a projection (else idempotent)
    radical: bool         # complement must lie in J(R) (else be a unit)
    commute: bool
    unique: bool
    extra: bool = False   # additionally ae* = e*a and e - e* in J(R)


_PROFILES = {
    Variant.CLEAN: _Profile(False, False, False, False),
    Variant.UNIQUELY_CLEAN: _Profile(False, False, False, True),
    Variant.STRONGLY_CLEAN: _Profile(False, False, True, False),
    Variant.UNIQUELY_STRONGLY_CLEAN: _Profile(False, False, True, True),
    Variant.STAR_CLEAN: _Profile(True, False, False, False),
    Variant.STRONGLY_STAR_CLEAN: _Profile(True, False, True, False),
    Variant.UNIQUELY_STRONGLY_STAR_CLEAN: _Profile(True, False, True, True),
    Variant.J_CLEAN: _Profile(False, True, False, False),
    Variant.STRONGLY_J_CLEAN: _Profile(False, True, True, False),
    Variant.J_STAR_CLEAN: _Profile(True, True, False, False),
    Variant.STRONGLY_J_STAR_CLEAN: _Profile(True, True, True, False),
    Variant.UNIQUELY_J_STAR_CLEAN: _Profile(True, True, False, True),
    Variant.COND_T32_5: _Profile(False, False, True, True, extra=True),
}


@dataclass(frozen=True)
class CleanWitness:
    element: int
    companion: int
    complement: int
    commutes: bool


@dataclass(frozen=True)
class DecisionReport:
    variant: Variant
    holds: bool
    failures: tuple      # (element, companion count) pairs


@lru_cache(maxsize=None)
def witnesses(S: StarRing, a: int, v: Variant) -> tuple:
    """All decompositions a = e + u matching the variant, by ascending e."""
    profile = _PROFILES[v]
    R = S.ring
    companions = projections(S) if profile.projection else idempotents(R)
    if profile.radical:
        complement_ok = set(jacobson_radical(R).members)
    else:
        complement_ok = units(R)
    jac = set(jacobson_radical(R).members)
    out = []
    for e in companions:
        u = R.sub(a, e)
        if u not in complement_ok:
            continue
        commutes = R.mul(a, e) == R.mul(e, a)
        if profile.commute and not commutes:
            continue
        if profile.extra:
            es = S.star(e)
            if R.mul(a, es) != R.mul(es, a):
                continue
            if R.sub(e, es) not in jac:
                continue
        out.append(CleanWitness(a, e, u, commutes))
    return tuple(out)


def decide(S: StarRing, v: Variant, exhaustive: bool = False) -> DecisionReport:
    """Whether every element has the required number of decompositions.

    Uniqueness variants require exactly one companion; existence variants at
    least one.  Failures report the least failing element first; without
    --exhaustive only the first failure is recorded.
    """
    profile = _PROFILES[v]
    failures = []
    for a in S.ring.elements():
        count = len(witnesses(S, a, v))
        bad = count != 1 if profile.unique else count == 0
        if bad:
            failures.append((a, count))
            if not exhaustive:
                break
    return DecisionReport(v, not failures, tuple(failures))


@lru_cache(maxsize=None)
def _decide_cached(S: StarRing, v: Variant) -> DecisionReport:
    return decide(S, v)


def holds(S: StarRing, v: Variant) -> bool:
    return _decide_cached(S, v).holds


def projectionize(S: StarRing, e: int) -> int:
    """The projection f = e*e [1 + (e*-e)(e-e*)]^{-1} associated with e.

    Requires e idempotent with e - e* in J(R); guarantees f = f^2 = f*,
    fe = f, ef = e and e - f in J(R).
    """
    R = S.ring
    if R.mul(e, e) != e:
        raise NotIdempotent(f"element {R.labels[e]} is not idempotent")
    es = S.star(e)
    jac = set(jacobson_radical(R).members)
    if R.sub(e, es) not in jac:
        raise RadicalPreconditionFailed(
            f"e - e* = {R.labels[R.sub(e, es)]} is outside the radical"
        )
    bracket = R.add(R.one, R.mul(R.sub(es, e), R.sub(e, es)))
    inv = inverse(R, bracket)
    if inv is None:
        raise StarCleanError("bracket 1 + (e*-e)(e-e*) is not invertible")
    f = R.mul(R.mul(es, e), inv)
    checks = (
        R.mul(f, f) == f,
        S.star(f) == f,
        R.mul(f, e) == f,
        R.mul(e, f) == e,
        R.sub(e, f) in jac,
    )
    if not all(checks):
        raise StarCleanError("projectionize postcondition failed")
    return f
