"""Structural invariants of finite rings and *-rings.

Units, radicals, idempotents/projections, center, ideal lattices and the
flag predicates the characterization theorems quantify over.  Everything is
computed by exhaustive search over the element tables; results are cached
per ring instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import FiniteRing, Involution, StarRing, inverse, quotient_ring
from .errors import NotIdeal, OrderBoundExceeded, StarCleanError

MAX_IDEAL_ENUMERATION = 256
MAX_SEMISIMPLE_ORDER = 256


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal as a sorted tuple of element indices."""

    members: tuple
    star_closed: bool | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members


@dataclass(frozen=True)
class StructureFlags:
    abelian: bool
    boolean_ring: bool
    star_boolean: bool
    local: bool
    regular: bool
    star_regular: bool
    two_in_radical: bool
    center_plus_radical_is_all: bool
    directly_finite: bool = True


def check_ideal(R: FiniteRing, members) -> tuple:
    """Validate a two-sided ideal; returns the sorted member tuple."""
    mem = sorted(set(int(m) for m in members))
    mset = set(mem)
    if R.zero not in mset:
        raise NotIdeal("ideal must contain zero")
    A, M = R.add_table, R.mul_table
    for x in mem:
        for y in mem:
            if int(A[x, y]) not in mset:
                raise NotIdeal("not additively closed", (x, y))
    for x in mem:
        for r in range(R.order):
            if int(M[r, x]) not in mset:
                raise NotIdeal("not closed under left multiplication", (r, x))
            if int(M[x, r]) not in mset:
                raise NotIdeal("not closed under right multiplication", (x, r))
    return tuple(mem)


def as_star_ideal(S: StarRing, ideal: Ideal) -> Ideal:
    """Same ideal with its star-closure flag filled in."""
    closed = all(S.star(x) in set(ideal.members) for x in ideal.members)
    return Ideal(ideal.members, star_closed=closed)


@lru_cache(maxsize=None)
def units(R: FiniteRing) -> frozenset:
    """The set of two-sided invertible elements."""
    return frozenset(x for x in R.elements() if inverse(R, x) is not None)


@lru_cache(maxsize=None)
def _unit_mask(R: FiniteRing) -> np.ndarray:
    mask = np.zeros(R.order, dtype=bool)
    mask[list(units(R))] = True
    mask.setflags(write=False)
    return mask


@lru_cache(maxsize=None)
def jacobson_radical(R: FiniteRing) -> Ideal:
    """J(R) via quasi-regularity: x in J iff 1 - a*x is a unit for all a."""
    A, M = R.add_table, R.mul_table
    one_minus = A[R.one][R.neg_table[M]]      # [a, x] -> 1 - a*x
    mask = _unit_mask(R)[one_minus].all(axis=0)
    members = tuple(int(v) for v in np.flatnonzero(mask))
    # the left-sided test suffices in a finite ring, but confirm anyway
    checked = check_ideal(R, members)
    if checked != members:
        raise StarCleanError("radical candidate is not a two-sided ideal")
    return Ideal(members)


@lru_cache(maxsize=None)
def one_minus_unit_set(R: FiniteRing) -> frozenset:
    """{x | 1 - x is a unit}, computed independently of the radical."""
    return frozenset(x for x in R.elements() if R.sub(R.one, x) in units(R))


@lru_cache(maxsize=None)
def prime_radical(R: FiniteRing) -> Ideal:
    """P(R) as the set of strongly nilpotent elements.

    Directed graph on nonzero elements with an edge a -> b when b lies in
    aRa; a is strongly nilpotent iff no path from a reaches a cycle, found
    by iteratively peeling sink nodes.
    """
    M = R.mul_table
    succ = {}
    for a in R.elements():
        if a == R.zero:
            continue
        reach = set(int(v) for v in M[M[a], a])
        reach.discard(R.zero)
        succ[a] = reach
    removed: set[int] = set()
    changed = True
    while changed:
        changed = False
        for a, reach in succ.items():
            if a not in removed and reach <= removed:
                removed.add(a)
                changed = True
    members = tuple(sorted(removed | {R.zero}))
    return Ideal(check_ideal(R, members))


@lru_cache(maxsize=None)
def idempotents(R: FiniteRing) -> tuple:
    diag = R.mul_table.diagonal()
    return tuple(int(v) for v in np.flatnonzero(diag == np.arange(R.order)))


@lru_cache(maxsize=None)
def projections(S: StarRing) -> tuple:
    return tuple(e for e in idempotents(S.ring) if S.star(e) == e)


@lru_cache(maxsize=None)
def center_elements(R: FiniteRing) -> tuple:
    M = R.mul_table
    mask = (M == M.T).all(axis=1)
    return tuple(int(v) for v in np.flatnonzero(mask))


@lru_cache(maxsize=None)
def center(S: StarRing) -> StarRing:
    """The center C(R) as a *-ring with the restricted operations."""
    R = S.ring
    mem = center_elements(R)
    pos = {m: i for i, m in enumerate(mem)}
    for x in mem:
        if S.star(x) not in pos:
            raise StarCleanError("involution does not preserve the center")
    add = [[pos[R.add(x, y)] for y in mem] for x in mem]
    mul = [[pos[R.mul(x, y)] for y in mem] for x in mem]
    ring = FiniteRing([R.labels[m] for m in mem], add, mul, pos[R.zero], pos[R.one])
    star = Involution(ring, [pos[S.star(x)] for x in mem])
    return StarRing(ring, star)


@lru_cache(maxsize=None)
def _principal_ideal(R: FiniteRing, a: int) -> frozenset:
    A, M = R.add_table, R.mul_table
    members = {R.zero, a}
    changed = True
    while changed:
        changed = False
        cur = list(members)
        for x in cur:
            for r in R.elements():
                for y in (int(M[r, x]), int(M[x, r])):
                    if y not in members:
                        members.add(y)
                        changed = True
        cur = list(members)
        for x in cur:
            for y in cur:
                t = int(A[x, y])
                if t not in members:
                    members.add(t)
                    changed = True
    return frozenset(members)


@lru_cache(maxsize=None)
def ideals(R: FiniteRing, max_enumeration: int = MAX_IDEAL_ENUMERATION) -> tuple:
    """All two-sided ideals, as sums of principal ideals, deduplicated."""
    A = R.add_table
    principals = sorted(
        {_principal_ideal(R, a) for a in R.elements()},
        key=lambda s: (len(s), sorted(s)),
    )
    found = {frozenset({R.zero})}
    queue = [frozenset({R.zero})]
    while queue:
        current = queue.pop()
        for p in principals:
            summed = frozenset(int(A[x, y]) for x in current for y in p)
            if summed not in found:
                found.add(summed)
                if len(found) > max_enumeration:
                    raise OrderBoundExceeded(
                        f"more than {max_enumeration} ideals during enumeration"
                    )
                queue.append(summed)
    out = sorted(found, key=lambda s: (len(s), sorted(s)))
    return tuple(Ideal(tuple(sorted(s))) for s in out)


@lru_cache(maxsize=None)
def semisimple_quotient(R: FiniteRing):
    """R/J(R) plus the index projection map."""
    J = jacobson_radical(R)
    Q, proj = quotient_ring(R, J.members)
    return Q, proj


@lru_cache(maxsize=None)
def maximal_ideals(R: FiniteRing) -> tuple:
    """Maximal two-sided ideals, found in R/J(R) and pulled back."""
    Q, proj = semisimple_quotient(R)
    if Q.order > MAX_SEMISIMPLE_ORDER:
        raise OrderBoundExceeded(
            f"semisimple quotient order {Q.order} exceeds {MAX_SEMISIMPLE_ORDER}"
        )
    proper = [set(i.members) for i in ideals(Q) if len(i.members) < Q.order]
    maximal = [
        i for i in proper if not any(i < other for other in proper)
    ]
    pulled = []
    for i in maximal:
        members = tuple(x for x in R.elements() if int(proj[x]) in i)
        pulled.append(Ideal(members))
    return tuple(sorted(pulled, key=lambda i: i.members))


def lifts_idempotents(R: FiniteRing, I: Ideal) -> bool:
    """True iff every idempotent of R/I lifts to an idempotent of R."""
    Q, proj = quotient_ring(R, check_ideal(R, I.members))
    lifted = {int(proj[f]) for f in idempotents(R)}
    return set(idempotents(Q)) <= lifted


def _is_local(R: FiniteRing) -> bool:
    mask = _unit_mask(R)
    return all(mask[x] or mask[R.sub(R.one, x)] for x in R.elements())


def _is_regular(R: FiniteRing) -> bool:
    M = R.mul_table
    return all((M[M[x], x] == x).any() for x in R.elements())


def _is_star_regular(S: StarRing) -> bool:
    # xR = pR for some projection p, for every x
    M = S.ring.mul_table
    proj_row_sets = {frozenset(int(v) for v in M[p]) for p in projections(S)}
    return all(
        frozenset(int(v) for v in M[x]) in proj_row_sets for x in S.ring.elements()
    )


@lru_cache(maxsize=None)
def classify_flags(S: StarRing) -> StructureFlags:
    R = S.ring
    idem = idempotents(R)
    central = set(center_elements(R))
    jac = set(jacobson_radical(R).members)
    covered = {
        R.add(c, j) for c in central for j in jac
    }
    return StructureFlags(
        abelian=all(e in central for e in idem),
        boolean_ring=len(idem) == R.order,
        star_boolean=len(projections(S)) == R.order,
        local=_is_local(R),
        regular=_is_regular(R),
        star_regular=_is_star_regular(S),
        two_in_radical=R.add(R.one, R.one) in jac,
        center_plus_radical_is_all=len(covered) == R.order,
    )
