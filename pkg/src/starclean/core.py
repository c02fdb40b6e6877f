"""Finite unital rings, involutions and *-rings as dense index tables.

Every object is validated exhaustively at construction time; downstream
analyses assume validated instances.  All types are immutable after
validation and safe to share across threads.
"""
from __future__ import annotations

import itertools
import os

import numpy as np

from .errors import (
    AxiomViolation,
    NotAutomorphism,
    NotInvolution,
    OrderBoundExceeded,
    ShapeError,
)

DEFAULT_MAX_ORDER = 4096
DEFAULT_MAX_INVOLUTION_ORDER = 16


def max_order() -> int:
    """Construction order guard; override with STARCLEAN_MAX_ORDER."""
    return int(os.environ.get("STARCLEAN_MAX_ORDER", DEFAULT_MAX_ORDER))


def _as_table(table, order: int, name: str) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int32)
    if arr.ndim != 2 or arr.shape != (order, order):
        raise ShapeError(f"{name} table must be {order}x{order}, got shape {arr.shape}")
    if arr.size and (int(arr.min()) < 0 or int(arr.max()) >= order):
        raise ShapeError(f"{name} table has entries outside 0..{order - 1}")
    return arr


def _first_diff(lhs: np.ndarray, rhs: np.ndarray):
    where = np.argwhere(lhs != rhs)
    return tuple(int(v) for v in where[0])


class FiniteRing:
    """A finite associative unital ring on indices 0..order-1.

    Addition and multiplication are total lookup tables; zero and one are
    stored explicitly so constructions may keep natural element orderings.
    """

    def __init__(self, labels, add, mul, zero: int, one: int):
        labels = tuple(str(lab) for lab in labels)
        n = len(labels)
        if n == 0:
            raise ShapeError("a ring needs at least one element")
        if n > max_order():
            raise OrderBoundExceeded(f"order {n} exceeds guard {max_order()}")
        if len(set(labels)) != n:
            raise ShapeError("element labels must be unique")
        if not (0 <= int(zero) < n and 0 <= int(one) < n):
            raise ShapeError("zero/one index out of range")
        self.labels = labels
        self.order = n
        self.add_table = _as_table(add, n, "add")
        self.mul_table = _as_table(mul, n, "mul")
        self.zero = int(zero)
        self.one = int(one)
        self._validate()
        self.neg_table = np.argmax(self.add_table == self.zero, axis=1).astype(np.int32)
        for arr in (self.add_table, self.mul_table, self.neg_table):
            arr.setflags(write=False)
        self._index = {lab: i for i, lab in enumerate(labels)}

    def _validate(self) -> None:
        A, M, n = self.add_table, self.mul_table, self.order
        idx = np.arange(n, dtype=np.int32)
        if not np.array_equal(A, A.T):
            raise AxiomViolation("additive commutativity", _first_diff(A, A.T))
        if not np.array_equal(A[self.zero], idx):
            b = _first_diff(A[self.zero], idx)[0]
            raise AxiomViolation("additive identity", (self.zero, b))
        zero_hits = (A == self.zero).sum(axis=1)
        if not (zero_hits == 1).all():
            a = int(np.argwhere(zero_hits != 1)[0][0])
            raise AxiomViolation("additive inverse", (a,))
        for a in range(n):
            lhs = A[A[a]]          # (a+b)+c
            rhs = A[a][A]          # a+(b+c)
            if not np.array_equal(lhs, rhs):
                b, c = _first_diff(lhs, rhs)
                raise AxiomViolation("additive associativity", (a, b, c))
        if not np.array_equal(M[self.one], idx):
            b = _first_diff(M[self.one], idx)[0]
            raise AxiomViolation("multiplicative identity", (self.one, b))
        if not np.array_equal(M[:, self.one], idx):
            b = _first_diff(M[:, self.one], idx)[0]
            raise AxiomViolation("multiplicative identity", (b, self.one))
        for a in range(n):
            lhs = M[M[a]]          # (a*b)*c
            rhs = M[a][M]          # a*(b*c)
            if not np.array_equal(lhs, rhs):
                b, c = _first_diff(lhs, rhs)
                raise AxiomViolation("multiplicative associativity", (a, b, c))
        for a in range(n):
            row = M[a]
            lhs = row[A]                       # a*(b+c)
            rhs = A[np.ix_(row, row)]          # a*b + a*c
            if not np.array_equal(lhs, rhs):
                b, c = _first_diff(lhs, rhs)
                raise AxiomViolation("left distributivity", (a, b, c))
            col = M[:, a]
            lhs = col[A]                       # (b+c)*a
            rhs = A[np.ix_(col, col)]          # b*a + c*a
            if not np.array_equal(lhs, rhs):
                b, c = _first_diff(lhs, rhs)
                raise AxiomViolation("right distributivity", (b, c, a))

    # -- element arithmetic ------------------------------------------------

    def add(self, x: int, y: int) -> int:
        return int(self.add_table[x, y])

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def neg(self, x: int) -> int:
        return int(self.neg_table[x])

    def sub(self, x: int, y: int) -> int:
        return int(self.add_table[x, self.neg_table[y]])

    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no element labelled {label!r}") from None

    def __repr__(self) -> str:
        return f"FiniteRing(order={self.order})"


def build_ring(labels, add_table, mul_table, zero: int, one: int) -> FiniteRing:
    """Validate and build a FiniteRing from raw tables."""
    return FiniteRing(labels, add_table, mul_table, zero, one)


def _check_perm(ring: FiniteRing, perm, exc) -> np.ndarray:
    arr = np.asarray(perm, dtype=np.int32)
    if arr.shape != (ring.order,):
        raise ShapeError(f"permutation must have length {ring.order}")
    if sorted(int(v) for v in arr) != list(range(ring.order)):
        raise exc("permutation", tuple(int(v) for v in arr))
    return arr


class Involution:
    """An anti-automorphism of a FiniteRing whose square is the identity."""

    def __init__(self, ring: FiniteRing, perm):
        f = _check_perm(ring, perm, NotInvolution)
        n = ring.order
        idx = np.arange(n, dtype=np.int32)
        A, M = ring.add_table, ring.mul_table
        if not np.array_equal(f[f], idx):
            x = _first_diff(f[f], idx)[0]
            raise NotInvolution("square is identity", (x,))
        if int(f[ring.one]) != ring.one:
            raise NotInvolution("fixes one", (ring.one,))
        lhs = f[A]
        rhs = A[np.ix_(f, f)]
        if not np.array_equal(lhs, rhs):
            raise NotInvolution("additivity", _first_diff(lhs, rhs))
        lhs = f[M]
        rhs = M[np.ix_(f, f)].T          # (xy)* = y* x*
        if not np.array_equal(lhs, rhs):
            raise NotInvolution("anti-multiplicativity", _first_diff(lhs, rhs))
        f.setflags(write=False)
        self.ring = ring
        self.map = f

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def as_tuple(self) -> tuple:
        return tuple(int(v) for v in self.map)

    def __repr__(self) -> str:
        return f"Involution({self.as_tuple()})"


class Automorphism:
    """A unital ring automorphism, stored as an element permutation."""

    def __init__(self, ring: FiniteRing, perm):
        f = _check_perm(ring, perm, NotAutomorphism)
        A, M = ring.add_table, ring.mul_table
        if int(f[ring.one]) != ring.one:
            raise NotAutomorphism("fixes one", (ring.one,))
        lhs = f[A]
        rhs = A[np.ix_(f, f)]
        if not np.array_equal(lhs, rhs):
            raise NotAutomorphism("additivity", _first_diff(lhs, rhs))
        lhs = f[M]
        rhs = M[np.ix_(f, f)]
        if not np.array_equal(lhs, rhs):
            raise NotAutomorphism("multiplicativity", _first_diff(lhs, rhs))
        f.setflags(write=False)
        self.ring = ring
        self.map = f

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def as_tuple(self) -> tuple:
        return tuple(int(v) for v in self.map)


def build_involution(R: FiniteRing, perm) -> Involution:
    return Involution(R, perm)


def build_automorphism(R: FiniteRing, perm) -> Automorphism:
    return Automorphism(R, perm)


class StarRing:
    """A FiniteRing paired with a validated involution."""

    def __init__(self, ring: FiniteRing, star: Involution):
        if star.ring is not ring:
            star = Involution(ring, star.map)
        self.ring = ring
        self.star = star

    @property
    def order(self) -> int:
        return self.ring.order

    def __repr__(self) -> str:
        return f"StarRing(order={self.ring.order})"


def _additive_generator_plan(R: FiniteRing):
    """Greedy additive generators plus a build plan for group homomorphisms.

    Returns (gens, steps) where each step (target, source, gi) records that
    target = source + gens[gi] with source constructed earlier.
    """
    A = R.add_table
    in_span = {R.zero}
    span = [R.zero]
    gens: list[int] = []
    steps: list[tuple[int, int, int]] = []
    for x in range(R.order):
        if x in in_span:
            continue
        gi = len(gens)
        gens.append(x)
        pos = 0
        while pos < len(span):
            s = span[pos]
            pos += 1
            t = int(A[s, x])
            if t not in in_span:
                in_span.add(t)
                span.append(t)
                steps.append((t, s, gi))
    return gens, steps


def _additive_order(R: FiniteRing, x: int) -> int:
    k, acc = 1, x
    while acc != R.zero:
        acc = R.add(acc, x)
        k += 1
    return k


def enumerate_involutions(R: FiniteRing, bound: int | None = None) -> list[Involution]:
    """All involutions of R, in lexicographic order of their permutations.

    Searches additive-group automorphisms built from generator images, then
    filters by anti-multiplicativity, order two and fixing one.
    """
    limit = DEFAULT_MAX_INVOLUTION_ORDER if bound is None else bound
    if R.order > limit:
        raise OrderBoundExceeded(
            f"order {R.order} exceeds involution enumeration bound {limit}"
        )
    A, M, n = R.add_table, R.mul_table, R.order
    idx = np.arange(n, dtype=np.int32)
    gens, steps = _additive_generator_plan(R)
    orders = [_additive_order(R, x) for x in range(n)]
    candidates = [
        [y for y in range(n) if orders[y] == orders[g]] for g in gens
    ]
    found = set()
    for images in itertools.product(*candidates):
        f = np.full(n, -1, dtype=np.int32)
        f[R.zero] = R.zero
        for t, s, gi in steps:
            f[t] = A[f[s], images[gi]]
        if (f < 0).any():
            continue
        if len(set(int(v) for v in f)) != n:
            continue
        if int(f[R.one]) != R.one or not np.array_equal(f[f], idx):
            continue
        if not np.array_equal(f[A], A[np.ix_(f, f)]):
            continue
        if not np.array_equal(f[M], M[np.ix_(f, f)].T):
            continue
        found.add(tuple(int(v) for v in f))
    return [Involution(R, perm) for perm in sorted(found)]


def inverse(R: FiniteRing, x: int):
    """The unique two-sided inverse of x, or None."""
    if not 0 <= x < R.order:
        raise ShapeError(f"element index {x} out of range")
    row = R.mul_table[x]
    for y in np.flatnonzero(row == R.one):
        if int(R.mul_table[y, x]) == R.one:
            return int(y)
    return None


def quotient_ring(R: FiniteRing, members) -> tuple[FiniteRing, np.ndarray]:
    """Coset ring of R by a (pre-validated) two-sided ideal.

    Cosets are labelled by their smallest-index representative.  Returns the
    quotient plus the index projection map R -> R/I.
    """
    mem = sorted(set(int(m) for m in members))
    A, M = R.add_table, R.mul_table
    reps = A[:, mem].min(axis=1)
    classes = sorted(set(int(r) for r in reps))
    new_index = {r: i for i, r in enumerate(classes)}
    proj = np.array([new_index[int(reps[x])] for x in range(R.order)], dtype=np.int32)
    k = len(classes)
    add_q = np.empty((k, k), dtype=np.int32)
    mul_q = np.empty((k, k), dtype=np.int32)
    for i, r in enumerate(classes):
        add_q[i] = proj[A[r, classes]]
        mul_q[i] = proj[M[r, classes]]
    labels = [f"[{R.labels[r]}]" for r in classes]
    Q = FiniteRing(labels, add_q, mul_q, int(proj[R.zero]), int(proj[R.one]))
    proj.setflags(write=False)
    return Q, proj
