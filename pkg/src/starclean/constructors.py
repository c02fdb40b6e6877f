"""Ring family constructors with their induced involutions.

Modular rings, products, matrix rings, polynomial quotients, twisted
trivial extensions, group rings, Gaussian extensions, truncated power
series and quotients by *-ideals.  Every output passes the full StarRing
validation; composite element tables are built with vectorized index
arithmetic over the component tables.
"""
from __future__ import annotations

import math

import numpy as np

from .core import (
    Automorphism,
    FiniteRing,
    Involution,
    StarRing,
    build_automorphism,
    max_order,
    quotient_ring,
)
from .errors import (
    AxiomViolation,
    NotAutomorphism,
    NotStarIdeal,
    OrderBoundExceeded,
    ShapeError,
    SpecError,
    SigmaNotInvolutiveAutomorphism,
    StarUndefined,
)
from .structure import Ideal, check_ideal


# ---------------------------------------------------------------------------
# finite groups

class FiniteGroup:
    """A finite group given by a Cayley table on indices 0..order-1."""

    def __init__(self, labels, cayley, identity: int):
        labels = tuple(str(lab) for lab in labels)
        n = len(labels)
        if n == 0 or len(set(labels)) != n:
            raise ShapeError("group labels must be nonempty and unique")
        T = np.asarray(cayley, dtype=np.int32)
        if T.shape != (n, n) or (n and (T.min() < 0 or T.max() >= n)):
            raise ShapeError("malformed Cayley table")
        idx = np.arange(n, dtype=np.int32)
        if not np.array_equal(T[identity], idx) or not np.array_equal(T[:, identity], idx):
            raise AxiomViolation("group identity", (identity,))
        for a in range(n):
            if not np.array_equal(T[T[a]], T[a][T]):
                raise AxiomViolation("group associativity", (a,))
        hits = (T == identity).sum(axis=1)
        if not (hits >= 1).all():
            raise AxiomViolation("group inverse", (int(np.argwhere(hits < 1)[0][0]),))
        inv = np.argmax(T == identity, axis=1).astype(np.int32)
        for a in range(n):
            if int(T[inv[a], a]) != identity:
                raise AxiomViolation("group inverse", (a,))
        T.setflags(write=False)
        inv.setflags(write=False)
        self.labels = labels
        self.order = n
        self.cayley = T
        self.identity = int(identity)
        self.inverse_table = inv

    def op(self, x: int, y: int) -> int:
        return int(self.cayley[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse_table[x])

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def make_cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise SpecError("cyclic group order must be >= 1")
    labels = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    cayley = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(labels, cayley, 0)


def make_group_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n, m = G.order, H.order
    labels = [f"({G.labels[i]},{H.labels[j]})" for i in range(n) for j in range(m)]
    idx = np.arange(n * m)
    X1, X2 = np.divmod(idx[:, None], m)
    Y1, Y2 = np.divmod(idx[None, :], m)
    cayley = G.cayley[X1, Y1] * m + H.cayley[X2, Y2]
    return FiniteGroup(labels, cayley, G.identity * m + H.identity)


def is_2_group(G: FiniteGroup) -> bool:
    """For a finite group: every element order is a power of 2 iff |G| is."""
    n = G.order
    while n % 2 == 0:
        n //= 2
    return n == 1


# ---------------------------------------------------------------------------
# shared index helpers

def _guard(order: int) -> None:
    if order > max_order():
        raise OrderBoundExceeded(f"resulting order {order} exceeds guard {max_order()}")


def _digits(n: int, base: int, width: int) -> list:
    """Row-major digit arrays: index = sum digits[t] * base**(width-1-t)."""
    idx = np.arange(n)
    out = []
    for t in range(width):
        p = base ** (width - 1 - t)
        out.append((idx // p) % base)
    return out


def _recompose(components: list, base: int):
    acc = components[0]
    for comp in components[1:]:
        acc = acc * base + comp
    return acc


def _identity_star(ring: FiniteRing) -> Involution:
    return Involution(ring, np.arange(ring.order))


def make_modular(n: int) -> StarRing:
    """Z_n with the identity involution."""
    if n < 1:
        raise SpecError("modulus must be >= 1")
    _guard(n)
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    ring = FiniteRing([str(i) for i in range(n)], add, mul, 0, 1 % n)
    return StarRing(ring, _identity_star(ring))


def make_product(left: StarRing, right: StarRing, swap_star: bool = False) -> StarRing:
    """Direct product with componentwise star, or the coordinate-swap star."""
    R1, R2 = left.ring, right.ring
    n1, n2 = R1.order, R2.order
    _guard(n1 * n2)
    idx = np.arange(n1 * n2)
    X1, X2 = np.divmod(idx[:, None], n2)
    Y1, Y2 = np.divmod(idx[None, :], n2)
    add = R1.add_table[X1, Y1] * n2 + R2.add_table[X2, Y2]
    mul = R1.mul_table[X1, Y1] * n2 + R2.mul_table[X2, Y2]
    labels = [f"({R1.labels[i]},{R2.labels[j]})" for i in range(n1) for j in range(n2)]
    ring = FiniteRing(labels, add, mul, R1.zero * n2 + R2.zero, R1.one * n2 + R2.one)
    a, b = np.divmod(idx, n2)
    if swap_star:
        if n1 != n2:
            raise StarUndefined("swap star needs factors of equal order")
        perm = b * n2 + a
    else:
        perm = np.asarray(left.star.map)[a] * n2 + np.asarray(right.star.map)[b]
    return StarRing(ring, Involution(ring, perm))


def make_matrix(S: StarRing, k: int) -> StarRing:
    """M_k over the base, star = entrywise base star then transpose."""
    if k < 1:
        raise SpecError("matrix size must be >= 1")
    R = S.ring
    m = R.order
    w = k * k
    n = m ** w
    _guard(n)
    A, M = R.add_table, R.mul_table
    d = _digits(n, m, w)
    dX = [c[:, None] for c in d]
    dY = [c[None, :] for c in d]
    add = _recompose([A[dX[t], dY[t]] for t in range(w)], m)
    comps = []
    for i in range(k):
        for j in range(k):
            acc = np.full((n, n), R.zero, dtype=np.int64)
            for t in range(k):
                acc = A[acc, M[dX[i * k + t], dY[t * k + j]]]
            comps.append(acc)
    mul = _recompose(comps, m)
    labels = []
    for x in range(n):
        ent = [(x // m ** (w - 1 - t)) % m for t in range(w)]
        rows = ",".join(
            "[" + ",".join(R.labels[ent[i * k + j]] for j in range(k)) + "]"
            for i in range(k)
        )
        labels.append(f"[{rows}]")
    zero = _recompose([np.int64(R.zero)] * w, m)
    one_digits = [R.one if i == j else R.zero for i in range(k) for j in range(k)]
    one = _recompose([np.int64(v) for v in one_digits], m)
    ring = FiniteRing(labels, add, mul, int(zero), int(one))
    star_map = np.asarray(S.star.map)
    dig = np.stack(d)                           # (w, n)
    new = [star_map[dig[j * k + i]] for i in range(k) for j in range(k)]
    perm = _recompose(new, m)
    return StarRing(ring, Involution(ring, perm))


def make_poly_quotient(S: StarRing, modulus) -> StarRing:
    """R[x]/(f) for a monic, star-fixed f; coefficientwise star.

    The modulus is given constant-coefficient first, length deg+1.
    """
    R = S.ring
    coeffs = [int(c) for c in modulus]
    if len(coeffs) < 2:
        raise SpecError("modulus must have degree >= 1")
    if any(not 0 <= c < R.order for c in coeffs):
        raise SpecError("modulus coefficients out of range")
    if coeffs[-1] != R.one:
        raise SpecError("modulus must be monic")
    if any(S.star(c) != c for c in coeffs):
        raise StarUndefined("modulus coefficients must be star-fixed")
    deg = len(coeffs) - 1
    m = R.order
    n = m ** deg
    _guard(n)
    A, M = R.add_table, R.mul_table
    # x^deg = -(c_0 + ... + c_{deg-1} x^{deg-1})
    reduction = [R.neg(coeffs[r]) for r in range(deg)]
    xpow = []
    for t in range(deg):
        vec = [R.zero] * deg
        vec[t] = R.one
        xpow.append(vec)
    for t in range(deg, 2 * deg - 1):
        prev = xpow[t - 1]
        vec = [R.zero] + prev[:-1]
        spill = prev[-1]
        vec = [R.add(vec[r], R.mul(spill, reduction[r])) for r in range(deg)]
        xpow.append(vec)
    d = _digits(n, m, deg)
    dX = [c[:, None] for c in d]
    dY = [c[None, :] for c in d]
    comps = [np.full((n, n), R.zero, dtype=np.int64) for _ in range(deg)]
    for i in range(deg):
        for j in range(deg):
            prod = M[dX[i], dY[j]]
            for r in range(deg):
                c = xpow[i + j][r]
                if c == R.zero:
                    continue
                comps[r] = A[comps[r], M[prod, c]]
    mul = _recompose(comps, m)
    add = _recompose([A[dX[t], dY[t]] for t in range(deg)], m)
    labels = [_poly_label(R, x, m, deg) for x in range(n)]
    zero = sum(R.zero * m ** (deg - 1 - t) for t in range(deg))
    one_digits = [R.one] + [R.zero] * (deg - 1)
    one = sum(one_digits[t] * m ** (deg - 1 - t) for t in range(deg))
    ring = FiniteRing(labels, add, mul, zero, one)
    star_map = np.asarray(S.star.map)
    perm = _recompose([star_map[d[t]] for t in range(deg)], m)
    return StarRing(ring, Involution(ring, perm))


def _poly_label(R: FiniteRing, x: int, m: int, deg: int) -> str:
    terms = []
    for t in range(deg):
        c = (x // m ** (deg - 1 - t)) % m
        if t == 0:
            terms.append(R.labels[c])
        elif t == 1:
            terms.append(f"{R.labels[c]}x")
        else:
            terms.append(f"{R.labels[c]}x^{t}")
    return "+".join(terms)


def make_trivial_extension(R: FiniteRing, sigma: Automorphism) -> StarRing:
    """Pairs (a,b) with (a,b)(c,d) = (ac, ad + b*sigma(c)); star (a,b) -> (a, sigma(b))."""
    if not isinstance(sigma, Automorphism) or sigma.ring is not R:
        raise SigmaNotInvolutiveAutomorphism("sigma must be an automorphism of the base ring")
    s = np.asarray(sigma.map)
    if not np.array_equal(s[s], np.arange(R.order)):
        raise SigmaNotInvolutiveAutomorphism("sigma squared must be the identity")
    m = R.order
    n = m * m
    _guard(n)
    A, M = R.add_table, R.mul_table
    idx = np.arange(n)
    aX, bX = np.divmod(idx[:, None], m)
    cY, dY = np.divmod(idx[None, :], m)
    add = A[aX, cY] * m + A[bX, dY]
    mul = M[aX, cY] * m + A[M[aX, dY], M[bX, s[cY]]]
    labels = [f"({R.labels[a]},{R.labels[b]})" for a in range(m) for b in range(m)]
    ring = FiniteRing(labels, add, mul, R.zero * m + R.zero, R.one * m + R.zero)
    a, b = np.divmod(idx, m)
    perm = a * m + s[b]
    return StarRing(ring, Involution(ring, perm))


def make_group_ring(S: StarRing, G: FiniteGroup) -> StarRing:
    """Group ring RG with convolution product and star sum a_g* g^{-1}."""
    R = S.ring
    m, w = R.order, G.order
    n = m ** w
    _guard(n)
    A, M = R.add_table, R.mul_table
    d = _digits(n, m, w)
    dX = [c[:, None] for c in d]
    dY = [c[None, :] for c in d]
    add = _recompose([A[dX[t], dY[t]] for t in range(w)], m)
    comps = [np.full((n, n), R.zero, dtype=np.int64) for _ in range(w)]
    for h in range(w):
        for k in range(w):
            g = G.op(h, k)
            comps[g] = A[comps[g], M[dX[h], dY[k]]]
    mul = _recompose(comps, m)
    labels = []
    for x in range(n):
        coeff = [(x // m ** (w - 1 - t)) % m for t in range(w)]
        labels.append("+".join(f"{R.labels[coeff[g]]}*{G.labels[g]}" for g in range(w)))
    zero = 0 if R.zero == 0 else sum(R.zero * m ** (w - 1 - t) for t in range(w))
    one_digits = [R.one if g == G.identity else R.zero for g in range(w)]
    one = sum(one_digits[t] * m ** (w - 1 - t) for t in range(w))
    ring = FiniteRing(labels, add, mul, int(zero), int(one))
    star_map = np.asarray(S.star.map)
    dig = np.stack(d)
    perm = _recompose([star_map[dig[G.inv(g)]] for g in range(w)], m)
    return StarRing(ring, Involution(ring, perm))


def make_gaussian(S: StarRing) -> StarRing:
    """R[i] = {a+bi | i^2 = -1} with star a+bi -> a* + b*i."""
    R = S.ring
    m = R.order
    n = m * m
    _guard(n)
    A, M, neg = R.add_table, R.mul_table, R.neg_table
    idx = np.arange(n)
    aX, bX = np.divmod(idx[:, None], m)
    cY, dY = np.divmod(idx[None, :], m)
    add = A[aX, cY] * m + A[bX, dY]
    re = A[M[aX, cY], neg[M[bX, dY]]]       # ac - bd
    im = A[M[aX, dY], M[bX, cY]]            # ad + bc
    mul = re * m + im
    labels = [f"{R.labels[a]}+{R.labels[b]}i" for a in range(m) for b in range(m)]
    ring = FiniteRing(labels, add, mul, R.zero * m + R.zero, R.one * m + R.zero)
    a, b = np.divmod(idx, m)
    star_map = np.asarray(S.star.map)
    perm = star_map[a] * m + star_map[b]
    return StarRing(ring, Involution(ring, perm))


def make_truncated_series(S: StarRing, n_trunc: int) -> StarRing:
    """R[[x]]/(x^n): truncated polynomials with coefficientwise star."""
    if n_trunc < 1:
        raise SpecError("truncation order must be >= 1")
    R = S.ring
    m, w = R.order, n_trunc
    n = m ** w
    _guard(n)
    A, M = R.add_table, R.mul_table
    d = _digits(n, m, w)
    dX = [c[:, None] for c in d]
    dY = [c[None, :] for c in d]
    add = _recompose([A[dX[t], dY[t]] for t in range(w)], m)
    comps = [np.full((n, n), R.zero, dtype=np.int64) for _ in range(w)]
    for i in range(w):
        for j in range(w - i):
            comps[i + j] = A[comps[i + j], M[dX[i], dY[j]]]
    mul = _recompose(comps, m)
    labels = [_poly_label(R, x, m, w) for x in range(n)]
    zero = sum(R.zero * m ** (w - 1 - t) for t in range(w))
    one_digits = [R.one] + [R.zero] * (w - 1)
    one = sum(one_digits[t] * m ** (w - 1 - t) for t in range(w))
    ring = FiniteRing(labels, add, mul, int(zero), int(one))
    star_map = np.asarray(S.star.map)
    perm = _recompose([star_map[d[t]] for t in range(w)], m)
    return StarRing(ring, Involution(ring, perm))


def make_quotient(S: StarRing, I: Ideal) -> StarRing:
    """R/I for a *-ideal I, with the induced involution."""
    R = S.ring
    members = check_ideal(R, I.members)
    mset = set(members)
    for x in members:
        if S.star(x) not in mset:
            raise NotStarIdeal(x)
    Q, proj = quotient_ring(R, members)
    perm = np.empty(Q.order, dtype=np.int32)
    for x in R.elements():
        perm[proj[x]] = proj[S.star(x)]
    return StarRing(Q, Involution(Q, perm))


def generated_ideal(R: FiniteRing, generators) -> Ideal:
    """The two-sided ideal generated by a set of elements."""
    A, M = R.add_table, R.mul_table
    members = {R.zero}
    members.update(int(g) for g in generators)
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
    return Ideal(tuple(sorted(members)))


# ---------------------------------------------------------------------------
# declarative RingSpec dispatcher

_CANONICAL_STARS = {
    "matrix": "transpose_star",
    "poly_quotient": "coefficientwise",
    "truncated_series": "coefficientwise",
    "gaussian": "coefficientwise",
    "group_ring": "group_inverse_star",
}

MAX_SPEC_DEPTH = 8


def construct_group(spec) -> FiniteGroup:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("group spec must be an object with a 'kind'")
    kind = spec["kind"]
    if kind == "cyclic":
        if not isinstance(spec.get("n"), int):
            raise SpecError("cyclic group needs integer 'n'")
        return make_cyclic_group(spec["n"])
    if kind == "product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise SpecError("group product needs >= 2 factors")
        groups = [construct_group(f) for f in factors]
        out = groups[0]
        for g in groups[1:]:
            out = make_group_product(out, g)
        return out
    raise SpecError(f"unknown group constructor {kind!r}")


def construct(spec, _depth: int = 0) -> StarRing:
    """Build a StarRing from a declarative RingSpec tree."""
    if _depth > MAX_SPEC_DEPTH:
        raise SpecError(f"spec nesting deeper than {MAX_SPEC_DEPTH}")
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("ring spec must be an object with a 'kind'")
    kind = spec["kind"]
    descriptor = spec.get("involution")
    if kind == "literal_tables" and descriptor is not None:
        # apply the override directly: the default identity star may not
        # be an involution of noncommutative literal tables
        return _apply_involution(_literal_ring(spec), descriptor, kind, spec)
    built = _construct_node(spec, kind, _depth)
    if descriptor is None:
        return built
    return _apply_involution(built, descriptor, kind, spec)


def _construct_node(spec, kind, depth) -> StarRing:
    def sub(key="base"):
        if key not in spec:
            raise SpecError(f"{kind} spec needs a {key!r} entry")
        return construct(spec[key], depth + 1)

    if kind == "modular":
        if not isinstance(spec.get("n"), int):
            raise SpecError("modular spec needs integer 'n'")
        return make_modular(spec["n"])
    if kind == "literal_tables":
        return StarRing(ring := _literal_ring(spec), _identity_star(ring))
    if kind == "product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise SpecError("product spec needs >= 2 factors")
        parts = [construct(f, depth + 1) for f in factors]
        out = parts[0]
        for p in parts[1:]:
            out = make_product(out, p)
        return out
    if kind == "matrix":
        if not isinstance(spec.get("k"), int):
            raise SpecError("matrix spec needs integer 'k'")
        return make_matrix(sub(), spec["k"])
    if kind == "poly_quotient":
        base = sub()
        return make_poly_quotient(base, _resolve_elements(base.ring, spec.get("modulus"), "modulus"))
    if kind == "trivial_extension":
        base = sub()
        sigma = _resolve_sigma(base, spec.get("sigma", "identity"), spec)
        return make_trivial_extension(base.ring, sigma)
    if kind == "group_ring":
        if "group" not in spec:
            raise SpecError("group_ring spec needs a 'group'")
        return make_group_ring(sub(), construct_group(spec["group"]))
    if kind == "gaussian":
        return make_gaussian(sub())
    if kind == "truncated_series":
        if not isinstance(spec.get("n"), int):
            raise SpecError("truncated_series spec needs integer 'n'")
        return make_truncated_series(sub(), spec["n"])
    if kind == "quotient":
        base = sub()
        gens = _resolve_elements(base.ring, spec.get("ideal_generators"), "ideal_generators")
        return make_quotient(base, generated_ideal(base.ring, gens))
    raise SpecError(f"unknown ring constructor {kind!r}")


def _literal_ring(spec) -> FiniteRing:
    for key in ("labels", "add", "mul", "zero", "one"):
        if key not in spec:
            raise SpecError(f"literal_tables spec needs {key!r}")
    return FiniteRing(spec["labels"], spec["add"], spec["mul"], spec["zero"], spec["one"])


def _resolve_elements(ring: FiniteRing, entries, what) -> list:
    if not isinstance(entries, list) or not entries:
        raise SpecError(f"{what} must be a nonempty list")
    out = []
    for entry in entries:
        if isinstance(entry, bool):
            raise SpecError(f"{what} entries must be labels or indices")
        if isinstance(entry, int):
            if not 0 <= entry < ring.order:
                raise SpecError(f"{what} index {entry} out of range")
            out.append(entry)
        elif isinstance(entry, str):
            try:
                out.append(ring.index(entry))
            except KeyError:
                raise SpecError(f"{what} label {entry!r} not found") from None
        else:
            raise SpecError(f"{what} entries must be labels or indices")
    return out


def _swap_permutation(spec, order: int):
    factors = spec.get("factors") if isinstance(spec, dict) else None
    if spec.get("kind") != "product" or not isinstance(factors, list) or len(factors) != 2:
        raise SpecError("swap needs a product of exactly two factors")
    half = math.isqrt(order)
    if half * half != order:
        raise SpecError("swap needs two factors of equal order")
    idx = np.arange(order)
    a, b = np.divmod(idx, half)
    return b * half + a


def _resolve_sigma(base: StarRing, descriptor, spec) -> Automorphism:
    R = base.ring
    if descriptor == "identity":
        perm = np.arange(R.order)
    elif descriptor == "swap":
        perm = _swap_permutation(spec.get("base", {}), R.order)
    elif isinstance(descriptor, list):
        perm = descriptor
    else:
        raise SpecError(f"unknown sigma descriptor {descriptor!r}")
    try:
        return build_automorphism(R, perm)
    except NotAutomorphism as exc:
        raise SigmaNotInvolutiveAutomorphism(str(exc)) from exc


def _apply_involution(built, descriptor, kind, spec) -> StarRing:
    # `built` is a StarRing carrying its canonical star, or a bare
    # FiniteRing when no canonical star exists (explicit literal tables)
    ring = built.ring if isinstance(built, StarRing) else built
    if isinstance(built, FiniteRing) and descriptor == "canonical":
        descriptor = "identity"
    if isinstance(descriptor, dict):
        if descriptor.get("kind") == "permutation":
            return StarRing(ring, Involution(ring, descriptor.get("map")))
        raise SpecError(f"unknown involution descriptor {descriptor!r}")
    if isinstance(descriptor, list):
        return StarRing(ring, Involution(ring, descriptor))
    if descriptor == "identity":
        return StarRing(ring, _identity_star(ring))
    if descriptor == "swap":
        if kind != "product":
            raise SpecError("swap involution only applies to product constructions")
        return StarRing(ring, Involution(ring, _swap_permutation(spec, ring.order)))
    if descriptor in ("transpose_star", "coefficientwise", "group_inverse_star"):
        expected = _CANONICAL_STARS.get(kind)
        if descriptor != expected:
            raise SpecError(
                f"involution {descriptor!r} does not apply to a {kind} construction"
            )
        return built
    if descriptor == "canonical":
        return built
    raise SpecError(f"unknown involution descriptor {descriptor!r}")
