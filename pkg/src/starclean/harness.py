"""Executable versions of the numbered statements, verified over a corpus.

Each statement id maps to a fixed evaluation procedure returning the truth
values of its clauses; a result is consistent when the claimed logical
relation (usually an equivalence) holds on the given *-ring.  Statements
with hypotheses report "hypothesis not met" as vacuously consistent.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cleanness import Variant, holds
from .constructors import (
    FiniteGroup,
    is_2_group,
    make_cyclic_group,
    make_gaussian,
    make_group_ring,
    make_quotient,
    make_truncated_series,
)
from .core import FiniteRing, StarRing, quotient_ring
from .errors import NotStarIdeal, StarCleanError
from .structure import (
    Ideal,
    as_star_ideal,
    center,
    classify_flags,
    idempotents,
    jacobson_radical,
    lifts_idempotents,
    maximal_ideals,
    one_minus_unit_set,
    prime_radical,
    semisimple_quotient,
    units,
)

STATEMENT_IDS = (
    "P2.1", "C2.3", "P2.4", "C2.5", "P2.6", "C2.7", "C2.8", "C2.9",
    "L3.1", "T3.2", "T3.5", "C3.6", "C3.7", "T3.8", "C3.9", "C3.10",
    "L4.1", "P4.2", "P4.3", "P4.4",
)

DEFAULT_EXTENSION_LIMIT = 512


@dataclass(frozen=True)
class Aux:
    """Statement-specific inputs; everything has a sensible default."""

    ideal: Ideal | None = None                   # for T3.8 (default J(R))
    group: FiniteGroup | None = None             # for P4.4 (default C2)
    series_orders: tuple = (2, 3)                # for P4.3
    extension_limit: int = DEFAULT_EXTENSION_LIMIT


@dataclass(frozen=True)
class VerificationResult:
    statement: str
    ring_label: str
    clauses: tuple                               # (clause name, bool) pairs
    consistent: bool
    vacuous: bool = False
    note: str | None = None
    witness: str | None = None


@dataclass(frozen=True)
class CorpusReport:
    results: tuple

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def inconsistent(self) -> tuple:
        return tuple(r for r in self.results if not r.consistent)

    @property
    def vacuous_count(self) -> int:
        return sum(1 for r in self.results if r.vacuous)


# cached derived constructions so statements within one run share them
@lru_cache(maxsize=None)
def _gaussian(S: StarRing) -> StarRing:
    return make_gaussian(S)


@lru_cache(maxsize=None)
def _series(S: StarRing, n: int) -> StarRing:
    return make_truncated_series(S, n)


@lru_cache(maxsize=None)
def _group_ring(S: StarRing, G: FiniteGroup) -> StarRing:
    return make_group_ring(S, G)


@lru_cache(maxsize=None)
def _mod_radical(S: StarRing) -> StarRing:
    jac = as_star_ideal(S, jacobson_radical(S.ring))
    return make_quotient(S, jac)


@lru_cache(maxsize=None)
def _mod_prime(S: StarRing) -> StarRing:
    return make_quotient(S, as_star_ideal(S, prime_radical(S.ring)))


@lru_cache(maxsize=None)
def _default_group() -> FiniteGroup:
    return make_cyclic_group(2)


def _sjsc(S: StarRing) -> bool:
    return holds(S, Variant.STRONGLY_J_STAR_CLEAN)


def _boolean(R: FiniteRing) -> bool:
    return len(idempotents(R)) == R.order


def _one_sum_two_units(R: FiniteRing) -> bool:
    u = sorted(units(R))
    return any(R.add(a, b) == R.one for a in u for b in u)


def unit_order(R: FiniteRing, u: int) -> int:
    """Multiplicative order of a unit."""
    x, k = u, 1
    while x != R.one:
        x = R.mul(x, u)
        k += 1
        if k > R.order:
            raise StarCleanError(f"element {u} has no finite multiplicative order")
    return k


def _units_two_power_torsion(R: FiniteRing) -> bool:
    """Every unit has order a power of two.

    This is the strength of the torsion hypothesis the squaring argument in
    the characteristic-two proof actually consumes; literal torsion (finite
    order) is automatic in a finite ring and too weak for the equivalence.
    """
    for u in units(R):
        k = unit_order(R, u)
        while k % 2 == 0:
            k //= 2
        if k != 1:
            return False
    return True


def _star_minus_in_radical(S: StarRing) -> bool:
    jac = set(jacobson_radical(S.ring).members)
    return all(S.ring.sub(a, S.star(a)) in jac for a in S.ring.elements())


def _star_plus_in_radical(S: StarRing) -> bool:
    jac = set(jacobson_radical(S.ring).members)
    return all(S.ring.add(a, S.star(a)) in jac for a in S.ring.elements())


def _stmt_p21(S, aux):
    c2 = holds(S, Variant.STRONGLY_J_CLEAN) and holds(S, Variant.STRONGLY_STAR_CLEAN)
    c3 = classify_flags(S).abelian and holds(S, Variant.J_STAR_CLEAN)
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("strongly J-clean and strongly *-clean", c2),
        ("abelian and J-*-clean", c3),
    ]


def _stmt_c23(S, aux):
    c = center(S)
    rhs = holds(c, Variant.J_STAR_CLEAN) and classify_flags(S).center_plus_radical_is_all
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("C(R) J-*-clean and R = C(R)+J(R)", rhs),
    ]


def _stmt_p24(S, aux):
    R = S.ring
    quotients_z2 = all(
        quotient_ring(R, M.members)[0].order == 2 for M in maximal_ideals(R)
    )
    rhs = holds(S, Variant.STRONGLY_STAR_CLEAN) and quotients_z2
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("strongly *-clean and R/M = Z2 for all maximal M", rhs),
    ]


def _stmt_c25(S, aux):
    R = S.ring
    no_sum = all(
        not _one_sum_two_units(quotient_ring(R, M.members)[0])
        for M in maximal_ideals(R)
    )
    rhs = holds(S, Variant.STRONGLY_STAR_CLEAN) and no_sum
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("strongly *-clean and 1 never a sum of two units in R/M", rhs),
    ]


def _stmt_p26(S, aux):
    Q, _ = semisimple_quotient(S.ring)
    rhs = _boolean(Q) and holds(S, Variant.STRONGLY_STAR_CLEAN)
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("R/J(R) Boolean and strongly *-clean", rhs),
    ]


def _stmt_c27(S, aux):
    R = S.ring
    u = sorted(units(R))
    sums = {R.add(a, b) for a in u for b in u}
    no_idem_sum = all(e not in sums for e in idempotents(R) if e != R.zero)
    rhs = holds(S, Variant.STRONGLY_STAR_CLEAN) and no_idem_sum
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("strongly *-clean and nonzero idempotents never unit sums", rhs),
    ]


def _stmt_c28(S, aux):
    if not classify_flags(S).local:
        return None
    Q, _ = semisimple_quotient(S.ring)
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("strongly J-clean", holds(S, Variant.STRONGLY_J_CLEAN)),
        ("uniquely clean", holds(S, Variant.UNIQUELY_CLEAN)),
        ("R/J(R) = Z2", Q.order == 2),
        ("1 not a sum of two units", not _one_sum_two_units(S.ring)),
    ]


def _stmt_c29(S, aux):
    if not classify_flags(S).star_regular:
        return None
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("Boolean", _boolean(S.ring)),
    ]


def _stmt_l31(S, aux):
    uc = holds(S, Variant.UNIQUELY_CLEAN)
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("uniquely clean and a-a* in J(R) for all a", uc and _star_minus_in_radical(S)),
        ("uniquely clean and a+a* in J(R) for all a", uc and _star_plus_in_radical(S)),
    ]


def _stmt_t32(S, aux):
    return [
        ("strongly J-*-clean", _sjsc(S)),
        (
            "uniquely clean and strongly *-clean",
            holds(S, Variant.UNIQUELY_CLEAN) and holds(S, Variant.STRONGLY_STAR_CLEAN),
        ),
        ("uniquely strongly *-clean", holds(S, Variant.UNIQUELY_STRONGLY_STAR_CLEAN)),
        ("uniquely J-*-clean", holds(S, Variant.UNIQUELY_J_STAR_CLEAN)),
        ("unique idempotent with unit difference and star constraints",
         holds(S, Variant.COND_T32_5)),
    ]


def _stmt_t35(S, aux):
    R = S.ring
    same_set = set(jacobson_radical(R).members) == set(one_minus_unit_set(R))
    rhs = holds(S, Variant.STRONGLY_STAR_CLEAN) and same_set
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("strongly *-clean and J(R) = {x | 1-x a unit}", rhs),
    ]


def _stmt_c36(S, aux):
    R = S.ring
    u = units(R)
    criterion = frozenset(
        x for x in R.elements() if R.add(R.one, R.mul(x, S.star(x))) in u
    )
    rhs = (
        holds(S, Variant.STRONGLY_STAR_CLEAN)
        and _star_plus_in_radical(S)
        and set(jacobson_radical(R).members) == set(criterion)
    )
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("strongly *-clean, a+a* radical, J(R) = {x | 1+xx* a unit}", rhs),
    ]


def _stmt_c37(S, aux):
    R = S.ring
    Q, _ = semisimple_quotient(R)
    two = R.add(R.one, R.one)
    rhs = (
        holds(S, Variant.STRONGLY_STAR_CLEAN)
        and two in set(jacobson_radical(R).members)
        and _units_two_power_torsion(Q)
    )
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("strongly *-clean, 2 in J(R), U(R/J(R)) 2-power torsion", rhs),
    ]


def _stmt_t38(S, aux):
    R = S.ring
    ideal = aux.ideal if aux.ideal is not None else jacobson_radical(R)
    jac = set(jacobson_radical(R).members)
    if not set(ideal.members) <= jac:
        raise StarCleanError("T3.8 requires an ideal contained in J(R)")
    star_ideal = as_star_ideal(S, ideal)
    if not star_ideal.star_closed:
        raise NotStarIdeal(next(x for x in ideal.members if S.star(x) not in set(ideal.members)))
    quotient = make_quotient(S, star_ideal)
    rhs = (
        _sjsc(quotient)
        and classify_flags(S).abelian
        and lifts_idempotents(R, ideal)
    )
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("R/I strongly J-*-clean, abelian, idempotents lift mod I", rhs),
    ]


def _stmt_c39(S, aux):
    quotient = _mod_radical(S)
    rhs = (
        classify_flags(quotient).star_boolean
        and classify_flags(S).abelian
        and lifts_idempotents(S.ring, jacobson_radical(S.ring))
    )
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("R/J(R) *-Boolean, abelian, idempotents lift mod J(R)", rhs),
    ]


def _stmt_c310(S, aux):
    quotient = _mod_prime(S)
    rhs = classify_flags(S).abelian and _sjsc(quotient)
    return [
        ("strongly J-*-clean", _sjsc(S)),
        ("abelian and R/P(R) strongly J-*-clean", rhs),
    ]


def _too_big(order: int, aux: Aux) -> bool:
    return order > aux.extension_limit


def _stmt_l41(S, aux):
    R = S.ring
    two = R.add(R.one, R.one)
    if two not in set(jacobson_radical(R).members):
        return None
    if _too_big(R.order ** 2, aux):
        return "skipped"
    ext = _gaussian(S)
    m = R.order
    u = units(R)
    predicted = frozenset(a * m + b for a in range(m) for b in range(m) if R.add(a, b) in u)
    equal = set(units(ext.ring)) == set(predicted)
    return [("U(R[i]) = {a+bi | a+b a unit}", equal)]


def _stmt_p42(S, aux):
    if _too_big(S.order ** 2, aux):
        return "skipped"
    ext = _gaussian(S)
    return [
        ("R[i] strongly J-*-clean", _sjsc(ext)),
        ("R strongly J-*-clean", _sjsc(S)),
    ]


def _stmt_p43(S, aux):
    clauses = [("R strongly J-*-clean", _sjsc(S))]
    evaluated = 0
    for n in aux.series_orders:
        if n < 2 or _too_big(S.order ** n, aux):
            continue
        ext = _series(S, n)
        clauses.append((f"R[[x]]/(x^{n}) strongly J-*-clean", _sjsc(ext)))
        evaluated += 1
    if evaluated == 0:
        return "skipped"
    return clauses


def _stmt_p44(S, aux):
    G = aux.group if aux.group is not None else _default_group()
    if _too_big(S.order ** G.order, aux):
        return "skipped"
    ext = _group_ring(S, G)
    return [
        ("RG strongly J-*-clean", _sjsc(ext)),
        ("R strongly J-*-clean and G a 2-group", _sjsc(S) and is_2_group(G)),
    ]


_STATEMENTS = {
    "P2.1": _stmt_p21,
    "C2.3": _stmt_c23,
    "P2.4": _stmt_p24,
    "C2.5": _stmt_c25,
    "P2.6": _stmt_p26,
    "C2.7": _stmt_c27,
    "C2.8": _stmt_c28,
    "C2.9": _stmt_c29,
    "L3.1": _stmt_l31,
    "T3.2": _stmt_t32,
    "T3.5": _stmt_t35,
    "C3.6": _stmt_c36,
    "C3.7": _stmt_c37,
    "T3.8": _stmt_t38,
    "C3.9": _stmt_c39,
    "C3.10": _stmt_c310,
    "L4.1": _stmt_l41,
    "P4.2": _stmt_p42,
    "P4.3": _stmt_p43,
    "P4.4": _stmt_p44,
}

_HYPOTHESIS_NOTES = {
    "C2.8": "ring is not local",
    "C2.9": "ring is not *-regular",
    "L4.1": "2 is not in J(R)",
}


def verify_statement(S: StarRing, statement: str, aux: Aux | None = None,
                     name: str = "") -> VerificationResult:
    """Evaluate one numbered statement on one *-ring."""
    if statement not in _STATEMENTS:
        raise KeyError(f"unknown statement id {statement!r}")
    aux = aux or Aux()
    outcome = _STATEMENTS[statement](S, aux)
    if outcome is None:
        return VerificationResult(
            statement, name, (), consistent=True, vacuous=True,
            note=f"hypothesis not met, vacuously consistent ({_HYPOTHESIS_NOTES[statement]})",
        )
    if outcome == "skipped":
        return VerificationResult(
            statement, name, (), consistent=True, vacuous=True,
            note="skipped: extension order exceeds the configured limit",
        )
    clauses = tuple(outcome)
    values = {value for _, value in clauses}
    consistent = len(values) == 1
    witness = None
    if not consistent:
        witness = "; ".join(f"{text}={value}" for text, value in clauses)
    return VerificationResult(statement, name, clauses, consistent, witness=witness)


def run_corpus(entries) -> CorpusReport:
    """Verify every statement on every (name, StarRing, Aux) corpus entry."""
    results = []
    for name, S, aux in sorted(entries, key=lambda entry: entry[0]):
        for statement in STATEMENT_IDS:
            results.append(verify_statement(S, statement, aux, name=name))
    return CorpusReport(tuple(results))
