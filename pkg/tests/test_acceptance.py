"""Acceptance suite: one test per criterion, each printing a pass/fail line.

All checks are exact (boolean or set equality); the timed criteria assert
their wall-clock budgets.
"""
import json
import shutil
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import pytest

from starclean import (
    Aux,
    Variant,
    decide,
    enumerate_involutions,
    holds,
    jacobson_radical,
    make_gaussian,
    prime_radical,
    projectionize,
    units,
    verify_statement,
    witnesses,
)
from starclean.cleanness import _PROFILES
from starclean.core import StarRing
from starclean.structure import classify_flags, idempotents, projections


def _report(number: int, description: str, ok: bool) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {number}: {description}")
    assert ok, f"criterion {number} failed: {description}"


def _cli(*args):
    exe = shutil.which("starclean")
    cmd = [exe, *args] if exe else [sys.executable, "-m", "starclean.cli", *args]
    return subprocess.run(cmd, capture_output=True, text=True)


def test_criterion_01_example_reproduction(corpus):
    start = time.perf_counter()
    ok = True

    t2, _ = corpus["t2_example"]
    ok &= holds(t2, Variant.J_STAR_CLEAN) is True
    ok &= holds(t2, Variant.STRONGLY_J_STAR_CLEAN) is False
    jac_labels = {t2.ring.labels[x] for x in jacobson_radical(t2.ring).members}
    ok &= jac_labels == {
        "((0,0),(0,0))", "((0,0),(0,1))", "((0,0),(1,0))", "((0,0),(1,1))"
    }

    ex34, _ = corpus["ex34"]
    flags = classify_flags(ex34)
    ok &= flags.boolean_ring is True
    ok &= flags.star_boolean is False
    ok &= decide(ex34, Variant.STAR_CLEAN).holds is False

    tri, _ = corpus["t2z2_triangular"]
    ok &= holds(tri, Variant.STRONGLY_J_CLEAN) is True
    for star in enumerate_involutions(tri.ring):
        ok &= holds(StarRing(tri.ring, star), Variant.STRONGLY_J_STAR_CLEAN) is False

    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    _report(1, f"example reproduction exact, {elapsed:.2f}s < 5s", ok)


def test_criterion_02_statement_suite(corpus_dir):
    start = time.perf_counter()
    proc = _cli("verify", str(corpus_dir))
    elapsed = time.perf_counter() - start
    ok = proc.returncode == 0
    ok &= "0 inconsistent" in proc.stdout
    ok &= "320 checks" in proc.stdout
    ok &= elapsed < 60.0
    _report(2, f"verify exits 0 with zero inconsistencies, {elapsed:.1f}s < 60s", ok)


def test_criterion_03_t32_five_way_equivalence(corpus):
    ok = True
    for name, (S, aux) in corpus.items():
        res = verify_statement(S, "T3.2", aux, name=name)
        values = {value for _, value in res.clauses}
        ok &= len(res.clauses) == 5 and len(values) == 1
        if holds(S, Variant.STRONGLY_J_STAR_CLEAN):
            # the unique projections of clauses (3) and (4) determine each
            # other: e3 = 1 - e4, and e4 is the commuting radical companion
            R = S.ring
            for a in R.elements():
                w4 = witnesses(S, a, Variant.UNIQUELY_J_STAR_CLEAN)
                w3 = witnesses(S, a, Variant.UNIQUELY_STRONGLY_STAR_CLEAN)
                w1 = witnesses(S, a, Variant.STRONGLY_J_STAR_CLEAN)
                ok &= len(w4) == 1 and len(w3) == 1 and len(w1) == 1
                ok &= w3[0].companion == R.sub(R.one, w4[0].companion)
                ok &= w4[0].companion == w1[0].companion
    _report(3, "T3.2 clauses identical; unique projections agree", ok)


def test_criterion_04_set_criteria(corpus):
    ok = True
    for name, (S, aux) in corpus.items():
        R = S.ring
        ok &= verify_statement(S, "T3.5", aux, name=name).consistent
        ok &= verify_statement(S, "C3.6", aux, name=name).consistent
        if holds(S, Variant.STRONGLY_J_STAR_CLEAN):
            jac = set(jacobson_radical(R).members)
            u = units(R)
            ok &= jac == {x for x in R.elements() if R.sub(R.one, x) in u}
            ok &= jac == {
                x for x in R.elements()
                if R.add(R.one, R.mul(x, S.star(x))) in u
            }
    _report(4, "T3.5 / C3.6 radical set criteria exact", ok)


def test_criterion_05_gaussian_unit_sets(corpus):
    ok = True
    for name in ("z4", "z2_poly_x2"):
        S, _ = corpus[name]
        R = S.ring
        ext = make_gaussian(S)
        ok &= ext.order == 16
        m = R.order
        u = units(R)
        predicted = {
            a * m + b for a in range(m) for b in range(m) if R.add(a, b) in u
        }
        ok &= set(units(ext.ring)) == predicted
    _report(5, "U(R[i]) = {a+bi | a+b a unit} for both order-16 extensions", ok)


def test_criterion_06_extension_statements(corpus):
    from starclean import make_cyclic_group

    ok = True
    for name in ("gaussian_z2", "gaussian_z4"):
        res = verify_statement(corpus[name][0], "P4.2")
        ok &= res.consistent and not res.vacuous

    for name in ("z2", "z4"):
        res = verify_statement(
            corpus[name][0], "P4.3", Aux(series_orders=(2, 3))
        )
        ok &= res.consistent and not res.vacuous
        ok &= len(res.clauses) == 3  # base plus both truncation orders

    positive = [("z2", 2), ("z4", 2)]
    for name, order in positive:
        res = verify_statement(
            corpus[name][0], "P4.4", Aux(group=make_cyclic_group(order))
        )
        ok &= res.consistent and all(v is True for _, v in res.clauses)
    negative = verify_statement(
        corpus["z2"][0], "P4.4", Aux(group=make_cyclic_group(3))
    )
    ok &= negative.consistent and all(v is False for _, v in negative.clauses)
    _report(6, "P4.2 / P4.3 / P4.4 extension cases exact", ok)


def test_criterion_07_projectionize_contract(corpus):
    start = time.perf_counter()
    ok = True
    for name, (S, _aux) in corpus.items():
        R = S.ring
        jac = set(jacobson_radical(R).members)
        for e in idempotents(R):
            if R.sub(e, S.star(e)) not in jac:
                continue
            f = projectionize(S, e)
            ok &= R.mul(f, f) == f
            ok &= S.star(f) == f
            ok &= R.mul(f, e) == f
            ok &= R.mul(e, f) == e
            ok &= R.sub(e, f) in jac

    t2, _ = corpus["t2_example"]
    e = t2.ring.index("((1,0),(1,0))")
    ok &= t2.ring.labels[projectionize(t2, e)] == "((1,0),(1,1))"
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    _report(7, f"projectionize contract exhaustive, {elapsed:.2f}s < 5s", ok)


def _brute_holds(S, variant):
    """Independent re-derivation of decide() from raw searches."""
    R = S.ring
    idem = [e for e in R.elements() if R.mul(e, e) == e]
    proj = [e for e in idem if S.star(e) == e]
    unit = {
        x for x in R.elements()
        if any(R.mul(x, y) == R.one and R.mul(y, x) == R.one
               for y in R.elements())
    }
    jac = {
        x for x in R.elements()
        if all(R.sub(R.one, R.mul(a, x)) in unit for a in R.elements())
    }
    profile = _PROFILES[variant]
    companions = proj if profile.projection else idem
    complements = jac if profile.radical else unit
    for a in R.elements():
        count = 0
        for e in companions:
            u = R.sub(a, e)
            if u not in complements:
                continue
            if profile.commute and R.mul(a, e) != R.mul(e, a):
                continue
            if profile.extra:
                es = S.star(e)
                if R.mul(a, es) != R.mul(es, a) or R.sub(e, es) not in jac:
                    continue
            count += 1
        if (count != 1) if profile.unique else (count == 0):
            return False
    return True


def test_criterion_08_oracle_equivalence(corpus):
    ok = True
    for name, (S, _aux) in corpus.items():
        for variant in Variant:
            ok &= decide(S, variant).holds == _brute_holds(S, variant)
    _report(8, "decide agrees with raw brute-force for all 13 variants", ok)


def test_criterion_09_radical_cross_check(corpus):
    ok = True
    for name, (S, _aux) in corpus.items():
        jac = set(jacobson_radical(S.ring).members)
        ok &= set(prime_radical(S.ring).members) == jac
        ok &= {S.star(x) for x in jac} == jac
    _report(9, "prime radical equals Jacobson radical; J(R) star-closed", ok)


def test_criterion_10_determinism(corpus_dir):
    specs = sorted(corpus_dir.glob("*.json"))

    def run_twice(path):
        first = _cli("analyze", str(path), "--json")
        second = _cli("analyze", str(path), "--json")
        return (
            first.returncode == 0
            and second.returncode == 0
            and first.stdout == second.stdout
            and first.stdout.strip() != ""
        )

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(run_twice, specs))
    ok = len(specs) == 16 and all(results)
    _report(10, "analyze --json byte-identical across runs for all 16 specs", ok)
