"""Clean-decomposition witnesses, decisions and projectionize."""
import pytest

from starclean import (
    NotIdempotent,
    RadicalPreconditionFailed,
    Variant,
    decide,
    holds,
    make_modular,
    projectionize,
    witnesses,
)
from starclean.structure import jacobson_radical


def test_witnesses_z6_clean():
    S = make_modular(6)
    found = witnesses(S, 2, Variant.CLEAN)
    assert [(w.companion, w.complement) for w in found] == [(1, 1), (3, 5)]
    assert all(w.commutes for w in found)


def test_witnesses_z4_strongly_j_star_clean():
    S = make_modular(4)
    found = witnesses(S, 3, Variant.STRONGLY_J_STAR_CLEAN)
    assert [(w.companion, w.complement) for w in found] == [(1, 2)]


def test_decide_uniquely_clean_failure_reports_least_element():
    S = make_modular(6)
    report = decide(S, Variant.UNIQUELY_CLEAN)
    assert not report.holds
    assert report.failures[0] == (2, 2)
    exhaustive = decide(S, Variant.UNIQUELY_CLEAN, exhaustive=True)
    assert len(exhaustive.failures) >= len(report.failures)
    assert exhaustive.failures[0] == (2, 2)


def test_uniqueness_counts_companions_not_pairs():
    # for a fixed companion e the complement u = a - e is determined, so the
    # witness count equals the companion count
    S = make_modular(6)
    for a in S.ring.elements():
        found = witnesses(S, a, Variant.CLEAN)
        assert len({w.companion for w in found}) == len(found)


def test_variant_hierarchy_on_corpus(corpus):
    implications = [
        (Variant.STRONGLY_J_STAR_CLEAN, Variant.J_STAR_CLEAN),
        (Variant.STRONGLY_J_STAR_CLEAN, Variant.STRONGLY_J_CLEAN),
        (Variant.J_STAR_CLEAN, Variant.J_CLEAN),
        (Variant.STRONGLY_J_CLEAN, Variant.J_CLEAN),
        (Variant.STRONGLY_STAR_CLEAN, Variant.STAR_CLEAN),
        (Variant.STAR_CLEAN, Variant.CLEAN),
        (Variant.STRONGLY_CLEAN, Variant.CLEAN),
        (Variant.UNIQUELY_CLEAN, Variant.CLEAN),
    ]
    for name, (S, _aux) in corpus.items():
        for stronger, weaker in implications:
            if holds(S, stronger):
                assert holds(S, weaker), (name, stronger, weaker)


def test_j_variants_use_radical_complements(corpus):
    for name, (S, _aux) in corpus.items():
        jac = set(jacobson_radical(S.ring).members)
        for a in S.ring.elements():
            for w in witnesses(S, a, Variant.STRONGLY_J_STAR_CLEAN):
                assert w.complement in jac


def test_projectionize_identity_on_projections(corpus):
    for name, (S, _aux) in corpus.items():
        for e in (S.ring.zero, S.ring.one):
            assert projectionize(S, e) == e


def test_projectionize_known_value(corpus):
    t2 = corpus["t2_example"][0]
    e = t2.ring.index("((1,0),(1,0))")
    f = projectionize(t2, e)
    assert t2.ring.labels[f] == "((1,0),(1,1))"


def test_projectionize_errors(corpus):
    S = make_modular(4)
    with pytest.raises(NotIdempotent):
        projectionize(S, 2)
    ex34 = corpus["ex34"][0]
    e = ex34.ring.index("E")    # idempotent, but E - E* = E - F is not radical
    with pytest.raises(RadicalPreconditionFailed):
        projectionize(ex34, e)
