"""Structural invariants: radicals, units, idempotents, ideals, flags."""
import pytest

from starclean import (
    NotIdeal,
    as_star_ideal,
    center,
    center_elements,
    check_ideal,
    classify_flags,
    ideals,
    idempotents,
    jacobson_radical,
    lifts_idempotents,
    make_modular,
    maximal_ideals,
    one_minus_unit_set,
    prime_radical,
    projections,
    semisimple_quotient,
    units,
)
from starclean.structure import Ideal


def test_radical_and_units_of_z4():
    R = make_modular(4).ring
    assert set(jacobson_radical(R).members) == {0, 2}
    assert units(R) == frozenset({1, 3})
    assert set(prime_radical(R).members) == {0, 2}


def test_radical_of_z6_is_zero_and_semisimple_quotient():
    R = make_modular(6).ring
    assert jacobson_radical(R).members == (0,)
    Q, proj = semisimple_quotient(R)
    assert Q.order == 6
    assert semisimple_quotient(make_modular(8).ring)[0].order == 2


def test_idempotents_and_projections(corpus):
    z6 = make_modular(6)
    assert idempotents(z6.ring) == (0, 1, 3, 4)
    assert projections(z6) == (0, 1, 3, 4)
    ex34 = corpus["ex34"][0]
    assert len(idempotents(ex34.ring)) == 4
    assert len(projections(ex34)) == 2


def test_maximal_ideals_of_z6():
    R = make_modular(6).ring
    found = {i.members for i in maximal_ideals(R)}
    assert found == {(0, 2, 4), (0, 3)}


def test_ideal_lattice_of_z8():
    R = make_modular(8).ring
    found = {i.members for i in ideals(R)}
    assert found == {(0,), (0, 4), (0, 2, 4, 6), tuple(range(8))}


def test_check_ideal_rejections():
    R = make_modular(6).ring
    with pytest.raises(NotIdeal):
        check_ideal(R, [2, 4])       # missing zero
    with pytest.raises(NotIdeal):
        check_ideal(R, [0, 2])       # not additively closed: 2+2=4
    assert check_ideal(R, [0, 2, 4]) == (0, 2, 4)


def test_star_closure_flag(corpus):
    ex34 = corpus["ex34"][0]
    e = ex34.ring.index("E")
    ideal = Ideal(tuple(sorted({ex34.ring.zero, e})))
    marked = as_star_ideal(ex34, ideal)
    assert marked.star_closed is False
    full = as_star_ideal(ex34, Ideal(tuple(ex34.ring.elements())))
    assert full.star_closed is True


def test_center_of_noncommutative_ring(corpus):
    t2 = corpus["t2z2_triangular"][0]
    assert len(center_elements(t2.ring)) == 2
    c = center(t2)
    assert c.order == 2
    big = corpus["t2_example"][0]
    assert not classify_flags(big).abelian
    assert len(center_elements(big.ring)) < big.order


def test_one_minus_unit_set_matches_radical_on_local_ring():
    R = make_modular(8).ring
    assert set(one_minus_unit_set(R)) == set(jacobson_radical(R).members)
    R6 = make_modular(6).ring
    assert set(one_minus_unit_set(R6)) != set(jacobson_radical(R6).members)


def test_lifts_idempotents():
    R = make_modular(4).ring
    assert lifts_idempotents(R, jacobson_radical(R))
    R12 = make_modular(12).ring
    assert lifts_idempotents(R12, jacobson_radical(R12))


def test_classify_flags_known_rings(corpus):
    z2 = corpus["z2"][0]
    f = classify_flags(z2)
    assert f.boolean_ring and f.star_boolean and f.local and f.regular
    assert f.two_in_radical and f.abelian and f.star_regular

    z4 = corpus["z4"][0]
    f4 = classify_flags(z4)
    assert f4.local and not f4.boolean_ring and not f4.regular
    assert f4.two_in_radical

    z6 = corpus["z6"][0]
    f6 = classify_flags(z6)
    assert f6.regular and f6.star_regular and not f6.local
    assert not f6.two_in_radical

    ex34 = corpus["ex34"][0]
    fx = classify_flags(ex34)
    assert fx.boolean_ring and not fx.star_boolean
    assert fx.regular and not fx.star_regular
