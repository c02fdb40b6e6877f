"""Ring/involution construction, validation and enumeration."""
import itertools

import numpy as np
import pytest

from starclean import (
    AxiomViolation,
    NotInvolution,
    OrderBoundExceeded,
    ShapeError,
    build_involution,
    build_ring,
    enumerate_involutions,
    inverse,
    make_modular,
    quotient_ring,
)


def _modular_tables(n):
    labels = [str(i) for i in range(n)]
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return labels, add, mul


def test_build_ring_modular_matches_integer_arithmetic():
    labels, add, mul = _modular_tables(6)
    R = build_ring(labels, add, mul, 0, 1)
    for i in range(6):
        for j in range(6):
            assert R.add(i, j) == (i + j) % 6
            assert R.mul(i, j) == (i * j) % 6
            assert R.sub(i, j) == (i - j) % 6
    assert R.neg(2) == 4
    assert R.label(3) == "3"
    assert R.index("5") == 5


def test_corrupted_multiplication_table_is_rejected():
    labels, add, mul = _modular_tables(4)
    mul[2][2] = 1  # 2*2 must be 0 mod 4
    with pytest.raises(AxiomViolation) as exc:
        build_ring(labels, add, mul, 0, 1)
    assert exc.value.axiom in (
        "multiplicative associativity",
        "left distributivity",
        "right distributivity",
    )
    assert exc.value.witness is not None


def test_non_commutative_addition_is_rejected():
    labels, add, mul = _modular_tables(3)
    add[1][2] = 1
    with pytest.raises(AxiomViolation) as exc:
        build_ring(labels, add, mul, 0, 1)
    assert "commutativity" in exc.value.axiom or "inverse" in exc.value.axiom


def test_shape_errors():
    labels, add, mul = _modular_tables(3)
    with pytest.raises(ShapeError):
        build_ring(["a", "a", "b"], add, mul, 0, 1)
    with pytest.raises(ShapeError):
        build_ring(labels, add, mul, 0, 7)
    with pytest.raises(ShapeError):
        build_ring([], [], [], 0, 0)


def test_order_guard_env_override(monkeypatch):
    monkeypatch.setenv("STARCLEAN_MAX_ORDER", "5")
    with pytest.raises(OrderBoundExceeded):
        make_modular(6)
    assert make_modular(5).order == 5


def test_build_involution_validates():
    S = make_modular(4)
    R = S.ring
    star = build_involution(R, [0, 1, 2, 3])
    assert star(3) == 3
    # x -> -x is additive but moves the identity
    with pytest.raises(NotInvolution):
        build_involution(R, [0, 3, 2, 1])
    with pytest.raises(NotInvolution):
        build_involution(R, [0, 0, 2, 3])


def test_involution_enumeration_matches_full_permutation_search(corpus):
    for name in ("z4", "z6", "z2xz2", "ex34"):
        R = corpus[name][0].ring
        found = {star.as_tuple() for star in enumerate_involutions(R)}
        A, M = R.add_table, R.mul_table
        idx = np.arange(R.order)
        brute = set()
        for perm in itertools.permutations(range(R.order)):
            f = np.array(perm)
            if f[R.one] != R.one or not np.array_equal(f[f], idx):
                continue
            if not np.array_equal(f[A], A[np.ix_(f, f)]):
                continue
            if not np.array_equal(f[M], M[np.ix_(f, f)].T):
                continue
            brute.add(perm)
        assert found == brute


def test_involution_enumeration_counts(corpus):
    assert len(enumerate_involutions(corpus["z4"][0].ring)) == 1
    assert len(enumerate_involutions(corpus["z2xz2"][0].ring)) == 2
    perms = [s.as_tuple() for s in enumerate_involutions(corpus["z2xz2"][0].ring)]
    assert perms == sorted(perms)


def test_involution_enumeration_bound():
    with pytest.raises(OrderBoundExceeded):
        enumerate_involutions(make_modular(17).ring)
    assert len(enumerate_involutions(make_modular(17).ring, bound=32)) == 1


def test_inverse_two_sided():
    R = make_modular(6).ring
    assert inverse(R, 5) == 5
    assert inverse(R, 1) == 1
    assert inverse(R, 2) is None
    with pytest.raises(ShapeError):
        inverse(R, 9)


def test_quotient_ring_of_z8_by_multiples_of_four():
    R = make_modular(8).ring
    Q, proj = quotient_ring(R, (0, 4))
    assert Q.order == 4
    # cosets behave like Z4
    for i in range(8):
        for j in range(8):
            assert Q.add(int(proj[i]), int(proj[j])) == int(proj[(i + j) % 8])
            assert Q.mul(int(proj[i]), int(proj[j])) == int(proj[(i * j) % 8])
