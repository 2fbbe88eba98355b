"""Exact linear algebra: RREF, nullspaces, subspaces, projections."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringinv.linalg import (QQ, PrimeField, Subspace, full_subspace, identity,
                            is_direct_sum, mat_inverse, mat_mul, mat_vec,
                            nullspace_basis, projection_matrix, rank, rref,
                            solve, solve_matrix, zero_subspace)

F2 = PrimeField(2)
F5 = PrimeField(5)


def q(rows):
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def test_prime_field_requires_prime():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_field_arithmetic():
    assert F5.mul(3, 4) == 2
    assert F5.inv(3) == 2
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_rref_canonical():
    m = q([[2, 4], [1, 2]])
    r, pivots = rref(QQ, m)
    assert pivots == (0,)
    assert r == q([[1, 2], [0, 0]])
    # idempotent: reducing an RREF changes nothing
    assert rref(QQ, r)[0] == r


def test_rank_and_nullspace():
    m = q([[2, -2], [0, 0]])
    assert rank(QQ, m) == 1
    basis = nullspace_basis(QQ, m)
    assert len(basis) == 1
    for v in basis:
        assert all(x == 0 for x in mat_vec(QQ, m, v))


def test_solve_and_solve_matrix():
    a = q([[1, 2], [3, 5]])
    x = solve(QQ, a, (Fraction(1), Fraction(2)))
    assert mat_vec(QQ, a, x) == (Fraction(1), Fraction(2))
    assert solve(QQ, q([[1, 1], [1, 1]]), (Fraction(0), Fraction(1))) is None
    b = q([[1, 0], [0, 1]])
    xm = solve_matrix(QQ, a, b)
    assert mat_mul(QQ, a, xm) == b


def test_mat_inverse():
    a = q([[1, 2], [3, 5]])
    inv = mat_inverse(QQ, a)
    assert mat_mul(QQ, a, inv) == identity(QQ, 2)
    assert mat_inverse(QQ, q([[1, 1], [1, 1]])) is None


def test_subspace_canonical_representation():
    u = Subspace.from_vectors(F5, 2, [(1, 2)])
    v = Subspace.from_vectors(F5, 2, [(2, 4)])
    assert u == v and u.dim == 1
    assert u.contains((3, 1))
    assert not u.contains((1, 0))


def test_subspace_lattice_operations():
    u = Subspace.from_vectors(F2, 3, [(1, 0, 0), (0, 1, 0)])
    v = Subspace.from_vectors(F2, 3, [(0, 1, 0), (0, 0, 1)])
    w = u.intersect(v)
    assert w.dim == 1 and w.contains((0, 1, 0))
    assert u.sum(v) == full_subspace(F2, 3)
    assert zero_subspace(F2, 3).is_subspace_of(u)
    assert u.perp().perp() == u


def test_subspace_complement_and_vectors():
    u = Subspace.from_vectors(F2, 2, [(1, 1)])
    c = u.complement()
    assert is_direct_sum(u, c)
    assert u.vectors() == [(0, 0), (1, 1)]


def test_projection_matrix_laws():
    u = Subspace.from_vectors(QQ, 2, [(Fraction(1), Fraction(0))])
    v = Subspace.from_vectors(QQ, 2, [(Fraction(1), Fraction(1))])
    p = projection_matrix(u, v)
    assert mat_mul(QQ, p, p) == p
    for b in u.basis:
        assert mat_vec(QQ, p, b) == b
    for b in v.basis:
        assert all(x == 0 for x in mat_vec(QQ, p, b))


@st.composite
def f5_matrix(draw, rows=3, cols=3):
    return tuple(tuple(draw(st.integers(0, 4)) for _ in range(cols))
                 for _ in range(rows))


@settings(max_examples=60)
@given(f5_matrix())
def test_rank_nullity(m):
    assert rank(F5, m) + len(nullspace_basis(F5, m)) == 3


@settings(max_examples=60)
@given(f5_matrix())
def test_nullspace_vectors_are_killed(m):
    for v in nullspace_basis(F5, m):
        assert all(x == 0 for x in mat_vec(F5, m, v))


@settings(max_examples=40)
@given(f5_matrix(rows=2, cols=3))
def test_image_preimage_galois(rows):
    u = Subspace.from_vectors(F5, 3, rows)
    a = tuple(tuple((i + 2 * j) % 5 for j in range(3)) for i in range(3))
    assert u.image(a).is_subspace_of(full_subspace(F5, 3))
    assert u.is_subspace_of(u.image(a).preimage(a))
