"""One-sided ideals: principal, annihilators, lattice, direct sums."""

import pytest

from ringinv.errors import PreconditionError, UnsupportedInvolutionError
from ringinv.ideals import (LEFT, RIGHT, SidedIdeal, all_ideals, annihilator,
                            complement, direct_sum, full_ideal,
                            ideal_annihilator, multiply_ideal, orthogonal,
                            phi_preimage, principal, zero_ideal)
from ringinv.rings import MatF, MatQ, Zn

Z6 = Zn(6)
M2F2 = MatF(2, 2)


def z6(v):
    return Z6.parse(v)


def test_principal_ideal_z6():
    assert {a.payload for a in principal(z6(2), RIGHT).members()} == {0, 2, 4}
    assert {a.payload for a in principal(z6(3), RIGHT).members()} == {0, 3}
    assert principal(z6(5), RIGHT).is_full()
    assert principal(z6(0), LEFT).is_zero()


def test_annihilator_z6():
    assert {a.payload for a in annihilator(z6(2), RIGHT).members()} == {0, 3}
    assert {a.payload for a in annihilator(z6(3), LEFT).members()} == {0, 2, 4}
    assert annihilator(z6(5), RIGHT).is_zero()
    assert annihilator(z6(0), RIGHT).is_full()


def test_matrix_principal_ideals():
    a = M2F2.parse([[0, 0], [0, 1]])
    ar = principal(a, RIGHT)
    # aR = matrices whose columns lie in the column space of a
    assert ar.contains(M2F2.parse([[0, 0], [1, 1]]))
    assert not ar.contains(M2F2.parse([[1, 0], [0, 0]]))
    assert ar.size() == 4
    ra = principal(a, LEFT)
    assert ra.contains(M2F2.parse([[0, 1], [0, 1]]))
    assert not ra.contains(M2F2.parse([[1, 0], [0, 0]]))


def test_matrix_annihilators():
    a = M2F2.parse([[0, 0], [0, 1]])
    # rann(a) = {r : ar = 0} = matrices with zero second row
    rann = annihilator(a, RIGHT)
    assert rann.contains(M2F2.parse([[1, 1], [0, 0]]))
    assert not rann.contains(M2F2.parse([[0, 0], [0, 1]]))
    lann = annihilator(a, LEFT)
    assert lann.contains(M2F2.parse([[1, 0], [1, 0]]))
    assert not lann.contains(M2F2.parse([[0, 1], [0, 0]]))


def test_from_elements_is_ideal_closure():
    gen = z6(4)
    ideal = SidedIdeal.from_elements(Z6, RIGHT, [gen])
    assert ideal == principal(gen, RIGHT)
    both = SidedIdeal.from_elements(Z6, RIGHT, [z6(2), z6(3)])
    assert both.is_full()


def test_ideal_lattice_operations():
    i2, i3 = principal(z6(2), RIGHT), principal(z6(3), RIGHT)
    assert i2.intersect(i3).is_zero()
    assert i2.sum(i3).is_full()
    assert i3.is_subideal_of(full_ideal(Z6, RIGHT))
    assert zero_ideal(Z6, RIGHT).is_subideal_of(i3)
    with pytest.raises(PreconditionError):
        i2.is_subideal_of(principal(z6(2), LEFT))


def test_direct_sum_witness():
    i2, i3 = principal(z6(2), RIGHT), principal(z6(3), RIGHT)
    w = direct_sum(i2, i3)
    assert w is not None
    s, t = w.decompose(z6(5))
    assert s + t == z6(5) and i2.contains(s) and i3.contains(t)
    assert w.unit() * w.unit() == w.unit()
    assert direct_sum(i2, i2) is None


def test_direct_sum_matrix_ring():
    a = M2F2.parse([[0, 0], [0, 1]])
    s, t = principal(a, RIGHT), annihilator(a, RIGHT)
    w = direct_sum(s, t)
    assert w is not None
    u = w.unit()
    assert u * u == u and s.contains(u)
    r = M2F2.parse([[1, 1], [1, 0]])
    x, y = w.decompose(r)
    assert x + y == r and s.contains(x) and t.contains(y)


def test_complement_exists():
    i2 = principal(z6(2), RIGHT)
    c = complement(i2)
    assert c is not None and direct_sum(i2, c) is not None
    line = principal(M2F2.parse([[1, 0], [0, 0]]), RIGHT)
    c = complement(line)
    assert direct_sum(line, c) is not None


def test_multiply_and_preimage():
    a = z6(2)
    s = full_ideal(Z6, RIGHT)
    assert multiply_ideal(a, s) == principal(a, RIGHT)
    assert phi_preimage(a, zero_ideal(Z6, RIGHT)) == annihilator(a, RIGHT)
    b = M2F2.parse([[0, 1], [0, 0]])
    assert multiply_ideal(b, full_ideal(M2F2, RIGHT)) == principal(b, RIGHT)
    assert phi_preimage(b, zero_ideal(M2F2, RIGHT)) == annihilator(b, RIGHT)


def test_ideal_annihilator_duality():
    a = M2F2.parse([[0, 0], [0, 1]])
    assert ideal_annihilator(principal(a, LEFT), RIGHT) == \
        annihilator(a, RIGHT)
    assert ideal_annihilator(principal(a, RIGHT), LEFT) == \
        annihilator(a, LEFT)


def test_orthogonality():
    p = M2F2.parse([[1, 0], [0, 0]])
    q = M2F2.parse([[0, 0], [0, 1]])
    assert orthogonal(principal(p, RIGHT), principal(q, RIGHT), RIGHT)
    assert not orthogonal(principal(p, RIGHT), principal(p, RIGHT), RIGHT) \
        or p == M2F2.zero
    with pytest.raises(UnsupportedInvolutionError):
        orthogonal(principal(z6(2), RIGHT), principal(z6(3), RIGHT), RIGHT)


def test_all_ideals_counts():
    # Z6 has one right ideal per divisor of 6
    assert len(all_ideals(Z6, RIGHT)) == 4
    assert len(all_ideals(Zn(8), RIGHT)) == 4
    # M2(F2): zero, three lines, full -> five ideals per side
    assert len(all_ideals(M2F2, RIGHT)) == 5
    assert len(all_ideals(M2F2, LEFT)) == 5
    # canonical order is deterministic
    first = [repr(i) for i in all_ideals(M2F2, RIGHT)]
    second = [repr(i) for i in all_ideals(M2F2, RIGHT)]
    assert first == second


def test_members_canonical_order():
    i = principal(z6(2), RIGHT)
    assert [a.payload for a in i.members()] == [0, 2, 4]
    j = principal(M2F2.parse([[1, 0], [0, 0]]), RIGHT)
    ms = j.members()
    assert len(ms) == j.size()
    keys = [M2F2.sort_key(m) for m in ms]
    assert keys == sorted(keys)


def test_extensional_vs_subspace_equality():
    a = M2F2.parse([[0, 0], [0, 1]])
    via_subspace = principal(a, RIGHT)
    via_elements = SidedIdeal.from_elements(M2F2, RIGHT, [a])
    assert via_subspace == via_elements
