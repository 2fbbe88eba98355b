"""Inverses with prescribed principal/annihilator ideals."""

import pytest

from ringinv.errors import NotEnumerableError, PreconditionError
from ringinv.geninv import satisfies
from ringinv.ideals import (LEFT, RIGHT, SidedIdeal, annihilator, principal)
from ringinv.linalg import PrimeField, Subspace
from ringinv.prescribed import (IdealConstraints, mitsch_extremes, mitsch_leq,
                                one_inverse_family, one_inverse_solution_set,
                                outer_with, reflexive_characterize,
                                reflexive_with_ideals)
from ringinv.rings import MatF, MatQ, Zn

M2F5 = MatF(2, 5)
M2F2 = MatF(2, 2)
Z6 = Zn(6)

# the standard matrix units over F5
E11 = M2F5.parse([[1, 0], [0, 0]])
E12 = M2F5.parse([[0, 1], [0, 0]])
E21 = M2F5.parse([[0, 0], [1, 0]])
E22 = M2F5.parse([[0, 0], [0, 1]])


def f5_ideal(side, vectors):
    sp = Subspace.from_vectors(PrimeField(5), 2, vectors)
    return SidedIdeal.from_subspace(M2F5, side, sp)


# complements of A F^{2x2} and F^{2x2} A for A = E12
S = f5_ideal(RIGHT, [(0, 1)])    # matrices with zero first row
SP = f5_ideal(LEFT, [(1, 0)])    # matrices with zero second column
T, TP = S, SP


def test_constraints_validate_sides():
    with pytest.raises(PreconditionError):
        IdealConstraints(right_principal=SP)
    with pytest.raises(PreconditionError):
        IdealConstraints()


def test_prescribed_outer_inverses_all_equal_e21():
    for cons in (IdealConstraints(right_principal=S, right_annihilator=T),
                 IdealConstraints(left_principal=SP, left_annihilator=TP),
                 IdealConstraints(right_principal=S, left_principal=SP),
                 IdealConstraints(right_annihilator=T, left_annihilator=TP)):
        rep = outer_with(E12, cons)
        assert rep.exists and rep.value == E21
        rep = reflexive_with_ideals(E12, cons)
        assert rep.exists and rep.value == E21


def test_prescribed_outer_none_when_split_fails():
    # T = rann(A) makes R = aR + T fail for A = E12 (aR = rann(A))
    bad = IdealConstraints(right_principal=S,
                           right_annihilator=annihilator(E12, RIGHT))
    rep = outer_with(E12, bad)
    assert not rep.exists and rep.reason


def brute_one_set(a, cons):
    ring = a.ring
    out = []
    for x in ring.elements():
        if not satisfies(a, x, ("1",)):
            continue
        ok = True
        if cons.right_principal is not None:
            ok = ok and principal(x * a, RIGHT) == cons.right_principal
        if cons.right_annihilator is not None:
            ok = ok and annihilator(a * x, RIGHT) == cons.right_annihilator
        if cons.left_principal is not None:
            ok = ok and principal(a * x, LEFT) == cons.left_principal
        if cons.left_annihilator is not None:
            ok = ok and annihilator(x * a, LEFT) == cons.left_annihilator
        if ok:
            out.append(x)
    return out


def all_constraint_bundles(a, two_sided=True, one_sided=True):
    xa_r = principal(a, RIGHT)     # placeholder, rebuilt per x below
    del xa_r
    ring = a.ring
    bundles = []
    seen = set()
    for x in ring.elements():
        if not satisfies(a, x, ("1",)):
            continue
        s = principal(x * a, RIGHT)
        t = annihilator(a * x, RIGHT)
        sp = principal(a * x, LEFT)
        tp = annihilator(x * a, LEFT)
        shapes = []
        if two_sided:
            shapes += [dict(right_principal=s, right_annihilator=t),
                       dict(left_principal=sp, left_annihilator=tp),
                       dict(right_principal=s, left_principal=sp),
                       dict(right_annihilator=t, left_annihilator=tp)]
        if one_sided:
            shapes += [dict(right_principal=s),
                       dict(right_annihilator=t),
                       dict(left_principal=sp),
                       dict(left_annihilator=tp)]
        for kw in shapes:
            key = tuple(sorted((k, v) for k, v in kw.items()))
            if key not in seen:
                seen.add(key)
                bundles.append(IdealConstraints(**kw))
    return bundles


@pytest.mark.parametrize("ring,a_raw", [
    (M2F2, [[0, 0], [0, 1]]),
    (M2F2, [[1, 1], [0, 0]]),
    (Z6, 2),
    (Z6, 4),
])
def test_one_inverse_family_matches_brute_force(ring, a_raw):
    a = ring.parse(a_raw)
    for cons in all_constraint_bundles(a):
        fam = one_inverse_family(a, cons)
        want = brute_one_set(a, cons)
        if fam is None:
            assert want == []
        else:
            assert fam.members() == want


def test_one_inverse_family_none_for_irregular():
    a = Zn(8).parse(2)  # 2x2 is 0 or 4 mod 8, never 2: a{1} is empty
    cons = IdealConstraints(right_principal=principal(a, RIGHT))
    assert one_inverse_family(a, cons) is None
    assert brute_one_set(a, cons) == []


def test_solution_set_through_fixed_inner():
    a = M2F2.parse([[0, 0], [0, 1]])
    g = a  # idempotent, its own inner inverse
    cons = IdealConstraints(right_principal=principal(g * a, RIGHT))
    got = one_inverse_solution_set(a, cons, g)
    assert got == brute_one_set(a, cons)
    with pytest.raises(PreconditionError):
        one_inverse_solution_set(a, cons, M2F2.zero)


def test_f5_single_constraint_families():
    # {aE22 + E21 + bE12} = {X in A{1} : XA R = S} = {X : lann(XA) = T'}
    want = sorted({(E22 * M2F5.parse([[i, 0], [0, i]])) + E21 +
                   (E12 * M2F5.parse([[j, 0], [0, j]]))
                   for i in range(5) for j in range(5)},
                  key=M2F5.sort_key)
    for cons in (IdealConstraints(right_principal=S),
                 IdealConstraints(left_annihilator=TP)):
        fam = one_inverse_family(E12, cons)
        assert fam.members() == want
    # {aE12 + E21 + bE11} = {X : rann(AX) = T} = {X : R AX = S'}
    want = sorted({(E12 * M2F5.parse([[i, 0], [0, i]])) + E21 +
                   (E11 * M2F5.parse([[j, 0], [0, j]]))
                   for i in range(5) for j in range(5)},
                  key=M2F5.sort_key)
    for cons in (IdealConstraints(right_annihilator=T),
                 IdealConstraints(left_principal=SP)):
        fam = one_inverse_family(E12, cons)
        assert fam.members() == want


def test_f5_two_constraint_family():
    # {aE12 + E21} for every two-constraint bundle
    want = sorted({(E12 * M2F5.parse([[i, 0], [0, i]])) + E21
                   for i in range(5)}, key=M2F5.sort_key)
    for cons in (IdealConstraints(right_principal=S, right_annihilator=T),
                 IdealConstraints(left_principal=SP, left_annihilator=TP),
                 IdealConstraints(right_annihilator=T, left_annihilator=TP),
                 IdealConstraints(right_principal=S, left_principal=SP)):
        fam = one_inverse_family(E12, cons)
        assert fam.members() == want


def test_reflexive_characterize_agrees_with_definition():
    a = M2F2.parse([[0, 0], [0, 1]])
    for x in M2F2.elements():
        if not satisfies(a, x, ("1", "2")):
            continue
        cons = IdealConstraints(right_principal=principal(x, RIGHT),
                                right_annihilator=annihilator(x, RIGHT))
        verdict, clauses = reflexive_characterize(a, x, cons)
        assert verdict and all(clauses.values())


def test_mitsch_order_is_a_partial_order_on_z6():
    elems = Z6.elements()
    for y in elems:
        assert mitsch_leq(y, y)
        assert mitsch_leq(Z6.zero, y)
    for y in elems:
        for z in elems:
            if mitsch_leq(y, z) and mitsch_leq(z, y):
                assert y == z


def test_mitsch_leq_infinite_matrix_path():
    ring = MatQ(2)
    a = ring.parse([[1, 0], [0, 0]])
    assert mitsch_leq(a, ring.one)
    assert not mitsch_leq(ring.one, a)


def test_mitsch_extremes_report():
    a = M2F2.parse([[0, 0], [0, 1]])
    x = a  # a is idempotent: its own reflexive inverse
    cons = IdealConstraints(right_principal=principal(x, RIGHT),
                            right_annihilator=annihilator(x, RIGHT))
    report = mitsch_extremes(a, cons)
    assert report["outer_exists"]
    assert report["pairs_ordered"]
    assert report["intersection_is_outer"]
    assert report["is_max_of_Y"] and report["is_min_of_Z"]
    with pytest.raises(NotEnumerableError):
        mitsch_extremes(MatQ(2).parse([[1, 0], [0, 0]]), cons=cons)
