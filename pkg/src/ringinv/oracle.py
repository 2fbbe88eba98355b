"""Brute-force ground truth and exhaustive verification on finite rings.

Every catalog entry quantifies over concrete elements (and, where a
statement ranges over ideals, over every one-sided ideal of the finite
backend) and checks one theorem's clauses for mutual consistency.  The
verifier reports the first counterexample in canonical order.
"""

import time

from .errors import NotEnumerableError, PreconditionError, VerificationError
from .geninv import (any_inner, classify_projector_relations, core_inverse,
                     drazin_index, drazin_inverse, dual_core_inverse,
                     group_inverse, iter_inverse_set, moore_penrose,
                     satisfies)
from .ideals import (LEFT, RIGHT, all_ideals, annihilator, direct_sum,
                     principal)
from .prescribed import (IdealConstraints, _check_constraints_on_x,
                         mitsch_extremes, mitsch_leq, one_inverse_family,
                         one_inverse_solution_set, outer_with,
                         reflexive_characterize)
from .projectors import projector
from .rings import is_invertible
from . import special


def brute_force_set(a, predicate):
    """All x in a finite ring with predicate(x), canonical order."""
    ring = a.ring
    if not ring.finite:
        raise NotEnumerableError("brute force needs a finite ring")
    return [x for x in ring.elements() if predicate(x)]


class TheoremCase:
    """A catalog entry: a stable id, its quantifier scope, a checker.

    The checker is a generator over a ring yielding (description, ok)
    pairs in canonical order.
    """

    __slots__ = ("id", "quantifier_scope", "checker")

    def __init__(self, case_id, quantifier_scope, checker):
        self.id = case_id
        self.quantifier_scope = quantifier_scope
        self.checker = checker

    def __repr__(self):
        return "TheoremCase(%s)" % self.id


class VerificationReport:
    __slots__ = ("ring", "theorem", "cases_checked", "counterexample",
                 "elapsed", "complete")

    def __init__(self, ring, theorem, cases_checked, counterexample,
                 elapsed, complete=True):
        self.ring = ring
        self.theorem = theorem
        self.cases_checked = cases_checked
        self.counterexample = counterexample
        self.elapsed = elapsed
        self.complete = complete

    @property
    def passed(self):
        return self.counterexample is None and self.complete

    def to_json(self):
        # elapsed is intentionally excluded: reports must be byte-identical
        # across runs.
        return {
            "ring": self.ring,
            "theorem": self.theorem,
            "cases_checked": self.cases_checked,
            "counterexample": self.counterexample,
            "complete": self.complete,
            "passed": self.passed,
        }

    def __repr__(self):
        status = "pass" if self.passed else \
            ("incomplete" if self.counterexample is None else "FAIL")
        return "VerificationReport(%s on %s: %s, %d cases)" % (
            self.theorem, self.ring, status, self.cases_checked)


# -- quantifier scopes ----------------------------------------------------

def _elements(ring):
    return list(ring.elements())


def _idempotents(ring):
    return [p for p in ring.elements() if p * p == p]


def _weights(ring):
    return [w for w in ring.elements()
            if is_invertible(w) and w.star == w]


def _checked(label, thunk):
    """Run a consistency-asserting call; VerificationError means failure."""
    try:
        thunk()
    except VerificationError:
        return label, False
    return label, True


def _iff_chain(label, *values):
    return label, len(set(values)) <= 1


# -- element and projector lemmas ------------------------------------------

def _check_invertible(ring):
    for a in _elements(ring):
        yield _iff_chain(
            "a=%s" % ring.render(a),
            is_invertible(a),
            principal(a, RIGHT).is_full() and annihilator(a, RIGHT).is_zero(),
            principal(a, LEFT).is_full() and annihilator(a, LEFT).is_zero())


def _check_idempotent_ideals(ring):
    one = ring.one
    for p in _idempotents(ring):
        ok = (principal(p, RIGHT) == annihilator(one - p, RIGHT)
              and principal(p, LEFT) == annihilator(one - p, LEFT))
        yield "p=%s splits" % ring.render(p), ok
        for q in _idempotents(ring):
            label = "p=%s,q=%s" % (ring.render(p), ring.render(q))
            ok = (
                (principal(p, RIGHT).is_subideal_of(principal(q, RIGHT))
                 == annihilator(q, LEFT).is_subideal_of(
                     annihilator(p, LEFT)))
                and (principal(p, LEFT).is_subideal_of(principal(q, LEFT))
                     == annihilator(q, RIGHT).is_subideal_of(
                         annihilator(p, RIGHT)))
                and ((q == p) == (
                    principal(q, RIGHT).is_subideal_of(principal(p, RIGHT))
                    and annihilator(q, RIGHT).is_subideal_of(
                        annihilator(p, RIGHT)))))
            yield label, ok


def _check_regular_inclusions(ring):
    regular = {a: any_inner(a) is not None for a in _elements(ring)}
    for a in _elements(ring):
        for b in _elements(ring):
            label = "a=%s,b=%s" % (ring.render(a), ring.render(b))
            ar_in_br = principal(a, RIGHT).is_subideal_of(
                principal(b, RIGHT))
            lb_in_la = annihilator(b, LEFT).is_subideal_of(
                annihilator(a, LEFT))
            ra_in_rb = principal(a, LEFT).is_subideal_of(principal(b, LEFT))
            rb_in_ra_ann = annihilator(b, RIGHT).is_subideal_of(
                annihilator(a, RIGHT))
            ok = (not ar_in_br or lb_in_la) and \
                 (not ra_in_rb or rb_in_ra_ann)
            if regular[b]:
                ok = ok and (lb_in_la == ar_in_br) \
                     and (rb_in_ra_ann == ra_in_rb)
                # regularity transfer
                if rb_in_ra_ann and principal(b, LEFT).is_subideal_of(
                        principal(a, LEFT)):
                    ok = ok and regular[a]
                if annihilator(a, RIGHT) == annihilator(b, RIGHT):
                    ok = ok and (
                        principal(b, LEFT).is_subideal_of(principal(a, LEFT))
                        == regular[a])
            yield label, ok


def _check_star_ideal_duality(ring):
    if not ring.has_involution:
        return
    for a in _elements(ring):
        for b in _elements(ring):
            label = "a=%s,b=%s" % (ring.render(a), ring.render(b))
            ok = (principal(a, RIGHT).is_subideal_of(principal(b, RIGHT))
                  == principal(a.star, LEFT).is_subideal_of(
                      principal(b.star, LEFT))) and \
                 (annihilator(a, RIGHT).is_subideal_of(
                     annihilator(b, RIGHT))
                  == annihilator(a.star, LEFT).is_subideal_of(
                      annihilator(b.star, LEFT)))
            yield label, ok


def _check_orthogonal_range(ring):
    if not ring.has_involution:
        return
    from .ideals import orthogonal
    for a in _elements(ring):
        label = "a=%s" % ring.render(a)
        ok = orthogonal(principal(a, RIGHT),
                        annihilator(a.star, RIGHT), RIGHT)
        ok = ok and orthogonal(principal(a, LEFT),
                               annihilator(a.star, LEFT), LEFT)
        if a.star == a:
            ok = ok and orthogonal(principal(a, RIGHT),
                                   annihilator(a, RIGHT), RIGHT)
        if a * a == a:
            ok = ok and (orthogonal(principal(a, RIGHT),
                                    annihilator(a, RIGHT), RIGHT)
                         == (a.star == a))
        yield label, ok


def _direct_sum_pairs(ring, side):
    fam = all_ideals(ring, side)
    for s in fam:
        for t in fam:
            w = direct_sum(s, t)
            if w is not None:
                yield s, t, w


def _check_projector_algebra(ring):
    elems = _elements(ring)
    one = ring.one
    for side in (RIGHT, LEFT):
        for s, t, _ in _direct_sum_pairs(ring, side):
            rho = projector(s, t)
            tau = projector(t, s)
            label = "side=%s,S=%r,T=%r" % (side, s, t)
            ok = rho.is_unit_idempotent()
            for r in elems:
                ok = ok and rho.apply(r) + tau.apply(r) == r
                ok = ok and (rho.apply(r) == r) == s.contains(r)
                ok = ok and t.contains(rho.apply(r) - r)
            # module compatibility and the rho(1) laws
            for a in elems:
                if side == RIGHT:
                    ok = ok and rho.apply(a) == rho.unit * a
                    ok = ok and ((rho.unit * a == a)
                                 == principal(a, RIGHT).is_subideal_of(s))
                    ok = ok and ((a * rho.unit == a)
                                 == t.is_subideal_of(annihilator(a, RIGHT)))
                else:
                    ok = ok and rho.apply(a) == a * rho.unit
                    ok = ok and ((a * rho.unit == a)
                                 == principal(a, LEFT).is_subideal_of(s))
                    ok = ok and ((rho.unit * a == a)
                                 == t.is_subideal_of(annihilator(a, LEFT)))
            yield label, ok


def _check_inverse_product_ideals(ring):
    for a in _elements(ring):
        for x in _elements(ring):
            label = "a=%s,x=%s" % (ring.render(a), ring.render(x))
            ok = True
            if satisfies(a, x, ("1",)):
                ok = (principal(a * x, RIGHT) == principal(a, RIGHT)
                      and annihilator(x * a, RIGHT)
                      == annihilator(a, RIGHT)
                      and annihilator(a * x, LEFT) == annihilator(a, LEFT)
                      and principal(x * a, LEFT) == principal(a, LEFT))
            if satisfies(a, x, ("2",)):
                ok = ok and (
                    annihilator(a * x, RIGHT) == annihilator(x, RIGHT)
                    and principal(x * a, RIGHT) == principal(x, RIGHT)
                    and principal(a * x, LEFT) == principal(x, LEFT)
                    and annihilator(x * a, LEFT) == annihilator(x, LEFT))
            yield label, ok


def _check_core_equation_systems(ring):
    for a in _elements(ring):
        label = "a=%s" % ring.render(a)
        ok = all(satisfies(a, x, ("1", "2"))
                 for x in iter_inverse_set(a, ("6", "7")))
        if ring.has_involution:
            sol367 = list(iter_inverse_set(a, ("3", "6", "7")))
            rep = core_inverse(a)
            ok = ok and (sol367 == ([rep.value] if rep.exists else []))
            ok = ok and all(satisfies(a, x, ("1", "2"))
                            for x in iter_inverse_set(a, ("8", "9")))
            sol489 = list(iter_inverse_set(a, ("4", "8", "9")))
            repd = dual_core_inverse(a)
            ok = ok and (sol489 == ([repd.value] if repd.exists else []))
        yield label, ok


def _check_inner_of_product(ring):
    for a in _elements(ring):
        for b in _elements(ring):
            ab = a * b
            inners = [g for g in ring.elements() if ab * g * ab == ab]
            if not inners:
                continue
            label = "a=%s,b=%s" % (ring.render(a), ring.render(b))
            ok = True
            left_eq = (principal(ab, RIGHT) == principal(a, RIGHT))
            left_ann = (annihilator(ab, LEFT) == annihilator(a, LEFT))
            right_ann = (annihilator(ab, RIGHT) == annihilator(b, RIGHT))
            right_eq = (principal(ab, LEFT) == principal(b, LEFT))
            for g in inners:
                ok = ok and ((ab * g * a == a) == left_eq == left_ann)
                ok = ok and ((b * g * ab == b) == right_ann == right_eq)
            yield label, ok


def _check_reflexive_remark(ring):
    for a in _elements(ring):
        for x in _elements(ring):
            label = "a=%s,x=%s" % (ring.render(a), ring.render(x))
            ok = True
            if satisfies(a, x, ("1",)) and (
                    principal(x, RIGHT) == principal(x * a, RIGHT)
                    or principal(x, LEFT) == principal(a * x, LEFT)):
                ok = satisfies(a, x, ("1", "2"))
            if satisfies(a, x, ("2",)) and (
                    principal(a, RIGHT) == principal(a * x, RIGHT)
                    or principal(a, LEFT) == principal(x * a, LEFT)):
                ok = ok and satisfies(a, x, ("1", "2"))
            yield label, ok


# -- projector characterizations -------------------------------------------

def _projector_block_checker(block):
    def gen(ring):
        for a in _elements(ring):
            for x in _elements(ring):
                label = "a=%s,x=%s" % (ring.render(a), ring.render(x))
                yield _checked(
                    label, lambda a=a, x=x:
                    classify_projector_relations(a, x)[block])
    return gen


# -- prescribed {1}-inverse families ---------------------------------------

_TWO_SHAPES = (("S", "T"), ("Sp", "Tp"), ("S", "Sp"), ("T", "Tp"))
_ALL_SHAPES = IdealConstraints.SUPPORTED_SHAPES


def _cons_from(tags, s, t, sp, tp):
    return IdealConstraints(
        right_principal=s if "S" in tags else None,
        right_annihilator=t if "T" in tags else None,
        left_principal=sp if "Sp" in tags else None,
        left_annihilator=tp if "Tp" in tags else None)


def _product_cons(a, x, tags):
    """Constraints binding the xa/ax ideals realized by x."""
    return _cons_from(tags,
                      principal(x * a, RIGHT), annihilator(a * x, RIGHT),
                      principal(a * x, LEFT), annihilator(x * a, LEFT))


def _check_one_families(ring):
    for a in _elements(ring):
        inners = [x for x in ring.elements() if a * x * a == a]
        for x in inners:
            for tags in _ALL_SHAPES:
                cons = _product_cons(a, x, tags)
                label = "a=%s,x=%s,shape=%s" % (
                    ring.render(a), ring.render(x), "+".join(tags))
                fam = one_inverse_family(a, cons)
                if fam is None:
                    yield label, False
                    continue
                want = [y for y in inners
                        if _check_constraints_on_x(a, y, cons, True)]
                yield label, fam.members() == want


def _check_one_solution_sets(ring):
    for a in _elements(ring):
        inners = [x for x in ring.elements() if a * x * a == a]
        for g in inners:
            for tags in _ALL_SHAPES:
                cons = _product_cons(a, g, tags)
                label = "a=%s,g=%s,shape=%s" % (
                    ring.render(a), ring.render(g), "+".join(tags))
                try:
                    got = one_inverse_solution_set(a, cons, g)
                except (PreconditionError, VerificationError):
                    yield label, False
                    continue
                want = [y for y in inners
                        if _check_constraints_on_x(a, y, cons, True)]
                yield label, got == want


# -- Mitsch order -----------------------------------------------------------

def _check_mitsch_order(ring):
    elems = _elements(ring)
    leq = {(y, z): mitsch_leq(y, z) for y in elems for z in elems}
    for y in elems:
        yield "reflexive y=%s" % ring.render(y), leq[(y, y)]
        for z in elems:
            label = "y=%s,z=%s" % (ring.render(y), ring.render(z))
            if leq[(y, z)] and leq[(z, y)]:
                yield "antisym " + label, y == z
            for u in elems:
                if leq[(y, z)] and leq[(z, u)]:
                    yield ("trans y=%s,z=%s,u=%s" % (
                        ring.render(y), ring.render(z), ring.render(u)),
                        leq[(y, u)])


def _check_mitsch_extremes(ring):
    for a in _elements(ring):
        for x in ring.elements():
            if x * a * x != x:
                continue
            for tags in _TWO_SHAPES:
                cons = _cons_from(
                    tags,
                    principal(x, RIGHT), annihilator(x, RIGHT),
                    principal(x, LEFT), annihilator(x, LEFT))
                label = "a=%s,x=%s,shape=%s" % (
                    ring.render(a), ring.render(x), "+".join(tags))
                rep = mitsch_extremes(a, cons)
                ok = rep["pairs_ordered"]
                if rep["outer_exists"]:
                    ok = ok and rep["intersection_is_outer"] \
                        and rep["is_max_of_Y"] and rep["is_min_of_Z"]
                yield label, ok


# -- prescribed outer and reflexive inverses --------------------------------

def _ideal_quadruples(ring):
    right = all_ideals(ring, RIGHT)
    left = all_ideals(ring, LEFT)
    for tags in _TWO_SHAPES:
        first = right if tags[0] in ("S", "T") else left
        second = right if tags[1] in ("S", "T") else left
        for i in first:
            for j in second:
                by_tag = dict.fromkeys(("S", "T", "Sp", "Tp"))
                by_tag[tags[0]], by_tag[tags[1]] = i, j
                yield tags, _cons_from(tags, by_tag["S"], by_tag["T"],
                                       by_tag["Sp"], by_tag["Tp"])


def _check_prescribed(ring, reflexive):
    eqs = ("1", "2") if reflexive else ("2",)
    for a in _elements(ring):
        for tags, cons in _ideal_quadruples(ring):
            label = "a=%s,shape=%s,%r" % (
                ring.render(a), "+".join(tags), cons.shape())
            rep = outer_with(a, cons, reflexive=reflexive)
            want = [x for x in ring.elements()
                    if satisfies(a, x, eqs)
                    and _check_constraints_on_x(a, x, cons, False)]
            ok = len(want) <= 1 and rep.exists == (len(want) == 1)
            if rep.exists:
                ok = ok and rep.value == want[0]
                # idempotent-generated ideal corollary: p = xa, q = ax
                x = rep.value
                p, q = x * a, a * x
                ok = ok and p * p == p and q * q == q
                if cons.right_principal is not None:
                    ok = ok and principal(x, RIGHT) == principal(p, RIGHT)
                if cons.right_annihilator is not None:
                    ok = ok and annihilator(x, RIGHT) == annihilator(
                        q, RIGHT)
            yield label, ok


def _check_reflexive_clause_grid(ring):
    for a in _elements(ring):
        for x in _elements(ring):
            for tags in _TWO_SHAPES:
                cons = _cons_from(
                    tags,
                    principal(x, RIGHT), annihilator(x, RIGHT),
                    principal(x, LEFT), annihilator(x, LEFT))
                label = "a=%s,x=%s,shape=%s" % (
                    ring.render(a), ring.render(x), "+".join(tags))
                yield _checked(
                    label, lambda a=a, x=x, cons=cons:
                    reflexive_characterize(a, x, cons))


# -- weighted, one-sided, and constrained inverses --------------------------

def _check_star_classes(ring):
    if not ring.has_involution:
        return
    for a in _elements(ring):
        for tag in sorted(special.STAR_CLASS_EQS):
            label = "a=%s,class=%s" % (ring.render(a), tag)
            def run(a=a, tag=tag):
                for x in ring.elements():
                    special.star_class_membership(a, x, tag)
                special.star_class_identity_report(a, tag)
            yield _checked(label, run)


def _check_weighted_mp_grid(ring):
    if not ring.has_involution:
        return
    weights = _weights(ring)
    for a in _elements(ring):
        for e in weights:
            for f in weights:
                rep = special.weighted_mp(a, e, f)
                for x in ring.elements():
                    label = "a=%s,e=%s,f=%s,x=%s" % tuple(
                        ring.render(v) for v in (a, e, f, x))
                    yield _checked(
                        label, lambda a=a, e=e, f=f, x=x, rep=rep:
                        special.weighted_mp_conditions(a, e, f, x, rep=rep))


def _check_e_core_grid(ring):
    if not ring.has_involution:
        return
    for a in _elements(ring):
        for e in _weights(ring):
            rep = special.e_core(a, e)
            repf = special.f_dual_core(a, e)
            for x in ring.elements():
                label = "a=%s,e=%s,x=%s" % tuple(
                    ring.render(v) for v in (a, e, x))
                yield _checked(
                    label, lambda a=a, e=e, x=x, rep=rep, repf=repf: (
                        special.e_core_conditions(a, e, x, rep=rep),
                        special.f_dual_core_conditions(a, e, x, rep=repf)))


def _check_w_core_grid(ring):
    if not ring.has_involution:
        return
    for a in _elements(ring):
        for w in _elements(ring):
            rep = special.w_core(a, w)
            repv = special.v_dual_core(a, w)
            for x in ring.elements():
                label = "a=%s,w=%s,x=%s" % tuple(
                    ring.render(v) for v in (a, w, x))
                yield _checked(
                    label, lambda a=a, w=w, x=x, rep=rep, repv=repv: (
                        special.w_core_conditions(a, w, x, rep=rep),
                        special.v_dual_core_conditions(a, w, x, rep=repv)))


def _check_one_sided_core(ring):
    if not ring.has_involution:
        return
    for a in _elements(ring):
        for w in _elements(ring):
            label = "a=%s,w=%s" % (ring.render(a), ring.render(w))
            def run(a=a, w=w):
                right = [x for x in ring.elements()
                         if special.right_w_core_member(a, w, x)]
                left = [x for x in ring.elements()
                        if special.left_v_dual_core_member(a, w, x)]
                rep = special.right_w_core(a, w)
                if rep.exists != bool(right) or \
                        (rep.exists and rep.extra["members"] != right):
                    raise VerificationError("right w-core set mismatch")
                repl = special.left_v_dual_core(a, w)
                if repl.exists != bool(left) or \
                        (repl.exists and repl.extra["members"] != left):
                    raise VerificationError("left v-dual core set mismatch")
                wc = special.w_core(a, w)
                if wc.exists and wc.value not in right:
                    raise VerificationError(
                        "w-core inverse escapes the right w-core set")
                vd = special.v_dual_core(a, w)
                if vd.exists and vd.value not in left:
                    raise VerificationError(
                        "v-dual core inverse escapes the left set")
            yield _checked(label, run)


def _check_bc(ring):
    elems = _elements(ring)
    for a in elems:
        for b in elems:
            for c in elems:
                label = "a=%s,b=%s,c=%s" % tuple(
                    ring.render(v) for v in (a, b, c))
                def run(a=a, b=b, c=c):
                    cab = c * a * b
                    for g in ring.elements():
                        if cab * g * cab == cab:
                            special.bc_construction_clauses(a, b, c, g)
                    for flavor in special.BC_FLAVORS:
                        rep = special.bc_inverse(a, b, c, flavor)
                        cons = special._bc_constraints(b, c, flavor)
                        want = [x for x in ring.elements()
                                if satisfies(a, x, ("2",))
                                and _check_constraints_on_x(
                                    a, x, cons, False)]
                        if rep.exists != (len(want) == 1) or \
                                (rep.exists and rep.value != want[0]):
                            raise VerificationError(
                                "(b,c) %s inverse disagrees with brute "
                                "force" % flavor)
                    ctx = special.bc_equality_context(a, b, c)
                    for x in ring.elements():
                        special.bc_equality_clauses(a, b, c, x, ctx)
                yield _checked(label, run)


def _check_pq(ring):
    idems = _idempotents(ring)
    one = ring.one
    for a in _elements(ring):
        for p in idems:
            for q in idems:
                label = "a=%s,p=%s,q=%s" % tuple(
                    ring.render(v) for v in (a, p, q))
                def run(a=a, p=p, q=q):
                    ik = special.image_kernel_inverse(a, p, q)
                    want = [x for x in ring.elements()
                            if satisfies(a, x, ("2",))
                            and principal(x, RIGHT) == principal(p, RIGHT)
                            and annihilator(x, RIGHT)
                            == principal(q, RIGHT)]
                    if ik.exists != (len(want) == 1) or \
                            (ik.exists and ik.value != want[0]):
                        raise VerificationError(
                            "image-kernel inverse disagrees with brute "
                            "force")
                    dw = special.djordjevic_wei_inverse(a, p, q)
                    direct = [x for x in ring.elements()
                              if satisfies(a, x, ("2",))
                              and x * a == p and a * x == one - q]
                    if dw.exists != (len(direct) == 1) or \
                            (dw.exists and dw.value != direct[0]):
                        raise VerificationError(
                            "Djordjevic-Wei inverse disagrees with brute "
                            "force")
                    for x in ring.elements():
                        special.djordjevic_wei_clauses(a, p, q, x)
                yield _checked(label, run)


def _check_bott_duffin(ring):
    one = ring.one
    for a in _elements(ring):
        for p in _idempotents(ring):
            label = "a=%s,p=%s" % (ring.render(a), ring.render(p))
            def run(a=a, p=p):
                rep = special.bott_duffin_inverse(a, p)
                invertible = is_invertible(one - p + a * p)
                if rep.exists != invertible:
                    raise VerificationError(
                        "Bott-Duffin existence mismatch")
                rep2 = special.bott_duffin_inverse(a, p, p)
                if rep.exists and (not rep2.exists
                                   or rep2.value != rep.value):
                    raise VerificationError(
                        "Bott-Duffin (p, 1-p) inverse mismatch")
            yield _checked(label, run)


def _check_regular_idempotent_ideals(ring):
    for a in _elements(ring):
        yield _checked(
            "a=%s" % ring.render(a),
            lambda a=a: special.regular_reflexive_iff_idempotent_ideals(a))


def _check_named_inverses(ring):
    for a in _elements(ring):
        label = "a=%s" % ring.render(a)
        def run(a=a):
            grp = group_inverse(a)
            want = brute_force_set(
                a, lambda x: satisfies(a, x, ("1", "2", "5")))
            if grp.exists != (len(want) == 1) or \
                    (grp.exists and grp.value != want[0]):
                raise VerificationError("group inverse mismatch")
            drz = drazin_inverse(a)
            k = drazin_index(a)
            if (drz.exists != (k is not None)):
                raise VerificationError("Drazin existence mismatch")
            if drz.exists:
                wantd = brute_force_set(
                    a, lambda x: satisfies(a, x, ("2", "5", "1k"),
                                           k=max(k, 1)))
                if wantd != [drz.value]:
                    raise VerificationError("Drazin inverse mismatch")
            if ring.has_involution:
                for rep, eqs in (
                        (moore_penrose(a), ("1", "2", "3", "4")),
                        (core_inverse(a), ("1", "2", "3", "6", "7")),
                        (dual_core_inverse(a), ("1", "2", "4", "8", "9"))):
                    want = brute_force_set(
                        a, lambda x, eqs=eqs: satisfies(a, x, eqs))
                    if rep.exists != (len(want) == 1) or \
                            (rep.exists and rep.value != want[0]):
                        raise VerificationError(
                            "%s disagrees with brute force" % rep.name)
        yield _checked(label, run)


CATALOG = (
    TheoremCase("T-invertible-lemma",
                "all elements a",
                _check_invertible),
    TheoremCase("L-idempotent-ideals",
                "all idempotent pairs (p, q)",
                _check_idempotent_ideals),
    TheoremCase("L-regular-ideal-inclusions",
                "all element pairs (a, b)",
                _check_regular_inclusions),
    TheoremCase("L-star-ideal-duality",
                "all element pairs (a, b); *-rings only",
                _check_star_ideal_duality),
    TheoremCase("L-orthogonal-range",
                "all elements a; *-rings only",
                _check_orthogonal_range),
    TheoremCase("L-projector-algebra",
                "all direct-sum ideal pairs x all elements",
                _check_projector_algebra),
    TheoremCase("L-inverse-product-ideals",
                "all pairs (a, x)",
                _check_inverse_product_ideals),
    TheoremCase("L-core-equation-systems",
                "all elements a (equation subsets {6,7},{3,6,7},...)",
                _check_core_equation_systems),
    TheoremCase("L-inner-of-product",
                "all pairs (a, b) x all inner inverses of ab",
                _check_inner_of_product),
    TheoremCase("R-reflexive-upgrade",
                "all pairs (a, x)",
                _check_reflexive_remark),
    TheoremCase("T-1I-projectors", "all pairs (a, x)",
                _projector_block_checker("one_inverse")),
    TheoremCase("T-2I-projectors", "all pairs (a, x)",
                _projector_block_checker("outer_inverse")),
    TheoremCase("T-12I-projectors", "all pairs (a, x)",
                _projector_block_checker("reflexive_inverse")),
    TheoremCase("T-15-projectors", "all pairs (a, x)",
                _projector_block_checker("commuting_inverse")),
    TheoremCase("T-drazin-projectors", "all pairs (a, x)",
                _projector_block_checker("drazin")),
    TheoremCase("T-one-prescribed-families",
                "all a x inner inverses x 8 constraint shapes",
                _check_one_families),
    TheoremCase("P-one-solution-sets",
                "all a x inner inverses x 8 constraint shapes",
                _check_one_solution_sets),
    TheoremCase("T-mitsch-order",
                "order axioms over all element triples",
                _check_mitsch_order),
    TheoremCase("T-mitsch-extremes",
                "all a x outer inverses x 4 two-ideal shapes",
                _check_mitsch_extremes),
    TheoremCase("T-2I-prescribed",
                "all a x ideal pairs from the full ideal lattice",
                lambda ring: _check_prescribed(ring, False)),
    TheoremCase("T-12I-prescribed",
                "all a x ideal pairs from the full ideal lattice",
                lambda ring: _check_prescribed(ring, True)),
    TheoremCase("T-12I-clause-grid",
                "all pairs (a, x) x 4 two-ideal shapes",
                _check_reflexive_clause_grid),
    TheoremCase("T-star-classes",
                "all a x 7 equation classes; *-rings only",
                _check_star_classes),
    TheoremCase("T-weighted-mp-grid",
                "all a x weight pairs x all x; *-rings only",
                _check_weighted_mp_grid),
    TheoremCase("T-e-core-grid",
                "all a x weights x all x; *-rings only",
                _check_e_core_grid),
    TheoremCase("T-w-core-grid",
                "all a x w x all x; *-rings only",
                _check_w_core_grid),
    TheoremCase("T-one-sided-core",
                "all pairs (a, w); *-rings only",
                _check_one_sided_core),
    TheoremCase("T-bc-inverses",
                "all triples (a, b, c), all inner inverses of cab, all x",
                _check_bc),
    TheoremCase("T-pq-inverses",
                "all a x idempotent pairs x all x",
                _check_pq),
    TheoremCase("T-bott-duffin",
                "all a x idempotents p",
                _check_bott_duffin),
    TheoremCase("T-regular-idempotent-ideals",
                "all elements a",
                _check_regular_idempotent_ideals),
    TheoremCase("O-named-inverses",
                "all elements a, named inverses vs brute force",
                _check_named_inverses),
)

CATALOG_BY_ID = {case.id: case for case in CATALOG}


def verify(theorem_id, ring, max_cases=None, max_seconds=None):
    """Run one catalog entry exhaustively; first counterexample wins."""
    if theorem_id not in CATALOG_BY_ID:
        raise PreconditionError(
            "unknown theorem id %r; catalog: %s" % (
                theorem_id, ", ".join(sorted(CATALOG_BY_ID))))
    if not ring.finite:
        raise NotEnumerableError("verification needs a finite ring")
    case = CATALOG_BY_ID[theorem_id]
    start = time.monotonic()
    checked = 0
    counterexample = None
    complete = True
    for label, ok in case.checker(ring):
        checked += 1
        if not ok:
            counterexample = label
            break
        if max_cases is not None and checked >= max_cases:
            complete = False
            break
        if max_seconds is not None and \
                time.monotonic() - start > max_seconds:
            complete = False
            break
    return VerificationReport(ring.short_name, theorem_id, checked,
                              counterexample, time.monotonic() - start,
                              complete)


def verify_all(ring, theorem_ids=None, max_cases=None, max_seconds=None):
    """Run a list of catalog entries (default: the whole catalog)."""
    if theorem_ids is None:
        theorem_ids = [case.id for case in CATALOG]
    return [verify(tid, ring, max_cases=max_cases,
                   max_seconds=max_seconds) for tid in theorem_ids]
