"""Generalized inverses defined by equation systems.

Equation tokens (a is the subject, x the candidate inverse):
  1: axa = a        2: xax = x        3: (ax)* = ax     4: (xa)* = xa
  5: ax = xa        6: xa^2 = a       7: ax^2 = x
  8: a^2x = a       9: x^2a = x
  1k: xa^(k+1) = a^k   (k given separately)
  k1: a^(k+1)x = a^k

Named systems: inner {1}, outer {2}, reflexive {1,2}, group {1,2,5},
Drazin {2,5,1k}, Moore-Penrose {1,2,3,4}, core {1,2,3,6,7},
dual core {1,2,4,8,9}.
"""

from .errors import (NotEnumerableError, PreconditionError,
                     UnsupportedInvolutionError)
from .ideals import LEFT, RIGHT, annihilator, principal
from .linalg import mat_inverse, mat_mul, rank, rref, transpose
from .projectors import phi_equals_projector
from .rings import MatrixRing, RingElement

EQUATION_TOKENS = ("1", "2", "3", "4", "5", "6", "7", "8", "9", "1k", "k1")

NAMED_SYSTEMS = {
    "inner": ("1",),
    "outer": ("2",),
    "reflexive": ("1", "2"),
    "group": ("1", "2", "5"),
    "drazin": ("2", "5", "1k"),
    "moore-penrose": ("1", "2", "3", "4"),
    "core": ("1", "2", "3", "6", "7"),
    "dual-core": ("1", "2", "4", "8", "9"),
}


def parse_equations(spec):
    """Parse '1,2,5' or a named system into a tuple of tokens."""
    spec = spec.strip().lower()
    if spec in NAMED_SYSTEMS:
        return NAMED_SYSTEMS[spec]
    toks = tuple(t.strip() for t in spec.split(",") if t.strip())
    for t in toks:
        if t not in EQUATION_TOKENS:
            raise ValueError("unknown equation token %r" % t)
    return toks


def satisfies(a, x, equations, k=None):
    """Check every listed equation for the pair (a, x)."""
    ring = a.ring
    for eq in equations:
        if eq == "1":
            ok = a * x * a == a
        elif eq == "2":
            ok = x * a * x == x
        elif eq == "3":
            if not ring.has_involution:
                raise UnsupportedInvolutionError(
                    "equation (3) needs an involution")
            ax = a * x
            ok = ax.star == ax
        elif eq == "4":
            if not ring.has_involution:
                raise UnsupportedInvolutionError(
                    "equation (4) needs an involution")
            xa = x * a
            ok = xa.star == xa
        elif eq == "5":
            ok = a * x == x * a
        elif eq == "6":
            ok = x * a * a == a
        elif eq == "7":
            ok = a * x * x == x
        elif eq == "8":
            ok = a * a * x == a
        elif eq == "9":
            ok = x * x * a == x
        elif eq == "1k":
            if k is None:
                raise PreconditionError("equation 1k needs k")
            ok = x * a ** (k + 1) == a ** k
        elif eq == "k1":
            if k is None:
                raise PreconditionError("equation k1 needs k")
            ok = a ** (k + 1) * x == a ** k
        else:
            raise ValueError("unknown equation token %r" % eq)
        if not ok:
            return False
    return True


def iter_inverse_set(a, equations, k=None):
    """Stream the solutions x of the listed equations, canonical order."""
    ring = a.ring
    if not ring.finite:
        raise NotEnumerableError(
            "cannot enumerate solutions over %s" % ring.short_name)
    return (x for x in ring.elements() if satisfies(a, x, equations, k=k))


def enumerate_inverse_set(a, equations, k=None):
    """a{equations}: all solutions x in a finite ring, canonical order."""
    return list(iter_inverse_set(a, equations, k=k))


class InverseReport:
    """Outcome of a named-inverse computation."""

    __slots__ = ("name", "exists", "value", "satisfied", "reason", "extra")

    def __init__(self, name, exists, value=None, satisfied=(), reason="",
                 extra=None):
        self.name = name
        self.exists = exists
        self.value = value
        self.satisfied = tuple(satisfied)
        self.reason = reason
        self.extra = dict(extra or {})

    def __repr__(self):
        if self.exists:
            return "InverseReport(%s, value=%r)" % (self.name, self.value)
        return "InverseReport(%s, none: %s)" % (self.name, self.reason)

    def to_json(self):
        out = {"inverse": self.name, "exists": self.exists}
        if self.exists:
            out["value"] = self.value.ring.to_json(self.value)
            out["satisfied"] = list(self.satisfied)
        else:
            out["reason"] = self.reason
        for key, val in sorted(self.extra.items()):
            if isinstance(val, RingElement):
                val = val.ring.to_json(val)
            elif isinstance(val, (list, tuple)):
                val = [v.ring.to_json(v) if isinstance(v, RingElement)
                       else v for v in val]
            out[key] = val
        return out


def _validated(name, a, x, equations, k=None, extra=None):
    from .errors import VerificationError
    if not satisfies(a, x, equations, k=k):
        raise VerificationError(
            "constructed %s inverse fails its defining equations" % name)
    return InverseReport(name, True, x, satisfied=equations, extra=extra)


def any_inner(a):
    """Some x with axa = a, or None.  Constructive on matrix rings."""
    ring = a.ring
    if isinstance(ring, MatrixRing):
        return _matrix_inner(a)
    for x in ring.elements():
        if a * x * a == a:
            return x
    return None


def _matrix_inner(a):
    """Inner inverse of a square matrix over a field via P a Q = diag(I_r, 0).

    Row-reduce [a | I] to get E with E a in RREF, then clear the non-pivot
    columns with column operations collected in Q; the inner inverse is
    Q diag(I_r, 0) E, which exists for every matrix.
    """
    ring = a.ring
    field, n = ring.field, ring.k
    aug = tuple(row + irow
                for row, irow in zip(a.payload, ring.one.payload))
    red, pivots = rref(field, aug)
    pivots = tuple(p for p in pivots if p < n)
    e = tuple(row[n:] for row in red)
    m = [list(row[:n]) for row in red]
    q = [[field.one if i == j else field.zero for j in range(n)]
         for i in range(n)]
    for i, pc in enumerate(pivots):
        if pc != i:
            for row in m:
                row[i], row[pc] = row[pc], row[i]
            for row in q:
                row[i], row[pc] = row[pc], row[i]
        for j in range(n):
            if j != i and m[i][j] != field.zero:
                f = m[i][j]
                for row in m:
                    row[j] = field.sub(row[j], field.mul(f, row[i]))
                for row in q:
                    row[j] = field.sub(row[j], field.mul(f, row[i]))
    r = len(pivots)
    d = tuple(tuple(field.one if (i == j and i < r) else field.zero
                    for j in range(n)) for i in range(n))
    g = mat_mul(field, mat_mul(field, tuple(tuple(row) for row in q), d), e)
    x = RingElement(ring, g)
    if a * x * a != a:  # pragma: no cover - algebraic identity
        from .errors import VerificationError
        raise VerificationError("inner inverse construction failed")
    return x


def inner_inverse(a):
    x = any_inner(a)
    if x is None:
        return InverseReport("inner", False,
                             reason="a is not regular: a{1} is empty")
    return _validated("inner", a, x, ("1",))


def reflexive_inverse(a):
    """Some x in a{1,2}: x = a^(1) a a^(1) for any inner inverse."""
    g = any_inner(a)
    if g is None:
        return InverseReport("reflexive", False,
                             reason="a is not regular: a{1} is empty")
    return _validated("reflexive", a, g * a * g, ("1", "2"))


def drazin_index(a):
    """Least k >= 0 with rank/power stabilisation; None if no Drazin inverse.

    On matrix rings this is the least k with rank(a^k) = rank(a^(k+1)).
    On finite rings it is the least k for which a^k lies in the cycle of the
    power sequence of a (always defined).
    """
    ring = a.ring
    if isinstance(ring, MatrixRing) and not ring.finite:
        prev = rank(ring.field, ring.one.payload)
        power = ring.one
        for k in range(ring.k + 1):
            nxt = rank(ring.field, (power * a).payload)
            if nxt == prev:
                return k
            prev = nxt
            power = power * a
        return ring.k
    # finite ring: find preperiod of the power sequence a^0, a^1, ...
    seen = {}
    power = ring.one
    i = 0
    while power not in seen:
        seen[power] = i
        power = power * a
        i += 1
    return seen[power]


def drazin_inverse(a):
    ring = a.ring
    k = drazin_index(a)
    eqs = ("2", "5", "1k")
    if isinstance(ring, MatrixRing) and not ring.finite:
        l = max(k, 1)
        g = any_inner(a ** (2 * l + 1))
        x = a ** l * g * a ** l
        return _validated("drazin", a, x, eqs, k=k, extra={"index": k})
    for x in ring.elements():
        if satisfies(a, x, eqs, k=k):
            return InverseReport("drazin", True, x, satisfied=eqs,
                                 extra={"index": k})
    return InverseReport("drazin", False, reason="no Drazin inverse",
                         extra={"index": k})


def group_inverse(a):
    rep = drazin_inverse(a)
    idx = rep.extra.get("index")
    if not rep.exists:
        return InverseReport("group", False, reason=rep.reason,
                             extra=rep.extra)
    if idx is not None and idx > 1:
        return InverseReport(
            "group", False,
            reason="index is %d > 1, so a{1,2,5} is empty" % idx,
            extra=rep.extra)
    return _validated("group", a, rep.value, ("1", "2", "5"),
                      extra={"index": idx})


def _rank_factorization(a):
    """a = F G with F full column rank and G full row rank; returns (F, G)."""
    ring = a.ring
    field = ring.field
    red, pivots = rref(field, a.payload)
    pivots = tuple(p for p in pivots if p < ring.k)
    r = len(pivots)
    g = tuple(red[i] for i in range(r))
    f = tuple(tuple(row[p] for p in pivots) for row in a.payload)
    return f, g


def moore_penrose(a):
    """a^dagger: the unique element of a{1,2,3,4}, when it exists.

    Over a matrix ring, computed from a rank factorization a = F G as
    G* (G G*)^{-1} (F* F)^{-1} F*; over a finite field existence first
    requires rank(a* a) = rank(a) = rank(a a*).
    """
    ring = a.ring
    if not ring.has_involution:
        raise UnsupportedInvolutionError(
            "Moore-Penrose needs an involution; %s has none" % ring.short_name)
    field = ring.field
    astar = a.star
    r = rank(field, a.payload)
    if r == 0:
        return _validated("moore-penrose", a, ring.zero, ("1", "2", "3", "4"))
    if ring.finite:
        if (rank(field, (astar * a).payload) != r
                or rank(field, (a * astar).payload) != r):
            return InverseReport(
                "moore-penrose", False,
                reason="a{1,2,3,4} is empty: rank(a* a) or rank(a a*) "
                       "drops below rank(a)")
    f, g = _rank_factorization(a)
    ft, gt = transpose(f), transpose(g)
    ggt_inv = mat_inverse(field, mat_mul(field, g, gt))
    ftf_inv = mat_inverse(field, mat_mul(field, ft, f))
    if ggt_inv is None or ftf_inv is None:  # pragma: no cover - rank-tested
        from .errors import VerificationError
        raise VerificationError("Gram matrix singular after rank test")
    x = mat_mul(field, mat_mul(field, gt, ggt_inv),
                mat_mul(field, ftf_inv, ft))
    return _validated("moore-penrose", a, RingElement(ring, x),
                      ("1", "2", "3", "4"))


def _unique_by_enumeration(name, a, equations):
    for x in iter_inverse_set(a, equations):
        return _validated(name, a, x, equations)
    return InverseReport(name, False,
                         reason="no element satisfies {%s}"
                         % ",".join(equations))


def core_inverse(a):
    """a^core: the unique element of a{1,2,3,6,7}, when it exists.

    On finite rings by enumeration; over Q-matrices as a^# a a^dagger,
    re-validated against the defining equations.
    """
    ring = a.ring
    if not ring.has_involution:
        raise UnsupportedInvolutionError(
            "core inverse needs an involution; %s has none" % ring.short_name)
    eqs = ("1", "2", "3", "6", "7")
    if ring.finite:
        return _unique_by_enumeration("core", a, eqs)
    grp = group_inverse(a)
    if not grp.exists:
        return InverseReport("core", False, reason=grp.reason)
    mp = moore_penrose(a)
    if not mp.exists:  # pragma: no cover - MP always exists over Q
        return InverseReport("core", False, reason=mp.reason)
    return _validated("core", a, grp.value * a * mp.value, eqs)


def dual_core_inverse(a):
    """a_core: the unique element of a{1,2,4,8,9}, when it exists.

    On finite rings by enumeration; over Q-matrices as a^dagger a a^#,
    re-validated against the defining equations.
    """
    ring = a.ring
    if not ring.has_involution:
        raise UnsupportedInvolutionError(
            "dual core inverse needs an involution; %s has none"
            % ring.short_name)
    eqs = ("1", "2", "4", "8", "9")
    if ring.finite:
        return _unique_by_enumeration("dual-core", a, eqs)
    grp = group_inverse(a)
    if not grp.exists:
        return InverseReport("dual-core", False, reason=grp.reason)
    mp = moore_penrose(a)
    if not mp.exists:  # pragma: no cover - MP always exists over Q
        return InverseReport("dual-core", False, reason=mp.reason)
    return _validated("dual-core", a, mp.value * a * grp.value, eqs)


NAMED_INVERSES = {
    "inner": inner_inverse,
    "reflexive": reflexive_inverse,
    "group": group_inverse,
    "drazin": drazin_inverse,
    "moore-penrose": moore_penrose,
    "core": core_inverse,
    "dual-core": dual_core_inverse,
}


def classify_projector_relations(a, x):
    """Which projector characterizations of x relative to a hold.

    For each membership class ({1}, {2}, {1,2}, {1,5}, Drazin) the report
    carries the equation-level answer and the four equivalent projector
    identities for the maps r -> axr, r -> xar, r -> rax, r -> rxa; the
    two must agree, and disagreement raises VerificationError.
    """
    from .errors import VerificationError
    ring = a.ring
    ax, xa = a * x, x * a
    p, ann = principal, annihilator

    def block(flag, clauses):
        values = {flag} | set(clauses.values())
        if len(values) > 1:
            raise VerificationError(
                "projector characterization disagrees with the equations: "
                "%r vs %r" % (flag, clauses))
        return {"holds": flag, "clauses": clauses}

    out = {
        "ax_idempotent": ax * ax == ax,
        "xa_idempotent": xa * xa == xa,
    }
    out["one_inverse"] = block(satisfies(a, x, ("1",)), {
        "phi_ax=rho_{aR,rann(ax)}": phi_equals_projector(
            ax, p(a, RIGHT), ann(ax, RIGHT)),
        "phi_xa=rho_{xaR,rann(a)}": phi_equals_projector(
            xa, p(xa, RIGHT), ann(a, RIGHT)),
        "ax_phi=rho_{Rax,lann(a)}": phi_equals_projector(
            ax, p(ax, LEFT), ann(a, LEFT)),
        "xa_phi=rho_{Ra,lann(xa)}": phi_equals_projector(
            xa, p(a, LEFT), ann(xa, LEFT)),
    })
    out["outer_inverse"] = block(satisfies(a, x, ("2",)), {
        "phi_ax=rho_{axR,rann(x)}": phi_equals_projector(
            ax, p(ax, RIGHT), ann(x, RIGHT)),
        "phi_xa=rho_{xR,rann(xa)}": phi_equals_projector(
            xa, p(x, RIGHT), ann(xa, RIGHT)),
        "ax_phi=rho_{Rx,lann(ax)}": phi_equals_projector(
            ax, p(x, LEFT), ann(ax, LEFT)),
        "xa_phi=rho_{Rxa,lann(x)}": phi_equals_projector(
            xa, p(xa, LEFT), ann(x, LEFT)),
    })
    out["reflexive_inverse"] = block(satisfies(a, x, ("1", "2")), {
        "phi_ax=rho_{aR,rann(x)}": phi_equals_projector(
            ax, p(a, RIGHT), ann(x, RIGHT)),
        "phi_xa=rho_{xR,rann(a)}": phi_equals_projector(
            xa, p(x, RIGHT), ann(a, RIGHT)),
        "ax_phi=rho_{Rx,lann(a)}": phi_equals_projector(
            ax, p(x, LEFT), ann(a, LEFT)),
        "xa_phi=rho_{Ra,lann(x)}": phi_equals_projector(
            xa, p(a, LEFT), ann(x, LEFT)),
    })
    out["commuting_inverse"] = block(satisfies(a, x, ("1", "5")), {
        "phi_ax=phi_xa=rho_{aR,rann(a)}": ax == xa and phi_equals_projector(
            ax, p(a, RIGHT), ann(a, RIGHT)),
        "ax_phi=xa_phi=rho_{Ra,lann(a)}": ax == xa and phi_equals_projector(
            ax, p(a, LEFT), ann(a, LEFT)),
    })
    idx = drazin_index(a)
    l = max(idx, 1)
    al = a ** l
    rep = drazin_inverse(a) if ring.finite else None
    if ring.finite:
        is_drazin = rep.exists and rep.value == x
    else:
        is_drazin = satisfies(a, x, ("2", "5", "1k"), k=idx)
    out["drazin"] = block(is_drazin, {
        "phi_ax=phi_xa=rho_{a^lR,rann(a^l)}+xR<=a^lR":
            ax == xa
            and phi_equals_projector(ax, p(al, RIGHT), ann(al, RIGHT))
            and p(x, RIGHT).is_subideal_of(p(al, RIGHT)),
        "projectors+rann(a^l)<=rann(x)":
            ax == xa
            and phi_equals_projector(xa, p(al, LEFT), ann(al, LEFT))
            and ann(al, RIGHT).is_subideal_of(ann(x, RIGHT)),
    })
    out["drazin"]["index"] = idx
    if ring.has_involution:
        out["ax_symmetric"] = ax.star == ax
        out["xa_symmetric"] = xa.star == xa
    return out
