"""One-sided ideals: principal ideals, annihilators, and lattice operations.

Two representations:
  * extensional -- frozenset of elements; canonical for Z_n;
  * subspace    -- canonical for matrix rings.  A right ideal of M_k(F) is
    {x : colspace(x) <= V} for a subspace V of F^k; a left ideal is
    {x : rowspace(x) <= W}.  All lattice operations reduce to exact
    subspace computations.
"""

from itertools import product

from .errors import (NotEnumerableError, PreconditionError, RingMismatchError,
                     UnsupportedInvolutionError)
from .linalg import (Subspace, full_subspace, identity, is_direct_sum,
                     mat_mul, projection_matrix, transpose, zero_subspace)
from .rings import MatrixRing, ModularRing, RingElement

RIGHT = "right"
LEFT = "left"


class SidedIdeal:
    """A left or right ideal of a ring."""

    __slots__ = ("ring", "side", "elems", "subspace")

    def __init__(self, ring, side, elems=None, subspace=None):
        if side not in (LEFT, RIGHT):
            raise ValueError("side must be 'left' or 'right'")
        self.ring = ring
        self.side = side
        self.elems = elems          # frozenset of RingElement, or None
        self.subspace = subspace    # Subspace, or None
        if (elems is None) == (subspace is None):
            raise ValueError("exactly one representation required")

    # -- constructors --------------------------------------------------

    @classmethod
    def from_subspace(cls, ring, side, subspace):
        if not isinstance(ring, MatrixRing):
            raise PreconditionError("subspace ideals need a matrix ring")
        return cls(ring, side, subspace=subspace)

    @classmethod
    def from_elements(cls, ring, side, elements):
        """The smallest one-sided ideal containing the given elements."""
        if isinstance(ring, MatrixRing):
            field, k = ring.field, ring.k
            vecs = []
            for a in elements:
                rows = a.payload if side == RIGHT else transpose(a.payload)
                vecs.extend(transpose(rows))  # columns span col/rowspace
            return cls(ring, side, subspace=Subspace(field, k, tuple(vecs)))
        # extensional closure: additive span of one-sided multiples
        gens = set(elements)
        multiples = {g * r if side == RIGHT else r * g
                     for g in gens for r in ring.elements()}
        closure = {ring.zero}
        frontier = [ring.zero]
        while frontier:
            x = frontier.pop()
            for m in multiples:
                y = x + m
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        return cls(ring, side, elems=frozenset(closure))

    # -- basic predicates ----------------------------------------------

    @property
    def is_extensional(self):
        return self.elems is not None

    def contains(self, a):
        if a.ring != self.ring:
            raise RingMismatchError("element of a different ring")
        if self.is_extensional:
            return a in self.elems
        v = self.subspace
        rows = a.payload if self.side == RIGHT else transpose(a.payload)
        return all(v.contains(col) for col in transpose(rows))

    def is_zero(self):
        if self.is_extensional:
            return self.elems == frozenset({self.ring.zero})
        return self.subspace.dim == 0

    def is_full(self):
        if self.is_extensional:
            return len(self.elems) == self.ring.size
        return self.subspace.dim == self.subspace.ambient

    def is_subideal_of(self, other):
        self._compatible(other)
        if self.is_extensional:
            return self.elems <= other.elems
        return self.subspace.is_subspace_of(other.subspace)

    def _compatible(self, other):
        if other.ring != self.ring:
            raise RingMismatchError("ideals of different rings")
        if other.side != self.side:
            raise PreconditionError("ideals of different sides")

    def __eq__(self, other):
        if not isinstance(other, SidedIdeal):
            return NotImplemented
        if other.ring != self.ring or other.side != self.side:
            return False
        if self.is_extensional != other.is_extensional:
            return frozenset(self.members()) == frozenset(other.members())
        if self.is_extensional:
            return self.elems == other.elems
        return self.subspace == other.subspace

    def __hash__(self):
        if self.is_extensional:
            return hash((self.ring, self.side, self.elems))
        return hash((self.ring, self.side, self.subspace))

    def __repr__(self):
        tag = "R" if self.side == RIGHT else "L"
        if self.is_extensional:
            return "Ideal[%s](%d elems)" % (tag, len(self.elems))
        return "Ideal[%s](dim %d)" % (tag, self.subspace.dim)

    # -- lattice operations ----------------------------------------------

    def sum(self, other):
        self._compatible(other)
        if self.is_extensional:
            elems = frozenset(x + y for x in self.elems for y in other.elems)
            return SidedIdeal(self.ring, self.side, elems=elems)
        return SidedIdeal(self.ring, self.side,
                          subspace=self.subspace.sum(other.subspace))

    def intersect(self, other):
        self._compatible(other)
        if self.is_extensional:
            return SidedIdeal(self.ring, self.side,
                              elems=self.elems & other.elems)
        return SidedIdeal(self.ring, self.side,
                          subspace=self.subspace.intersect(other.subspace))

    def members(self):
        """All elements in canonical order (finite rings only)."""
        ring = self.ring
        if self.is_extensional:
            return sorted(self.elems, key=ring.sort_key)
        if not ring.finite:
            raise NotEnumerableError("ideal of an infinite ring")
        field, k = ring.field, ring.k
        cols = self.subspace.vectors()
        out = []
        for choice in product(cols, repeat=k):
            rows = transpose(choice)
            if self.side == LEFT:
                rows = transpose(rows)
            out.append(RingElement(ring, tuple(tuple(r) for r in rows)))
        return sorted(set(out), key=ring.sort_key)

    def size(self):
        if self.is_extensional:
            return len(self.elems)
        ring = self.ring
        if not ring.finite:
            raise NotEnumerableError("ideal of an infinite ring")
        return len(self.subspace.vectors()) ** ring.k


# -- principal ideals and annihilators ---------------------------------

def principal(a, side):
    """aR (side='right') or Ra (side='left')."""
    ring = a.ring
    if isinstance(ring, MatrixRing):
        field, k = ring.field, ring.k
        rows = a.payload if side == RIGHT else transpose(a.payload)
        v = Subspace(field, k, transpose(rows))
        return SidedIdeal(ring, side, subspace=v)
    elems = frozenset(a * r for r in ring.elements())
    return SidedIdeal(ring, side, elems=elems)


def annihilator(a, side):
    """rann(a) = {r : ar = 0} (right) or lann(a) = {r : ra = 0} (left)."""
    ring = a.ring
    if isinstance(ring, MatrixRing):
        from .linalg import nullspace_basis
        field, k = ring.field, ring.k
        m = a.payload if side == RIGHT else transpose(a.payload)
        v = Subspace(field, k, nullspace_basis(field, m))
        return SidedIdeal(ring, side, subspace=v)
    if side == RIGHT:
        elems = frozenset(r for r in ring.elements() if a * r == ring.zero)
    else:
        elems = frozenset(r for r in ring.elements() if r * a == ring.zero)
    return SidedIdeal(ring, side, elems=elems)


def ideal_annihilator(ideal, side):
    """Annihilator of a whole ideal, on the given side.

    rann(S) = {r : sr = 0 for all s in S}; lann(S) = {r : rs = 0}.
    The result is a right ideal when side='right', left when side='left'.
    """
    ring = ideal.ring
    if isinstance(ring, MatrixRing):
        v = ideal.subspace.perp()
        # rann of a left ideal {rowspace<=W} is {colspace<=W^perp}; lann of a
        # right ideal {colspace<=V} is {rowspace<=V^perp}.  Same-side
        # annihilators reduce to these through the full/zero cases.
        if side == RIGHT and ideal.side == LEFT:
            return SidedIdeal(ring, RIGHT, subspace=v)
        if side == LEFT and ideal.side == RIGHT:
            return SidedIdeal(ring, LEFT, subspace=v)
        # annihilating a right ideal on the right (or left on left): a right
        # ideal kills colspaces, so sr=0 for all s iff V=0 or r=0.
        k, field = ring.k, ring.field
        if ideal.subspace.dim == 0:
            return SidedIdeal(ring, side, subspace=full_subspace(field, k))
        return SidedIdeal(ring, side, subspace=zero_subspace(field, k))
    if side == RIGHT:
        elems = frozenset(r for r in ring.elements()
                          if all(s * r == ring.zero for s in ideal.elems))
    else:
        elems = frozenset(r for r in ring.elements()
                          if all(r * s == ring.zero for s in ideal.elems))
    return SidedIdeal(ring, side, elems=elems)


def zero_ideal(ring, side):
    if isinstance(ring, MatrixRing):
        return SidedIdeal(ring, side,
                          subspace=zero_subspace(ring.field, ring.k))
    return SidedIdeal(ring, side, elems=frozenset({ring.zero}))


def full_ideal(ring, side):
    if isinstance(ring, MatrixRing):
        return SidedIdeal(ring, side,
                          subspace=full_subspace(ring.field, ring.k))
    return SidedIdeal(ring, side, elems=frozenset(ring.elements()))


# -- maps on ideals ----------------------------------------------------

def multiply_ideal(a, ideal):
    """a*S for a right ideal S, or S*a for a left ideal S."""
    ring = a.ring
    if isinstance(ring, MatrixRing):
        m = a.payload if ideal.side == RIGHT else transpose(a.payload)
        return SidedIdeal(ring, ideal.side, subspace=ideal.subspace.image(m))
    if ideal.side == RIGHT:
        elems = frozenset(a * s for s in ideal.elems)
    else:
        elems = frozenset(s * a for s in ideal.elems)
    return SidedIdeal(ring, ideal.side, elems=elems)


def phi_preimage(a, ideal):
    """Preimage of an ideal under left multiplication by a (right ideals),
    or under right multiplication by a (left ideals)."""
    ring = a.ring
    if isinstance(ring, MatrixRing):
        m = a.payload if ideal.side == RIGHT else transpose(a.payload)
        return SidedIdeal(ring, ideal.side,
                          subspace=ideal.subspace.preimage(m))
    if ideal.side == RIGHT:
        elems = frozenset(r for r in ring.elements() if (a * r) in ideal.elems)
    else:
        elems = frozenset(r for r in ring.elements() if (r * a) in ideal.elems)
    return SidedIdeal(ring, ideal.side, elems=elems)


# -- direct sums and projector units -----------------------------------

class DirectSumWitness:
    """Witness for R = S (+) T with an exact decomposition map."""

    __slots__ = ("first", "second", "_proj")

    def __init__(self, first, second, proj=None):
        self.first = first
        self.second = second
        self._proj = proj  # projection matrix for subspace ideals

    def decompose(self, r):
        ring = r.ring
        if self._proj is not None:
            if self.first.side == RIGHT:
                s = RingElement(ring, mat_mul(ring.field, self._proj,
                                              r.payload))
            else:
                s = RingElement(ring, mat_mul(ring.field, r.payload,
                                              transpose(self._proj)))
            return s, r - s
        for s in self.first.elems:
            t = r - s
            if t in self.second.elems:
                return s, t
        raise PreconditionError("decomposition failed")  # pragma: no cover

    def unit(self):
        """rho_{S,T}(1): the image of 1 under the projector onto S along T."""
        return self.decompose(self.first.ring.one)[0]


def direct_sum(s, t):
    """Return a DirectSumWitness if R = s (+) t, else None."""
    s._compatible(t)
    ring = s.ring
    if not s.is_extensional:
        u, v = s.subspace, t.subspace
        if not is_direct_sum(u, v):
            return None
        return DirectSumWitness(s, t, proj=projection_matrix(u, v))
    if not s.intersect(t).is_zero():
        return None
    if len(s.elems) * len(t.elems) != ring.size:
        return None
    if not s.sum(t).is_full():
        return None
    return DirectSumWitness(s, t)


def complement(ideal):
    """Some ideal T with R = ideal (+) T, or None if no complement exists."""
    ring = ideal.ring
    if not ideal.is_extensional:
        comp = ideal.subspace.complement()
        return SidedIdeal(ring, ideal.side, subspace=comp)
    for cand in all_ideals(ring, ideal.side):
        if direct_sum(ideal, cand) is not None:
            return cand
    return None


def orthogonal(i, j, flavor=RIGHT):
    """Star-orthogonality: x* y = 0 for all pairs (flavor=right),
    or x y* = 0 (flavor=left).

    For matching-side ideals of a matrix ring this reduces to a bilinear
    test on the subspace bases; when the flavor does not match the ideal
    sides only degenerate (zero) ideals are orthogonal.
    """
    if flavor not in (RIGHT, LEFT):
        raise ValueError("flavor must be 'right' or 'left'")
    ring = i.ring
    if i.ring is not j.ring:
        raise RingMismatchError("ideals live in different rings")
    if not ring.has_involution:
        raise UnsupportedInvolutionError(
            "orthogonality needs an involution; %s has none" % ring.short_name)
    if i.side != j.side or i.side != flavor:
        return i.is_zero() or j.is_zero()
    u, v = i.subspace, j.subspace
    if u.dim == 0 or v.dim == 0:
        return True
    prods = mat_mul(ring.field, u.basis, transpose(v.basis))
    return all(x == ring.field.zero for row in prods for x in row)


# -- enumeration of the ideal lattice -----------------------------------

def all_subspaces(field, n):
    """All subspaces of F^n (finite F), smallest dimension first."""
    if not field.finite:
        raise NotEnumerableError("infinite field")
    from .linalg import zero_subspace as zs
    vectors = [v for v in full_subspace(field, n).vectors()
               if any(x != field.zero for x in v)]
    seen = {zs(field, n)}
    frontier = [zs(field, n)]
    while frontier:
        sp = frontier.pop()
        for v in vectors:
            if not sp.contains(v):
                bigger = Subspace(field, n, sp.basis + (v,))
                if bigger not in seen:
                    seen.add(bigger)
                    frontier.append(bigger)
    return sorted(seen, key=lambda s: (s.dim, s.basis))


def all_ideals(ring, side):
    """Every one-sided ideal of a finite backend, canonical order."""
    if isinstance(ring, ModularRing):
        out = []
        for d in range(1, ring.n + 1):
            if ring.n % d == 0:
                out.append(principal(ring.element(d), side))
        # dedupe, smallest first
        uniq = []
        for i in sorted(out, key=lambda s: len(s.elems)):
            if i not in uniq:
                uniq.append(i)
        return uniq
    if isinstance(ring, MatrixRing) and ring.finite:
        return [SidedIdeal(ring, side, subspace=sp)
                for sp in all_subspaces(ring.field, ring.k)]
    raise NotEnumerableError("ideal lattice of %s" % ring.short_name)
