"""Projectors onto ideal direct summands.

A projector rho_{S,T} (S, T one-sided ideals of the same side with
R = S (+) T) is the idempotent additive endomorphism fixing S and killing T.
For right ideals rho(r) = rho(1) * r, so the whole map is carried by the
single element rho(1); for left ideals rho(r) = r * rho(1).
"""

from .errors import PreconditionError, UnsupportedInvolutionError
from .ideals import RIGHT, annihilator, direct_sum, principal


class Projector:
    """rho_{S,T}: projector onto `onto` along `along`."""

    __slots__ = ("onto", "along", "witness", "unit")

    def __init__(self, onto, along, witness):
        self.onto = onto
        self.along = along
        self.witness = witness
        self.unit = witness.unit()  # rho(1)

    @property
    def side(self):
        return self.onto.side

    def apply(self, r):
        if self.side == RIGHT:
            return self.unit * r
        return r * self.unit

    def complementary(self):
        return projector(self.along, self.onto)

    def is_unit_idempotent(self):
        return self.unit * self.unit == self.unit

    @property
    def unit_image(self):
        return self.unit

    def orthogonality(self):
        """Flags {right_orthogonal, left_orthogonal}: S perp T per flavor."""
        from .ideals import LEFT, orthogonal
        return {
            "right_orthogonal": orthogonal(self.onto, self.along, RIGHT),
            "left_orthogonal": orthogonal(self.onto, self.along, LEFT),
        }

    def is_orthogonal(self):
        """Whether rho(1) is symmetric (needs an involution)."""
        ring = self.onto.ring
        if not ring.has_involution:
            raise UnsupportedInvolutionError(
                "%s has no involution" % ring.short_name)
        return self.unit.star == self.unit

    def __repr__(self):
        return "Projector(onto=%r, along=%r)" % (self.onto, self.along)


def projector(s, t):
    """rho_{S,T}, or None when R != S (+) T."""
    w = direct_sum(s, t)
    if w is None:
        return None
    return Projector(s, t, w)


projector_from_sum = projector


def projector_orthogonality(rho):
    """Flags {right_orthogonal, left_orthogonal} for rho_{S,T}."""
    return rho.orthogonality()


def projector_from_idempotent(p, side):
    """phi_p (right) / p-phi (left) as a projector; p must be idempotent."""
    if p * p != p:
        raise PreconditionError("element is not idempotent")
    if side == RIGHT:
        onto = principal(p, RIGHT)
        along = annihilator(p, RIGHT)
    else:
        onto = principal(p, side)
        along = annihilator(p, side)
    pr = projector(onto, along)
    if pr is None:  # cannot happen: pR (+) rann(p) = R for idempotent p
        raise PreconditionError("idempotent did not split the ring")
    return pr


def phi_equals_projector(b, s, t):
    """Decide phi_b = rho_{S,T} (right ideals) or b-phi = rho (left ideals).

    Left multiplication by b agrees with the projector iff the direct sum
    exists and b equals rho(1); this turns map equality into one element
    comparison.
    """
    w = direct_sum(s, t)
    if w is None:
        return False
    return b == w.unit()
