"""Exact linear algebra over Q and prime fields.

Matrices are tuples of row tuples; scalars are Fraction (over Q) or ints in
range(p) (over GF(p)).  Everything here is exact -- no floats anywhere.
"""

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Rationals:
    """The field Q with Fraction scalars."""

    finite = False
    name = "q"

    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, v):
        return Fraction(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def parse(self, s):
        return Fraction(str(s))

    def render(self, v):
        return str(v)

    def sort_key(self, v):
        return v

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) with int scalars in range(p)."""

    finite = True

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("field order must be prime, got %r" % (p,))
        self.p = p
        self.name = "f%d" % p
        self.zero = 0
        self.one = 1 % p

    def convert(self, v):
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def parse(self, s):
        return int(str(s)) % self.p

    def render(self, v):
        return str(v)

    def sort_key(self, v):
        return v

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()


# --- basic matrix ops (tuple-of-row-tuples) ---

def mat_shape(a):
    return len(a), len(a[0]) if a else 0

def identity(field, n):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n))
                 for i in range(n))

def zero_matrix(field, rows, cols):
    return tuple(tuple(field.zero for _ in range(cols)) for _ in range(rows))

def mat_add(field, a, b):
    return tuple(tuple(field.add(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))

def mat_sub(field, a, b):
    return tuple(tuple(field.sub(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))

def mat_neg(field, a):
    return tuple(tuple(field.neg(x) for x in r) for r in a)

def mat_mul(field, a, b):
    bt = transpose(b)
    out = []
    for ra in a:
        row = []
        for cb in bt:
            s = field.zero
            for x, y in zip(ra, cb):
                s = field.add(s, field.mul(x, y))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)

def mat_scale(field, c, a):
    return tuple(tuple(field.mul(c, x) for x in r) for r in a)

def transpose(a):
    return tuple(zip(*a)) if a else ()

def mat_vec(field, a, v):
    return tuple(
        _dot(field, row, v) for row in a
    )

def _dot(field, u, v):
    s = field.zero
    for x, y in zip(u, v):
        s = field.add(s, field.mul(x, y))
    return s


def rref(field, rows):
    """Reduced row echelon form.  Returns (rref_rows, pivot_columns).

    rref_rows keeps the original row count (zero rows at the bottom).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c] != field.zero:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = field.inv(m[r][c])
        m[r] = [field.mul(pv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != field.zero:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in m), tuple(pivots)


def rank(field, a):
    return len(rref(field, a)[1])


def nullspace_basis(field, a):
    """Basis (tuple of vectors) of the right nullspace {v : a v = 0}."""
    nrows, ncols = mat_shape(a)
    if ncols == 0:
        return ()
    r, pivots = rref(field, a)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(r[i][f])
        basis.append(tuple(v))
    return tuple(basis)


def solve(field, a, b):
    """One solution x of a x = b (vectors), or None if inconsistent."""
    nrows, ncols = mat_shape(a)
    aug = tuple(tuple(row) + (bv,) for row, bv in zip(a, b))
    r, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][ncols]
    return tuple(x)


def solve_matrix(field, a, b):
    """One solution X of a X = b (matrix right-hand side), or None."""
    cols = []
    for j in range(len(b[0])):
        col = tuple(row[j] for row in b)
        x = solve(field, a, col)
        if x is None:
            return None
        cols.append(x)
    return transpose(tuple(cols))


def mat_inverse(field, a):
    """Inverse of a square matrix, or None if singular."""
    n, m = mat_shape(a)
    if n != m:
        raise ValueError("matrix is not square")
    aug = tuple(row + irow for row, irow in zip(a, identity(field, n)))
    r, pivots = rref(field, aug)
    if tuple(pivots)[:n] != tuple(range(n)):
        return None
    return tuple(row[n:] for row in r[:n])


class Subspace:
    """A subspace of F^n held as a canonical RREF row basis."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field, ambient, basis=()):
        self.field = field
        self.ambient = ambient
        r, pivots = rref(field, basis) if basis else ((), ())
        self.basis = tuple(r[i] for i in range(len(pivots)))

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        return cls(field, ambient, tuple(tuple(v) for v in vectors))

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        stacked = self.basis + (tuple(v),)
        return rank(self.field, stacked) == self.dim

    def is_subspace_of(self, other):
        if self.dim == 0:
            return True
        stacked = other.basis + self.basis
        return rank(self.field, stacked) == other.dim

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)

    def sum(self, other):
        return Subspace(self.field, self.ambient, self.basis + other.basis)

    def perp(self):
        """Orthogonal complement w.r.t. the standard bilinear form."""
        if self.dim == 0:
            basis = identity(self.field, self.ambient)
            return Subspace(self.field, self.ambient, basis)
        return Subspace(self.field, self.ambient,
                        nullspace_basis(self.field, self.basis))

    def intersect(self, other):
        # (U + V)^perp = U^perp cap V^perp and perp is an involution, so
        # U cap V = (U^perp + V^perp)^perp; exact over any field.
        return self.perp().sum(other.perp()).perp()

    def complement(self):
        """A complement built by greedy standard-basis extension."""
        field = self.field
        current = list(self.basis)
        cur_rank = self.dim
        extra = []
        for i in range(self.ambient):
            if cur_rank == self.ambient:
                break
            e = tuple(field.one if j == i else field.zero
                      for j in range(self.ambient))
            if rank(field, tuple(current) + (e,)) > cur_rank:
                current.append(e)
                extra.append(e)
                cur_rank += 1
        return Subspace(field, self.ambient, tuple(extra))

    def image(self, a):
        """Image subspace {a v : v in self} for a matrix a."""
        vecs = tuple(mat_vec(self.field, a, v) for v in self.basis)
        return Subspace(self.field, len(a), vecs)

    def preimage(self, a):
        """Preimage {v : a v in self}."""
        perp_rows = self.perp().basis
        if not perp_rows:
            return Subspace(self.field, len(a[0]),
                            identity(self.field, len(a[0])))
        m = mat_mul(self.field, perp_rows, a)
        return Subspace(self.field, len(a[0]), nullspace_basis(self.field, m))

    def vectors(self):
        """All vectors of the subspace (finite fields only), canonical order."""
        field = self.field
        if not field.finite:
            raise ValueError("cannot enumerate a subspace over an infinite field")
        from itertools import product
        out = set()
        for coeffs in product(field.elements(), repeat=self.dim):
            v = [field.zero] * self.ambient
            for c, b in zip(coeffs, self.basis):
                for i, x in enumerate(b):
                    v[i] = field.add(v[i], field.mul(c, x))
            out.add(tuple(v))
        if not out:
            out.add(tuple(field.zero for _ in range(self.ambient)))
        return sorted(out, key=lambda v: tuple(field.sort_key(x) for x in v))


def zero_subspace(field, ambient):
    return Subspace(field, ambient)


def full_subspace(field, ambient):
    return Subspace(field, ambient, identity(field, ambient))


def is_direct_sum(u, v):
    return (u.dim + v.dim == u.ambient
            and u.sum(v).dim == u.ambient)


def projection_matrix(u, v):
    """Matrix of the projection onto u along v; requires F^n = u (+) v."""
    field = u.field
    n = u.ambient
    if not is_direct_sum(u, v):
        raise ValueError("not a direct sum")
    cols = tuple(u.basis) + tuple(v.basis)
    m = transpose(cols)  # basis vectors as columns
    minv = mat_inverse(field, m)
    d = tuple(tuple(field.one if (i == j and i < u.dim) else field.zero
                    for j in range(n)) for i in range(n))
    return mat_mul(field, mat_mul(field, m, d), minv)
