"""Exact dense linear algebra over a Field: RREF, nullspace, inverse, spans.

Matrices are lists of row lists holding canonical field elements.  Everything
here is desk-scale (dimensions up to a few dozen); clarity over speed.
"""

from __future__ import annotations

from .fields import Field


def zeros(field, rows, cols):
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(field, n):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def mat_copy(m):
    return [row[:] for row in m]


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(field, a, b):
    n, k, c = len(a), len(b), len(b[0])
    out = zeros(field, n, c)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j in range(k):
            x = ai[j]
            if x == field.zero:
                continue
            bj = b[j]
            for l in range(c):
                oi[l] = field.add(oi[l], field.mul(x, bj[l]))
    return out


def mat_vec(field, m, v):
    out = []
    for row in m:
        s = field.zero
        for a, x in zip(row, v):
            if a != field.zero and x != field.zero:
                s = field.add(s, field.mul(a, x))
        out.append(s)
    return out


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_scale(field, c, v):
    return [field.mul(c, x) for x in v]


def rref(field, rows):
    """Reduced row echelon form. Returns (rref_rows, pivot_columns).

    Zero rows are dropped; pivots are normalized to 1 and their columns
    cleared, so the output is the canonical basis of the row span.
    """
    m = [row[:] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != field.zero:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != field.zero:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(field, rows):
    return len(rref(field, rows)[0])


def nullspace(field, rows, ncols=None):
    """Canonical basis of {x : rows @ x = 0}, one vector per free column."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty system")
        ncols = len(rows[0])
    red, pivots = rref(field, rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for r, p in enumerate(pivots):
            v[p] = field.neg(red[r][free])
        basis.append(v)
    return basis


def inverse(field, m):
    """Inverse matrix, or None if singular."""
    n = len(m)
    aug = [m[i][:] + identity(field, n)[i] for i in range(n)]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red]


def solve_in_rowspan(field, rows, vec):
    """Coefficients x with x @ rows = vec, or None if vec is outside the span.

    `rows` must be linearly independent.
    """
    k = len(rows)
    if k == 0:
        return [] if all(x == field.zero for x in vec) else None
    cols = transpose(rows)  # ncols x k
    aug = [cols[i] + [vec[i]] for i in range(len(vec))]
    red, pivots = rref(field, aug)
    if k in pivots:
        return None  # inconsistent
    x = [field.zero] * k
    for r, p in enumerate(pivots):
        x[p] = red[r][k]
    # independence of rows guarantees consistency implies uniqueness
    return x


class Subspace:
    """A subspace of F^n in canonical reduced-row-echelon basis.

    Structural equality and hashing follow from canonicity, which makes
    subspaces usable as dedup keys in orbit enumeration.
    """

    def __init__(self, field: Field, ambient_dim: int, vectors=()):
        self.field = field
        self.ambient_dim = ambient_dim
        basis, pivots = rref(field, [list(v) for v in vectors])
        self.basis = tuple(tuple(row) for row in basis)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.basis)

    def key(self):
        return (self.field.key(), self.ambient_dim, self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def contains(self, vec) -> bool:
        v = list(vec)
        f = self.field
        for row, p in zip(self.basis, self.pivots):
            if v[p] != f.zero:
                c = v[p]
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return all(x == f.zero for x in v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def reduce(self, vec):
        """Residual of vec after eliminating this subspace's pivot coordinates."""
        v = list(vec)
        f = self.field
        for row, p in zip(self.basis, self.pivots):
            if v[p] != f.zero:
                c = v[p]
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return v

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Kernel trick: x @ U = y @ V solutions give the intersection."""
        f = self.field
        u, v = list(self.basis), list(other.basis)
        if not u or not v:
            return Subspace(f, self.ambient_dim)
        rows = []
        for c in range(self.ambient_dim):
            rows.append([u[i][c] for i in range(len(u))] + [f.neg(v[j][c]) for j in range(len(v))])
        vecs = []
        for sol in nullspace(f, rows, ncols=len(u) + len(v)):
            coeffs = sol[: len(u)]
            vec = [f.zero] * self.ambient_dim
            for c_i, row in zip(coeffs, u):
                if c_i != f.zero:
                    vec = [f.add(x, f.mul(c_i, y)) for x, y in zip(vec, row)]
            vecs.append(vec)
        return Subspace(f, self.ambient_dim, vecs)

    def is_zero(self):
        return self.dim == 0

    @staticmethod
    def full(field, n) -> "Subspace":
        return Subspace(field, n, identity(field, n))
