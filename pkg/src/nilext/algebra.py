"""Structure-constant algebras and the predicates the extension method needs.

An algebra of dimension n over a field is stored as the tensor c[i][j][k]
with e_i e_j = sum_k c[i][j][k] e_k.  Algebras are immutable; every operation
is a pure function, so instances can be shared freely across threads.
"""

from __future__ import annotations

from .fields import Field, FieldError
from .linalg import Subspace, identity, rref


class PreconditionError(ValueError):
    """An operation's documented precondition does not hold."""


class Algebra:
    def __init__(self, field: Field, dim: int, sc):
        self.field = field
        self.dim = dim
        tensor = tuple(
            tuple(tuple(field.of(c) for c in row) for row in plane) for plane in sc
        )
        if len(tensor) != dim or any(
            len(plane) != dim or any(len(row) != dim for row in plane)
            for plane in tensor
        ):
            raise ValueError("structure tensor shape mismatch")
        self.sc = tensor
        # lazily computed caches; algebras are immutable
        self._bicommutative = None
        self._filtration = None

    @staticmethod
    def zero(field, dim) -> "Algebra":
        z = field.zero
        return Algebra(field, dim, [[[z] * dim for _ in range(dim)] for _ in range(dim)])

    @staticmethod
    def from_products(field, dim, products) -> "Algebra":
        """Build from {(i, j): {k: coeff}} with 1-based indices."""
        z = field.zero
        sc = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            for k, c in terms.items():
                sc[i - 1][j - 1][k - 1] = field.of(c)
        return Algebra(field, dim, sc)

    def key(self):
        return (self.field.key(), self.dim, self.sc)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field})"

    def products_list(self):
        """Nonzero products as (i, j, k, coeff), 1-based, in table order."""
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    if self.sc[i][j][k] != self.field.zero:
                        out.append((i + 1, j + 1, k + 1, self.sc[i][j][k]))
        return out

    # -- the bilinear product -------------------------------------------------

    def multiply(self, x, y):
        f = self.field
        if len(x) != self.dim or len(y) != self.dim:
            raise FieldError("vector length does not match algebra dimension")
        out = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.sc[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = f.mul(xi, yj)
                cij = row[j]
                for k in range(self.dim):
                    if cij[k]:
                        out[k] = f.add(out[k], f.mul(c, cij[k]))
        return out

    def basis_vector(self, i):
        """Standard basis vector e_i (1-based)."""
        v = [self.field.zero] * self.dim
        v[i - 1] = self.field.one
        return v

    # -- identity checks --------------------------------------------------------

    def bicommutativity_violations(self):
        """Triples where (xy)z=(xz)y or x(yz)=y(xz) fails on basis vectors.

        Each violation is ("right"|"left", i, j, k, lhs, rhs) with 1-based
        indices; an empty list means the algebra is bicommutative.
        """
        f = self.field
        n = self.dim
        e = [self.basis_vector(i + 1) for i in range(n)]
        bad = []
        for i in range(n):
            for j in range(n):
                ij = [self.sc[i][j][k] for k in range(n)]
                for k in range(n):
                    lhs = self.multiply(ij, e[k])
                    rhs = self.multiply([self.sc[i][k][m] for m in range(n)], e[j])
                    if lhs != rhs:
                        bad.append(("right", i + 1, j + 1, k + 1, lhs, rhs))
                    lhs2 = self.multiply(e[i], [self.sc[j][k][m] for m in range(n)])
                    rhs2 = self.multiply(e[j], [self.sc[i][k][m] for m in range(n)])
                    if lhs2 != rhs2:
                        bad.append(("left", i + 1, j + 1, k + 1, lhs2, rhs2))
        return bad

    def is_bicommutative(self) -> bool:
        if self._bicommutative is None:
            f = self.field
            n = self.dim
            e = [self.basis_vector(i + 1) for i in range(n)]
            result = True
            for i in range(n):
                if not result:
                    break
                for j in range(n):
                    if not result:
                        break
                    ij = [self.sc[i][j][k] for k in range(n)]
                    for k in range(n):
                        ik = [self.sc[i][k][m] for m in range(n)]
                        if self.multiply(ij, e[k]) != self.multiply(ik, e[j]):
                            result = False
                            break
                        jk = [self.sc[j][k][m] for m in range(n)]
                        if self.multiply(e[i], jk) != self.multiply(e[j], ik):
                            result = False
                            break
            self._bicommutative = result
        return self._bicommutative

    # -- filtration and generation ----------------------------------------------

    def product_span(self, u: Subspace, v: Subspace) -> Subspace:
        vecs = [self.multiply(a, b) for a in u.basis for b in v.basis]
        return Subspace(self.field, self.dim, vecs)

    def power_filtration(self):
        """[A^1, A^2, ...] with A^k = sum_{i+j=k} A^i A^j, until stabilization.

        The list ends at the first subspace equal to its successor (so a
        nilpotent algebra's list ends with the zero subspace).
        """
        if self._filtration is not None:
            return self._filtration
        powers = [Subspace.full(self.field, self.dim)]
        while True:
            k = len(powers) + 1
            vecs = []
            for i in range(1, k):
                j = k - i
                if j < 1 or j > len(powers) or i > len(powers):
                    continue
                for a in powers[i - 1].basis:
                    for b in powers[j - 1].basis:
                        vecs.append(self.multiply(a, b))
            nxt = Subspace(self.field, self.dim, vecs)
            if nxt == powers[-1]:
                self._filtration = powers
                return powers
            powers.append(nxt)

    def square(self) -> Subspace:
        vecs = []
        for i in range(self.dim):
            for j in range(self.dim):
                vecs.append([self.sc[i][j][k] for k in range(self.dim)])
        return Subspace(self.field, self.dim, vecs)

    def is_nilpotent(self) -> bool:
        return self.power_filtration()[-1].dim == 0

    def generated_subalgebra(self, v) -> Subspace:
        """Smallest subalgebra containing v, as a subspace."""
        span = Subspace(self.field, self.dim, [v])
        while True:
            vecs = list(span.basis)
            for a in span.basis:
                for b in span.basis:
                    vecs.append(self.multiply(a, b))
            nxt = Subspace(self.field, self.dim, vecs)
            if nxt == span:
                return span
            span = nxt

    def is_one_generated(self) -> bool:
        """For nilpotent algebras: dim A / A^2 == 1."""
        if not self.is_nilpotent():
            raise PreconditionError("is_one_generated requires a nilpotent algebra")
        if self.dim == 0:
            return False
        return self.dim - self.square().dim == 1

    def generates(self, v) -> bool:
        return self.generated_subalgebra(v).dim == self.dim

    # -- annihilators -------------------------------------------------------------

    def annihilator(self) -> Subspace:
        """Ann(A) = {x : xA = Ax = 0}: nullspace of stacked multiplication maps."""
        f = self.field
        n = self.dim
        rows = []
        for j in range(n):
            for k in range(n):
                rows.append([self.sc[i][j][k] for i in range(n)])  # (x e_j)_k
                rows.append([self.sc[j][i][k] for i in range(n)])  # (e_j x)_k
        if not rows:
            return Subspace.full(f, n)
        from .linalg import nullspace

        return Subspace(f, n, nullspace(f, rows, ncols=n))

    def left_annihilator(self) -> Subspace:
        f, n = self.field, self.dim
        rows = [
            [self.sc[i][j][k] for i in range(n)] for j in range(n) for k in range(n)
        ]
        from .linalg import nullspace

        return Subspace(f, n, nullspace(f, rows, ncols=n) if rows else identity(f, n))

    def right_annihilator(self) -> Subspace:
        f, n = self.field, self.dim
        rows = [
            [self.sc[j][i][k] for i in range(n)] for j in range(n) for k in range(n)
        ]
        from .linalg import nullspace

        return Subspace(f, n, nullspace(f, rows, ncols=n) if rows else identity(f, n))

    # -- ideals and quotients ----------------------------------------------------

    def is_ideal(self, s: Subspace) -> bool:
        for u in s.basis:
            for i in range(self.dim):
                e = self.basis_vector(i + 1)
                if not s.contains(self.multiply(e, u)):
                    return False
                if not s.contains(self.multiply(u, e)):
                    return False
        return True

    def quotient(self, ideal: Subspace):
        """Quotient algebra and the projection matrix (rows = images of e_i).

        The complement basis is the set of standard basis vectors at the
        non-pivot coordinates of the ideal, so the output is deterministic.
        """
        if ideal.ambient_dim != self.dim or ideal.field != self.field:
            raise FieldError("ideal does not live in this algebra")
        if not self.is_ideal(ideal):
            raise PreconditionError("subspace is not an ideal")
        f = self.field
        n = self.dim
        comp = [c for c in range(n) if c not in ideal.pivots]
        m = len(comp)

        def project(vec):
            residual = ideal.reduce(vec)
            return [residual[c] for c in comp]

        sc = [[[f.zero] * m for _ in range(m)] for _ in range(m)]
        for a in range(m):
            ea = self.basis_vector(comp[a] + 1)
            for b in range(m):
                eb = self.basis_vector(comp[b] + 1)
                img = project(self.multiply(ea, eb))
                for k in range(m):
                    sc[a][b][k] = img[k]
        quot = Algebra(f, m, sc)
        proj_matrix = [project(self.basis_vector(i + 1)) for i in range(n)]
        # rows of proj_matrix are images; transpose to the column convention
        proj = [[proj_matrix[i][r] for i in range(n)] for r in range(m)]
        return quot, proj

    # -- assorted -------------------------------------------------------------------

    def direct_sum(self, other: "Algebra") -> "Algebra":
        if other.field != self.field:
            raise FieldError("field mismatch in direct sum")
        f = self.field
        n, m = self.dim, other.dim
        sc = [[[f.zero] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    sc[i][j][k] = self.sc[i][j][k]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    sc[n + i][n + j][n + k] = other.sc[i][j][k]
        return Algebra(f, n + m, sc)

    def flat_sc(self):
        """Row-major flattened tensor; GF(p) algebras yield plain ints."""
        return tuple(
            self.sc[i][j][k]
            for i in range(self.dim)
            for j in range(self.dim)
            for k in range(self.dim)
        )

    @staticmethod
    def from_flat(field, dim, flat) -> "Algebra":
        n = dim
        it = iter(flat)
        sc = [[[next(it) for _ in range(n)] for _ in range(n)] for _ in range(n)]
        return Algebra(field, n, sc)

    def invariant_vector(self):
        """Cheap isomorphism invariants used to prefilter searches.

        (dim, filtration dims, annihilator dims, dim A*A^2, dim A^2*A,
        dim Z^2, dim B^2).
        """
        from .bilinear import coboundary_space, cocycle_space

        filt = tuple(s.dim for s in self.power_filtration())
        sq = self.square()
        full = Subspace.full(self.field, self.dim)
        a_asq = self.product_span(full, sq).dim
        asq_a = self.product_span(sq, full).dim
        return (
            self.dim,
            filt,
            self.annihilator().dim,
            self.left_annihilator().dim,
            self.right_annihilator().dim,
            a_asq,
            asq_a,
            len(cocycle_space(self)),
            len(coboundary_space(self)),
        )
