"""Bilinear forms, cocycles, coboundaries and second cohomology.

A scalar-valued bilinear form on an n-dimensional algebra is an n x n matrix
m with theta(e_i, e_j) = m[i][j]; the matrix unit at (i, j) is the basis form
D(i, j).  Vectorization is row-major, (i, j) -> i*n + j, which fixes the
canonical echelon representatives everywhere below.

Cocycles are the forms with theta(xy, z) = theta(xz, y) and
theta(x, yz) = theta(y, xz); coboundaries are the forms f(xy) induced by
linear functionals f.
"""

from __future__ import annotations

from functools import lru_cache

from . import exprs
from .algebra import Algebra, PreconditionError
from .fields import FieldError
from .linalg import Subspace, nullspace, rref, solve_in_rowspan


class BilinearForm:
    def __init__(self, field, dim, matrix):
        self.field = field
        self.dim = dim
        self.m = tuple(tuple(field.of(x) for x in row) for row in matrix)
        if len(self.m) != dim or any(len(r) != dim for r in self.m):
            raise ValueError("form matrix shape mismatch")

    @staticmethod
    def zero(field, dim) -> "BilinearForm":
        z = field.zero
        return BilinearForm(field, dim, [[z] * dim for _ in range(dim)])

    @staticmethod
    def unit(field, dim, i, j) -> "BilinearForm":
        """The basis form D(i, j), 1-based."""
        z = field.zero
        m = [[z] * dim for _ in range(dim)]
        m[i - 1][j - 1] = field.one
        return BilinearForm(field, dim, m)

    @staticmethod
    def from_flat(field, dim, flat) -> "BilinearForm":
        it = iter(flat)
        return BilinearForm(field, dim, [[next(it) for _ in range(dim)] for _ in range(dim)])

    @staticmethod
    def from_terms(field, dim, terms) -> "BilinearForm":
        """terms: iterable of ((i, j), coeff), 1-based."""
        z = field.zero
        m = [[z] * dim for _ in range(dim)]
        for (i, j), c in terms:
            m[i - 1][j - 1] = field.add(m[i - 1][j - 1], field.of(c))
        return BilinearForm(field, dim, m)

    def flat(self):
        return tuple(x for row in self.m for x in row)

    def key(self):
        return (self.field.key(), self.dim, self.m)

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def evaluate(self, x, y):
        f = self.field
        s = f.zero
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            for j, yj in enumerate(y):
                if yj != f.zero and self.m[i][j] != f.zero:
                    s = f.add(s, f.mul(f.mul(xi, yj), self.m[i][j]))
        return s

    def add(self, other: "BilinearForm") -> "BilinearForm":
        f = self.field
        return BilinearForm(
            f,
            self.dim,
            [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.m, other.m)],
        )

    def scale(self, c) -> "BilinearForm":
        f = self.field
        return BilinearForm(f, self.dim, [[f.mul(c, x) for x in row] for row in self.m])

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.m for x in row)

    def __repr__(self):
        return f"BilinearForm({format_form(self)})"


def format_form(form: BilinearForm) -> str:
    """Textual syntax: D(1,4) + 2*D(2,2); the zero form prints as 0."""
    f = form.field
    parts = []
    for i in range(form.dim):
        for j in range(form.dim):
            c = form.m[i][j]
            if c == f.zero:
                continue
            if c == f.one:
                parts.append(f"D({i + 1},{j + 1})")
            else:
                parts.append(f"{f.format(c)}*D({i + 1},{j + 1})")
    return " + ".join(parts) if parts else "0"


def parse_form(field, dim, text: str, bindings=None) -> BilinearForm:
    """Parse the D(i,j) syntax, e.g. ``D(1,4) + 2*D(2,2)`` or ``0``.

    Coefficients may be expressions in bound parameters, e.g.
    ``lambda*D(2,3)`` with bindings {"lambda": ...}.
    """
    import re

    text = text.strip()
    if text == "0":
        return BilinearForm.zero(field, dim)
    term_re = re.compile(r"^\s*(?:(.*?)\s*\*)?\s*D\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
    terms = []
    for raw in exprs.split_top_level_plus(text):
        m = term_re.match(raw)
        if not m:
            raise ValueError(f"bad form term {raw.strip()!r}")
        coeff_text, i, j = m.groups()
        coeff = (
            exprs.evaluate_str(coeff_text, field, bindings or {})
            if coeff_text
            else field.one
        )
        i, j = int(i), int(j)
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ValueError(f"form index out of range in {raw.strip()!r}")
        terms.append(((i, j), coeff))
    return BilinearForm.from_terms(field, dim, terms)


def _forms_from_rows(field, dim, rows):
    return [BilinearForm.from_flat(field, dim, row) for row in rows]


@lru_cache(maxsize=None)
def cocycle_space(algebra: Algebra):
    """Echelon basis of Z^2: solutions of both cocycle identity families
    instantiated on all basis triples."""
    f = algebra.field
    n = algebra.dim
    sc = algebra.sc
    eqs = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # theta(e_i e_j, e_k) = theta(e_i e_k, e_j)
                row = [f.zero] * (n * n)
                nonzero = False
                for l in range(n):
                    if sc[i][j][l] != f.zero:
                        row[l * n + k] = f.add(row[l * n + k], sc[i][j][l])
                        nonzero = True
                    if sc[i][k][l] != f.zero:
                        row[l * n + j] = f.sub(row[l * n + j], sc[i][k][l])
                        nonzero = True
                if nonzero:
                    eqs.append(row)
                # theta(e_i, e_j e_k) = theta(e_j, e_i e_k)
                row = [f.zero] * (n * n)
                nonzero = False
                for l in range(n):
                    if sc[j][k][l] != f.zero:
                        row[i * n + l] = f.add(row[i * n + l], sc[j][k][l])
                        nonzero = True
                    if sc[i][k][l] != f.zero:
                        row[j * n + l] = f.sub(row[j * n + l], sc[i][k][l])
                        nonzero = True
                if nonzero:
                    eqs.append(row)
    if not eqs:
        sol = [[f.one if t == s else f.zero for t in range(n * n)] for s in range(n * n)]
    else:
        sol = nullspace(f, eqs, ncols=n * n)
    red, _ = rref(f, sol)
    return tuple(_forms_from_rows(f, n, red))


@lru_cache(maxsize=None)
def coboundary_space(algebra: Algebra):
    """Echelon basis of B^2 = {f(xy) : f linear functional}."""
    f = algebra.field
    n = algebra.dim
    rows = []
    for k in range(n):
        rows.append([algebra.sc[i][j][k] for i in range(n) for j in range(n)])
    red, _ = rref(f, rows)
    return tuple(_forms_from_rows(f, n, red))


class CohomologySpace:
    """Z^2, B^2 and deterministic coset representatives for H^2.

    The representatives are the echelon basis vectors of Z^2 whose pivot
    coordinates are not pivot coordinates of B^2; they are independent
    modulo B^2 and there are dim Z^2 - dim B^2 of them.
    """

    def __init__(self, algebra: Algebra):
        if not algebra.is_bicommutative():
            raise PreconditionError("cohomology requires a bicommutative algebra")
        self.algebra = algebra
        f = algebra.field
        n = algebra.dim
        self.z2 = list(cocycle_space(algebra))
        self.b2 = list(coboundary_space(algebra))
        bpivots = set()
        brows, bp = rref(f, [form.flat() for form in self.b2])
        bpivots = set(bp)
        reps = []
        zrows, zp = rref(f, [form.flat() for form in self.z2])
        for row, p in zip(zrows, zp):
            if p not in bpivots:
                reps.append(row)
        self.h2_reps = _forms_from_rows(f, n, reps)
        # rows of [B^2 basis; H^2 reps] form a basis of Z^2
        self._reduction_rows = [list(r) for r in brows] + [list(r) for r in reps]

    @property
    def dim_z2(self):
        return len(self.z2)

    @property
    def dim_b2(self):
        return len(self.b2)

    @property
    def dim_h2(self):
        return len(self.h2_reps)

    def class_coords(self, form: BilinearForm):
        """Coordinates of [form] over the h2 representatives; None if form
        is not a cocycle."""
        sol = solve_in_rowspan(self.algebra.field, self._reduction_rows, list(form.flat()))
        if sol is None:
            return None
        return tuple(sol[len(self.b2):])

    def form_from_coords(self, coords) -> BilinearForm:
        f = self.algebra.field
        form = BilinearForm.zero(f, self.algebra.dim)
        for c, rep in zip(coords, self.h2_reps):
            if c != f.zero:
                form = form.add(rep.scale(c))
        return form

    def is_coboundary(self, form: BilinearForm) -> bool:
        coords = self.class_coords(form)
        return coords is not None and all(c == self.algebra.field.zero for c in coords)


class CohomologyClass:
    def __init__(self, space: CohomologySpace, coords):
        self.space = space
        self.coords = tuple(space.algebra.field.of(c) for c in coords)
        if len(self.coords) != space.dim_h2:
            raise ValueError("class coordinate length mismatch")

    @staticmethod
    def of_form(space: CohomologySpace, form: BilinearForm) -> "CohomologyClass":
        coords = space.class_coords(form)
        if coords is None:
            raise ValueError("form is not a cocycle")
        return CohomologyClass(space, coords)

    def representative(self) -> BilinearForm:
        return self.space.form_from_coords(self.coords)

    def is_zero(self):
        z = self.space.algebra.field.zero
        return all(c == z for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, CohomologyClass)
            and self.space is other.space
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"CohomologyClass{self.coords}"


@lru_cache(maxsize=None)
def cohomology(algebra: Algebra) -> CohomologySpace:
    return CohomologySpace(algebra)


def cocycle_annihilator(forms, algebra: Algebra) -> Subspace:
    """Ann(theta) for theta with components `forms`: x with theta(x, A) = 0
    and theta(A, x) = 0, i.e. the kernel of all stacked row and column maps."""
    f = algebra.field
    n = algebra.dim
    rows = []
    for form in forms:
        if form.dim != n or form.field != f:
            raise FieldError("form does not match the algebra")
        for j in range(n):
            rows.append([form.m[i][j] for i in range(n)])  # theta(x, e_j)
            rows.append([form.m[j][i] for i in range(n)])  # theta(e_j, x)
    if not rows:
        return Subspace.full(f, n)
    return Subspace(f, n, nullspace(f, rows, ncols=n))
