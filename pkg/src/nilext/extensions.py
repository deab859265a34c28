"""Central extensions, the annihilator-component test, decomposition, and
orbit enumeration on subspaces of the second cohomology.

A central extension of A by an s-dimensional space V attaches cocycle
components theta_1..theta_s: the dim(A)+s algebra multiplies old basis
vectors as before plus theta_t(x, y) into the t-th new coordinate, and the
new coordinates annihilate everything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, PreconditionError
from .bilinear import (
    BilinearForm,
    CohomologyClass,
    CohomologySpace,
    cocycle_annihilator,
    cocycle_space,
    cohomology,
    format_form,
)
from .fields import FieldError, PrimeField
from .linalg import Subspace, rref
from .morphisms import Morphism, enumerate_automorphisms, h2_action_matrix

ORBIT_SUBSPACE_BOUND = 10**6


@dataclass(frozen=True)
class ExtensionSpec:
    parent: Algebra
    theta: tuple  # s bilinear forms

    def __post_init__(self):
        for form in self.theta:
            if form.dim != self.parent.dim or form.field != self.parent.field:
                raise FieldError("cocycle does not match the parent algebra")
        if len(self.theta) < 1:
            raise ValueError("extension dimension must be at least 1")

    @property
    def s(self):
        return len(self.theta)


def central_extension(spec: ExtensionSpec, require_cocycle: bool = True) -> Algebra:
    """The algebra A_theta of dimension dim(parent) + s.

    With require_cocycle the components are checked to lie in Z^2 (otherwise
    the result would not be bicommutative); pass False to build the raw
    algebra regardless, e.g. to demonstrate that failure.
    """
    A = spec.parent
    f = A.field
    n, s = A.dim, spec.s
    if require_cocycle:
        zspan = Subspace(f, n * n, [form.flat() for form in cocycle_space(A)])
        for t, form in enumerate(spec.theta):
            if not zspan.contains(list(form.flat())):
                raise PreconditionError(f"component {t + 1} is not a cocycle")
    m = n + s
    sc = [[[f.zero] * m for _ in range(m)] for _ in range(m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                sc[i][j][k] = A.sc[i][j][k]
            for t in range(s):
                sc[i][j][n + t] = spec.theta[t].m[i][j]
    return Algebra(f, m, sc)


def in_T_s(classes, A: Algebra, space: CohomologySpace | None = None) -> bool:
    """Whether span of the given independent classes lies in T_s(A):
    the meet of the component annihilators with Ann(A) is zero."""
    if not classes:
        raise ValueError("empty class list")
    space = space or classes[0].space
    f = A.field
    coord_rows = [list(c.coords) for c in classes]
    red, _ = rref(f, coord_rows)
    if len(red) != len(classes):
        raise ValueError("classes are linearly dependent")
    forms = [c.representative() for c in classes]
    meet = cocycle_annihilator(forms, A).intersection(A.annihilator())
    return meet.is_zero()


def has_annihilator_component(spec: ExtensionSpec, space: CohomologySpace | None = None) -> bool:
    """A_theta splits off part of its annihilator iff the component classes
    are linearly dependent in H^2.  Precondition: Ann(theta) meets Ann(parent)
    trivially; violations raise rather than returning a bool."""
    A = spec.parent
    meet = cocycle_annihilator(list(spec.theta), A).intersection(A.annihilator())
    if not meet.is_zero():
        raise PreconditionError("Ann(theta) meets Ann(A) nontrivially")
    space = space or cohomology(A)
    rows = []
    for form in spec.theta:
        coords = space.class_coords(form)
        if coords is None:
            raise PreconditionError("component is not a cocycle")
        rows.append(list(coords))
    red, _ = rref(A.field, rows)
    return len(red) < spec.s


def decompose(A: Algebra):
    """Split A with nonzero annihilator as a central extension.

    Returns (parent, spec, witness) with parent = A/Ann(A), theta read off
    the annihilator components of products in the standard complement, and
    witness an explicit isomorphism central_extension(spec) -> A.
    """
    ann = A.annihilator()
    if ann.dim == 0:
        raise PreconditionError("annihilator is zero; nothing to decompose")
    f = A.field
    n = A.dim
    parent, _proj = A.quotient(ann)
    comp = [c for c in range(n) if c not in ann.pivots]
    s = ann.dim
    theta = []
    for t in range(s):
        m = [[f.zero] * parent.dim for _ in range(parent.dim)]
        theta.append(m)
    for a, ca in enumerate(comp):
        ea = A.basis_vector(ca + 1)
        for b, cb in enumerate(comp):
            prod = A.multiply(ea, A.basis_vector(cb + 1))
            for t, piv in enumerate(ann.pivots):
                theta[t][a][b] = prod[piv]
    spec = ExtensionSpec(parent, tuple(BilinearForm(f, parent.dim, m) for m in theta))
    # witness columns: complement basis vectors then annihilator basis rows
    cols = [A.basis_vector(c + 1) for c in comp] + [list(v) for v in ann.basis]
    witness = Morphism(
        central_extension(spec, require_cocycle=False),
        A,
        [[cols[c][r] for c in range(n)] for r in range(n)],
    )
    return parent, spec, witness


# -- orbit enumeration over finite fields --------------------------------------


def enumerate_subspaces(field: PrimeField, ambient: int, s: int):
    """All s-dimensional subspaces of GF(p)^ambient as canonical RREF row
    tuples, in deterministic order (pivot sets lex, then free entries lex)."""
    if s < 0 or s > ambient:
        return
    if s == 0:
        yield ()
        return
    from itertools import combinations, product

    values = list(field.elements())
    for pivots in combinations(range(ambient), s):
        free_positions = [
            (r, c)
            for r in range(s)
            for c in range(ambient)
            if c > pivots[r] and c not in pivots
        ]
        for filling in product(values, repeat=len(free_positions)):
            rows = [[field.zero] * ambient for _ in range(s)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = field.one
            for (r, c), v in zip(free_positions, filling):
                rows[r][c] = v
            yield tuple(tuple(r) for r in rows)


def count_subspaces(p: int, ambient: int, s: int) -> int:
    """Gaussian binomial [ambient choose s]_p."""
    num = den = 1
    for i in range(s):
        num *= p ** (ambient - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


@dataclass
class Orbit:
    representative: tuple  # canonical RREF rows over H^2 coordinates
    size: int
    classes: list  # CohomologyClass list for the representative
    extension: Algebra


@dataclass
class OrbitReport:
    parent: Algebra
    s: int
    space: CohomologySpace
    total_subspaces: int
    t_s_size: int
    orbits: list

    def format(self) -> str:
        lines = [
            f"parent dim {self.parent.dim} over {self.parent.field}",
            f"H^2 dimension {self.space.dim_h2}; "
            f"{self.total_subspaces} subspaces of dimension {self.s}; "
            f"{self.t_s_size} in T_s; {len(self.orbits)} orbits",
        ]
        for i, orbit in enumerate(self.orbits, 1):
            reps = "; ".join(
                format_form(self.space.form_from_coords(row))
                for row in orbit.representative
            )
            lines.append(f"orbit {i}: size {orbit.size}, representative [{reps}]")
        return "\n".join(lines)


def enumerate_orbits(A: Algebra, s: int) -> OrbitReport:
    """Automorphism orbits on T_s over a finite field, smallest subspace as
    representative, plus the extension built from each representative."""
    f = A.field
    if not isinstance(f, PrimeField):
        raise PreconditionError("orbit enumeration needs a finite prime field")
    space = cohomology(A)
    h = space.dim_h2
    total = count_subspaces(f.p, h, s)
    if total > ORBIT_SUBSPACE_BOUND:
        raise PreconditionError(f"{total} subspaces exceed the enumeration bound")
    in_ts = []
    for rows in enumerate_subspaces(f, h, s):
        classes = [CohomologyClass(space, r) for r in rows]
        try:
            if in_T_s(classes, A, space):
                in_ts.append(rows)
        except ValueError:
            continue
    auts = enumerate_automorphisms(A)
    actions = [h2_action_matrix(phi, space) for phi in auts]
    seen = set()
    orbits = []
    for rows in sorted(in_ts):
        if rows in seen:
            continue
        orbit_set = set()
        for act in actions:
            moved = []
            for row in rows:
                vec = [f.zero] * h
                for coef, arow in zip(row, act):
                    if coef != f.zero:
                        vec = [f.add(x, f.mul(coef, y)) for x, y in zip(vec, arow)]
                moved.append(vec)
            red, _ = rref(f, moved)
            orbit_set.add(tuple(tuple(r) for r in red))
        seen |= orbit_set
        rep = min(orbit_set)
        classes = [CohomologyClass(space, r) for r in rep]
        ext = central_extension(
            ExtensionSpec(A, tuple(c.representative() for c in classes))
        )
        orbits.append(Orbit(rep, len(orbit_set), classes, ext))
    return OrbitReport(A, s, space, total, len(in_ts), orbits)
