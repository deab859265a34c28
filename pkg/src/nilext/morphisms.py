"""Linear maps between algebras, automorphism groups, and isomorphism testing.

Morphisms of one-generated nilpotent algebras are driven by generator images:
the word basis of the source (breadth-first products of the generator,
left-factors-first) determines the whole map from a single vector.  Over
GF(p) that makes automorphism enumeration and isomorphism testing exhaustive
searches over p**n generator images, delegated to the compiled kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import core, exprs
from .algebra import Algebra, PreconditionError
from .bilinear import BilinearForm, CohomologyClass, CohomologySpace
from .fields import Field, FieldError, PrimeField
from .linalg import Subspace, identity, inverse, mat_mul, mat_vec, rank, rref

SEARCH_BOUND = 10**7  # max p**n for exhaustive generator-image scans


class SearchBoundExceeded(RuntimeError):
    pass


class Morphism:
    """Linear map source -> target; column j of `matrix` is the image of e_j."""

    def __init__(self, source: Algebra, target: Algebra, matrix):
        if source.field != target.field:
            raise FieldError("source/target field mismatch")
        self.source = source
        self.target = target
        f = source.field
        self.matrix = tuple(tuple(f.of(x) for x in row) for row in matrix)
        if len(self.matrix) != target.dim or any(
            len(r) != source.dim for r in self.matrix
        ):
            raise ValueError("morphism matrix shape mismatch")

    @staticmethod
    def identity(algebra: Algebra) -> "Morphism":
        return Morphism(algebra, algebra, identity(algebra.field, algebra.dim))

    def apply(self, vec):
        return mat_vec(self.source.field, [list(r) for r in self.matrix], vec)

    def column(self, j):
        return [self.matrix[r][j] for r in range(self.target.dim)]

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        if other.target.dim != self.source.dim:
            raise ValueError("composition shape mismatch")
        m = mat_mul(
            self.source.field, [list(r) for r in self.matrix], [list(r) for r in other.matrix]
        )
        return Morphism(other.source, self.target, m)

    def is_invertible(self) -> bool:
        return (
            self.source.dim == self.target.dim
            and rank(self.source.field, [list(r) for r in self.matrix]) == self.source.dim
        )

    def inverse(self) -> "Morphism":
        inv = inverse(self.source.field, [list(r) for r in self.matrix])
        if inv is None:
            raise ValueError("morphism is not invertible")
        return Morphism(self.target, self.source, inv)

    def is_homomorphism(self) -> bool:
        A, B = self.source, self.target
        for i in range(A.dim):
            ci = self.column(i)
            for j in range(A.dim):
                lhs = self.apply([A.sc[i][j][k] for k in range(A.dim)])
                rhs = B.multiply(ci, self.column(j))
                if lhs != rhs:
                    return False
        return True

    def is_automorphism(self) -> bool:
        return (
            self.source == self.target
            and self.is_invertible()
            and self.is_homomorphism()
        )

    def key(self):
        return (self.source.key(), self.target.key(), self.matrix)

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Morphism({self.target.dim}x{self.source.dim})"


# -- word bases of one-generated algebras ------------------------------------


@lru_cache(maxsize=None)
def generator_plan(algebra: Algebra):
    """Deterministic word basis of a one-generated nilpotent algebra.

    The generator is the first standard basis vector outside A^2; candidate
    words are scanned breadth-first by degree, left factor first, and accepted
    when linearly independent.  Returns (generator, words, degrees, plan,
    w_inverse) where plan[k] = (left, right) indices building word k+1.
    """
    f = algebra.field
    n = algebra.dim
    sq = algebra.square()
    g = None
    for i in range(n):
        e = algebra.basis_vector(i + 1)
        if not sq.contains(e):
            g = e
            break
    if g is None:
        raise PreconditionError("algebra has no standard generator outside A^2")
    built = _greedy_plan(algebra, g)
    if built is None:
        raise PreconditionError("algebra is not one-generated")
    words, degs, plan = built
    w_cols = [[words[k][r] for k in range(n)] for r in range(n)]
    w_inv = inverse(f, w_cols)
    return tuple(g), tuple(tuple(w) for w in words), tuple(degs), tuple(plan), tuple(
        tuple(r) for r in w_inv
    )


def _greedy_plan(algebra: Algebra, v):
    f = algebra.field
    n = algebra.dim
    if all(x == f.zero for x in v):
        return None
    words = [list(v)]
    degs = [1]
    plan = []
    span = Subspace(f, n, [v])
    if len(words) == n:
        return words, degs, plan
    for d in range(2, n + 1):
        cnt_before = len(words)
        for ia in range(cnt_before):
            for ib in range(cnt_before):
                if degs[ia] + degs[ib] != d:
                    continue
                w = algebra.multiply(words[ia], words[ib])
                if span.contains(w):
                    continue
                words.append(w)
                degs.append(d)
                plan.append((ia, ib))
                span = Subspace(f, n, [list(x) for x in span.basis] + [w])
                if len(words) == n:
                    return words, degs, plan
    return None


def extend_generator_image(A: Algebra, B: Algebra, v):
    """Morphism A -> B determined by sending A's generator to v, or None.

    The images of A's word basis are the same product words evaluated at v in
    B; the induced linear map is returned iff it is a homomorphism.
    """
    if A.field != B.field:
        raise FieldError("field mismatch")
    if not A.is_nilpotent():
        raise PreconditionError("source must be nilpotent")
    g, words, degs, plan, w_inv = generator_plan(A)
    f = A.field
    imgs = [list(v)]
    for (ia, ib) in plan:
        imgs.append(B.multiply(imgs[ia], imgs[ib]))
    # phi = U * W^{-1} with U columns the images
    matrix = []
    for r in range(B.dim):
        row = []
        for c in range(A.dim):
            s = f.zero
            for k in range(A.dim):
                s = f.add(s, f.mul(imgs[k][r], w_inv[k][c]))
            row.append(s)
        matrix.append(row)
    phi = Morphism(A, B, matrix)
    return phi if phi.is_homomorphism() else None


def enumerate_automorphisms(A: Algebra) -> list[Morphism]:
    """All automorphisms of a one-generated nilpotent GF(p) algebra, in
    lexicographic order of the generator image."""
    if not isinstance(A.field, PrimeField):
        raise PreconditionError("automorphism enumeration needs a finite prime field")
    p = A.field.p
    if p**A.dim > SEARCH_BOUND:
        raise SearchBoundExceeded(f"{p}**{A.dim} generator images exceed the bound")
    flats = core.automorphisms(A.dim, p, A.flat_sc())
    out = []
    for flat in flats:
        n = A.dim
        out.append(Morphism(A, A, [[flat[r * n + c] for c in range(n)] for r in range(n)]))
    return out


# -- action on forms and cohomology classes -----------------------------------


def act_on_form(phi: Morphism, theta: BilinearForm) -> BilinearForm:
    """(phi . theta)(x, y) = theta(phi x, phi y): the matrix congruence
    phi^T m phi."""
    if phi.source.dim != theta.dim or phi.source.field != theta.field:
        raise FieldError("form does not match the morphism's algebra")
    f = theta.field
    m = [list(r) for r in theta.m]
    pm = [list(r) for r in phi.matrix]
    pt = [[pm[r][c] for r in range(len(pm))] for c in range(len(pm[0]))]
    return BilinearForm(f, theta.dim, mat_mul(f, mat_mul(f, pt, m), pm))


def act_on_class(phi: Morphism, cls: CohomologyClass) -> CohomologyClass:
    if not phi.is_automorphism():
        raise PreconditionError("cohomology action needs an automorphism")
    moved = act_on_form(phi, cls.representative())
    coords = cls.space.class_coords(moved)
    if coords is None:
        raise PreconditionError("action left the cocycle space (not an automorphism?)")
    return CohomologyClass(cls.space, coords)


def h2_action_matrix(phi: Morphism, space: CohomologySpace):
    """Row r = coordinates of [phi . rep_r]; class coords transform by
    right-multiplication with this matrix."""
    rows = []
    for rep in space.h2_reps:
        coords = space.class_coords(act_on_form(phi, rep))
        if coords is None:
            raise PreconditionError("automorphism action left Z^2")
        rows.append(list(coords))
    return rows


# -- parametrized automorphism families ----------------------------------------


@dataclass(frozen=True)
class AutFamily:
    """A parametrized matrix form whose instantiations are automorphisms.

    `pattern` entries are expression strings in `param_names` plus any parent
    algebra parameters; `nonzero` lists parameters that must not vanish.
    """

    parent_name: str
    param_names: tuple
    pattern: tuple  # tuple of row tuples of expression strings
    nonzero: tuple = ()

    def instantiate(self, parent: Algebra, bindings) -> Morphism:
        f = parent.field
        for name in self.nonzero:
            if bindings[name] == f.zero:
                raise ValueError(f"parameter {name} must be nonzero")
        rows = [
            [exprs.evaluate_str(e, f, bindings) for e in row] for row in self.pattern
        ]
        return Morphism(parent, parent, rows)

    def enumerate_instances(self, parent: Algebra, parent_bindings) -> set:
        """All distinct instantiation matrices over a finite field."""
        f = parent.field
        if not isinstance(f, PrimeField):
            raise PreconditionError("pattern enumeration needs a finite field")
        out = set()
        names = list(self.param_names)
        values = list(f.elements())

        def rec(i, bindings):
            if i == len(names):
                try:
                    phi = self.instantiate(parent, bindings)
                except ValueError:
                    return
                if phi.is_invertible():
                    out.add(phi.matrix)
                return
            for v in values:
                bindings[names[i]] = v
                rec(i + 1, bindings)

        rec(0, dict(parent_bindings))
        return out


def verify_aut_family(
    family: AutFamily, parent: Algebra, parent_bindings, samples: int, rng
):
    """Check a parametrized family against the algebra it claims to describe.

    Random instantiations must be automorphisms; over finite fields the set
    of instantiations must equal the exhaustively enumerated automorphism
    group.  Returns a report dict; failures are content, not exceptions.
    """
    f = parent.field
    failures = []
    tested = 0
    for _ in range(samples):
        bindings = dict(parent_bindings)
        for name in family.param_names:
            bindings[name] = _random_scalar(f, rng, nonzero=name in family.nonzero)
        phi = family.instantiate(parent, bindings)
        tested += 1
        if not phi.is_invertible():
            failures.append(("not invertible", bindings))
        elif not phi.is_homomorphism():
            failures.append(("not a homomorphism", bindings))
    report = {
        "family": family.parent_name,
        "samples": tested,
        "failures": failures,
        "set_equality": None,
    }
    if isinstance(f, PrimeField):
        enumerated = {m.matrix for m in enumerate_automorphisms(parent)}
        pattern = family.enumerate_instances(parent, parent_bindings)
        report["set_equality"] = enumerated == pattern
        if not report["set_equality"]:
            report["failures"].append(
                (
                    "set mismatch",
                    {
                        "enumerated": len(enumerated),
                        "pattern": len(pattern),
                        "missing": len(enumerated - pattern),
                        "extra": len(pattern - enumerated),
                    },
                )
            )
    report["ok"] = not report["failures"]
    return report


def _random_scalar(field: Field, rng, nonzero=False):
    if isinstance(field, PrimeField):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, field.p)
    from fractions import Fraction

    while True:
        val = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if not nonzero or val != 0:
            return val


# -- isomorphism testing ----------------------------------------------------------


@dataclass
class IsoResult:
    verdict: str  # "yes" | "no" | "unknown"
    witness: Morphism | None = None
    reason: str = ""

    def __bool__(self):
        return self.verdict == "yes"


def _check_preconditions(A: Algebra, B: Algebra):
    if A.field != B.field:
        raise FieldError("cannot compare algebras over different fields")
    for X in (A, B):
        if not X.is_nilpotent():
            raise PreconditionError("isomorphism test requires nilpotent algebras")
        if not X.is_one_generated():
            raise PreconditionError("isomorphism test requires one-generated algebras")


def is_isomorphic(A: Algebra, B: Algebra) -> IsoResult:
    """Exact over GF(p) (exhaustive generator-image search with witness);
    over Q an invariant comparison plus a bounded generator probe, with
    `unknown` as an honest third answer."""
    _check_preconditions(A, B)
    if A.dim != B.dim:
        return IsoResult("no", reason="dimension mismatch")
    if A.invariant_vector() != B.invariant_vector():
        return IsoResult("no", reason="invariant vectors differ")
    if isinstance(A.field, PrimeField):
        p = A.field.p
        if p**A.dim > SEARCH_BOUND:
            raise SearchBoundExceeded(f"{p}**{A.dim} exceeds the search bound")
        flat = core.iso_search(A.dim, p, A.flat_sc(), B.flat_sc())
        if flat is None:
            return IsoResult("no", reason="exhaustive generator-image search")
        n = A.dim
        phi = Morphism(A, B, [[flat[r * n + c] for c in range(n)] for r in range(n)])
        return IsoResult("yes", witness=phi)
    # Q: bounded deterministic probe of generator images
    for v in _rational_probe_vectors(B):
        phi = extend_generator_image(A, B, v)
        if phi is not None and phi.is_invertible():
            return IsoResult("yes", witness=phi)
    return IsoResult("unknown", reason="generator probe inconclusive over Q")


def _rational_probe_vectors(B: Algebra):
    f = B.field
    n = B.dim
    sq = B.square()
    singles = [B.basis_vector(i + 1) for i in range(n)]
    candidates = []
    candidates.extend(v for v in singles if not sq.contains(v))
    for c in (f.of(-1), f.of(2), f.of("1/2"), f.of(-2)):
        for v in singles:
            if not sq.contains(v):
                candidates.append([f.mul(c, x) for x in v])
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v = [f.zero] * n
            v[i] = f.one
            v[j] = f.one
            if not sq.contains(v):
                candidates.append(v)
            w = [f.zero] * n
            w[i] = f.one
            w[j] = f.neg(f.one)
            if not sq.contains(w):
                candidates.append(w)
    return candidates


def canonical_generator_tensor(A: Algebra):
    """Minimal word-basis structure tensor over all generator images (GF(p)).

    Two one-generated nilpotent algebras over the same GF(p) are isomorphic
    iff these tensors coincide, so this is a complete invariant used to batch
    many pairwise tests.
    """
    if not isinstance(A.field, PrimeField):
        raise PreconditionError("canonical tensor needs a finite prime field")
    p = A.field.p
    if p**A.dim > SEARCH_BOUND:
        raise SearchBoundExceeded(f"{p}**{A.dim} exceeds the search bound")
    result = core.canonical_form(A.dim, p, A.flat_sc())
    if result is None:
        raise PreconditionError("algebra is not one-generated")
    return result[0]
