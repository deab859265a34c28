import random

import pytest

from nilext import catalog
from nilext.algebra import Algebra, PreconditionError
from nilext.fields import GF, QQ
from nilext.linalg import Subspace


def B(name, field=QQ, **params):
    return catalog.instantiate(name, params or None, field)


def test_multiply_paper_products():
    b201 = B("B2_01")
    assert b201.multiply(b201.basis_vector(1), b201.basis_vector(1)) == b201.basis_vector(2)
    b506 = B("B5_06")
    assert b506.multiply(b506.basis_vector(4), b506.basis_vector(1)) == b506.basis_vector(5)
    zero = [QQ.zero] * 5
    assert b506.multiply(zero, b506.basis_vector(1)) == zero


def test_multiply_bilinear():
    A = B("B4_05")
    rng = random.Random(3)
    for _ in range(20):
        x = [QQ.of(rng.randint(-3, 3)) for _ in range(4)]
        y = [QQ.of(rng.randint(-3, 3)) for _ in range(4)]
        z = [QQ.of(rng.randint(-3, 3)) for _ in range(4)]
        lhs = A.multiply([QQ.add(a, b) for a, b in zip(x, y)], z)
        rhs = [QQ.add(a, b) for a, b in zip(A.multiply(x, z), A.multiply(y, z))]
        assert lhs == rhs


def test_bicommutativity_report():
    assert B("B3_02", **{"lambda": 1}).bicommutativity_violations() == []
    assert Algebra.zero(QQ, 4).bicommutativity_violations() == []
    # e1e1=e2, e2e2=e3 violates left-commutativity at (e2, e1, e1)
    A = Algebra.from_products(QQ, 3, {(1, 1): {2: 1}, (2, 2): {3: 1}})
    violations = A.bicommutativity_violations()
    assert violations
    kinds = {(kind, i, j, k) for kind, i, j, k, _, _ in violations}
    assert ("left", 2, 1, 1) in kinds


def _exact_degree_spans(A, max_degree):
    """Independent filtration oracle: spans of all full-bracketing products
    of exactly d basis vectors, built tree by tree."""
    values = {1: [A.basis_vector(i + 1) for i in range(A.dim)]}
    for d in range(2, max_degree + 1):
        vals = []
        for i in range(1, d):
            for x in values[i]:
                for y in values[d - i]:
                    vals.append(A.multiply(x, y))
        # keep a spanning subset to stop combinatorial growth
        span = Subspace(A.field, A.dim, vals)
        values[d] = [list(v) for v in span.basis]
    return values


def test_power_filtration_against_bruteforce_oracle():
    for name in ("B2_01", "B3_01", "B4_01", "B4_03", "B4_05", "B5_06", "B5_09"):
        A = B(name)
        filt = A.power_filtration()
        spans = _exact_degree_spans(A, len(filt) + 1)
        for k, sub in enumerate(filt[1:], 2):
            assert sub == Subspace(A.field, A.dim, spans.get(k, []))


def test_power_filtration_examples():
    assert [s.dim for s in B("B5_07").power_filtration()] == [5, 4, 3, 2, 1, 0]
    assert [s.dim for s in Algebra.zero(QQ, 4).power_filtration()] == [4, 0]
    # fixed by the brute-force oracle above
    assert [s.dim for s in B("B4_01").power_filtration()] == [4, 3, 2, 0]


def test_is_nilpotent():
    assert B("B6_22").is_nilpotent()
    assert Algebra.zero(QQ, 3).is_nilpotent()
    idem = Algebra.from_products(QQ, 1, {(1, 1): {1: 1}})
    assert not idem.is_nilpotent()


def test_is_one_generated():
    assert B("B4_03").is_one_generated()
    two_blocks = B("B2_01").direct_sum(B("B2_01"))
    assert not two_blocks.is_one_generated()
    assert Algebra.zero(QQ, 1).is_one_generated()
    idem = Algebra.from_products(QQ, 1, {(1, 1): {1: 1}})
    with pytest.raises(PreconditionError):
        idem.is_one_generated()


def test_one_generated_cross_check():
    # every vector outside A^2 generates a nilpotent one-generated algebra
    rng = random.Random(5)
    for name in ("B3_02", "B4_06", "B5_09"):
        params = {"lambda": 2} if catalog.get(name).params else {}
        A = catalog.instantiate(name, params, QQ)
        sq = A.square()
        hits = 0
        for _ in range(20):
            v = [QQ.of(rng.randint(-3, 3)) for _ in range(A.dim)]
            if sq.contains(v):
                continue
            hits += 1
            assert A.generates(v)
        assert hits > 0
    # and nothing inside A^2 generates
    A = B("B4_03")
    assert not A.generates(A.basis_vector(2))


def test_annihilator_examples():
    assert B("B2_01").annihilator() == Subspace(QQ, 2, [[0, 1]])
    assert B("B4_01").annihilator() == Subspace(QQ, 4, [[0, 0, 1, 0], [0, 0, 0, 1]])
    assert Algebra.zero(QQ, 3).annihilator().dim == 3


def test_annihilator_is_ideal():
    for name in catalog.list_entries():
        entry = catalog.get(name)
        bindings = {p: 2 for p in entry.params}
        try:
            A = catalog.instantiate(name, bindings, QQ)
        except catalog.ConstraintViolation:
            continue
        assert A.is_ideal(A.annihilator())


def test_quotient():
    b506 = B("B5_06")
    quot, proj = b506.quotient(Subspace(QQ, 5, [[0, 0, 0, 0, 1]]))
    assert quot == B("B4_03")
    # projection kills exactly the ideal
    assert [row[4] for row in proj] == [QQ.zero] * 4
    A = B("B4_04")
    same, _ = A.quotient(Subspace(QQ, 4))
    assert same == A
    nothing, _ = A.quotient(Subspace.full(QQ, 4))
    assert nothing.dim == 0


def test_quotient_requires_ideal():
    A = B("B3_01")
    with pytest.raises(PreconditionError):
        A.quotient(Subspace(QQ, 3, [[1, 0, 0]]))


def test_strictly_decreasing_filtration():
    for name in ("B4_02", "B5_05", "B6_24"):
        A = B(name)
        dims = [s.dim for s in A.power_filtration()]
        for a, b in zip(dims, dims[1:]):
            assert b < a


def test_flat_roundtrip():
    A = B("B4_05", GF(5))
    assert Algebra.from_flat(GF(5), 4, A.flat_sc()) == A
