from fractions import Fraction

import pytest

from nilext import catalog
from nilext.bilinear import cohomology
from nilext.fields import GF, QQ


def test_counts_per_dimension():
    assert len(catalog.list_entries(2)) == 1
    assert len(catalog.list_entries(3)) == 2
    assert len(catalog.list_entries(4)) == 6
    assert len(catalog.list_entries(5)) == 12
    assert len(catalog.list_entries(6)) == 29
    assert len(catalog.list_entries()) == 50
    assert catalog.list_entries(2) == ["B2_01"]
    assert catalog.list_entries(5)[0] == "B5_01" and catalog.list_entries(5)[-1] == "B5_12"


def test_instantiate_examples():
    A = catalog.instantiate("B3_02", {"lambda": 1}, QQ)
    e = A.basis_vector
    assert A.multiply(e(1), e(1)) == e(2)
    assert A.multiply(e(1), e(2)) == e(3)
    assert A.multiply(e(2), e(1)) == e(3)
    chain = catalog.instantiate("B5_07", {}, GF(5))
    assert chain.multiply(chain.basis_vector(4), chain.basis_vector(1)) == chain.basis_vector(5)


def test_constraint_violations():
    with pytest.raises(catalog.ConstraintViolation):
        catalog.instantiate("B6_16", {"lambda": 0}, QQ)
    with pytest.raises(catalog.ConstraintViolation):
        catalog.instantiate("B3_02", {}, QQ)  # unbound
    with pytest.raises(catalog.ConstraintViolation):
        catalog.instantiate("B5_07", {"lambda": 1}, QQ)  # extra
    with pytest.raises(catalog.CatalogError):
        catalog.get("B9_99")


def test_provenance_examples():
    assert catalog.provenance_check("B5_06", {}, QQ)
    assert catalog.provenance_check("B6_22", {}, QQ)
    assert catalog.provenance_check("B3_01", {}, QQ)
    spec = catalog.provenance_spec("B5_06", {}, QQ)
    assert spec.parent == catalog.instantiate("B4_03", {}, QQ)
    spec22 = catalog.provenance_spec("B6_22", {}, QQ)
    assert spec22.parent == catalog.instantiate("B5_07", {}, QQ)
    # the B6_22 cocycle is the D(5,1) class
    assert spec22.theta[0].m[4][0] == 1


def test_provenance_all_entries_at_gf7():
    F = GF(7)
    for name in catalog.list_entries():
        if catalog.get(name).provenance is None:
            continue
        for bindings in catalog.sample_bindings(name, F)[:3]:
            assert catalog.provenance_check(name, bindings, F), (name, bindings)


def test_h2_dims_of_extension_parents():
    # dim H^2 of each 5-dimensional parent matches its table row, including
    # the B5_03 stratum split
    expected = {
        "B5_01": 3, "B5_02": 3, "B5_05": 2, "B5_06": 2, "B5_07": 2,
        "B5_08": 2, "B5_09": 2, "B5_10": 2, "B5_11": 2, "B5_12": 2,
    }
    for name, h2 in expected.items():
        for bindings in catalog.sample_bindings(name, QQ)[:3]:
            A = catalog.instantiate(name, bindings, QQ)
            assert cohomology(A).dim_h2 == h2
    generic = catalog.instantiate("B5_03", {"lambda": 2, "mu": 3}, QQ)
    special = catalog.instantiate("B5_03", {"lambda": 2, "mu": Fraction(1, 2)}, QQ)
    assert cohomology(generic).dim_h2 == 2
    assert cohomology(special).dim_h2 == 3


def test_h2_basis_forms_are_cocycle_classes():
    for name in ("B4_01", "B4_06", "B5_02", "B5_10"):
        entry = catalog.get(name)
        bindings = {p: 2 for p in entry.params}
        A = catalog.instantiate(name, bindings, QQ)
        space = cohomology(A)
        forms = catalog.h2_basis_forms(name, QQ, bindings)
        assert len(forms) == space.dim_h2
        coords = [space.class_coords(f) for f in forms]
        assert all(c is not None for c in coords)
        from nilext.linalg import rank

        assert rank(QQ, [list(c) for c in coords]) == space.dim_h2


def test_special_bindings_b503():
    b = catalog.special_bindings("B5_03", QQ, {"lambda": QQ.of(4)})
    assert b["mu"] == Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        catalog.special_bindings("B5_03", QQ, {"lambda": QQ.zero})


def test_sample_bindings_respect_constraints():
    for b in catalog.sample_bindings("B6_16", QQ):
        assert b["lambda"] != 0
    assert catalog.sample_bindings("B5_07", QQ) == [{}]
    gf2 = catalog.sample_bindings("B3_02", GF(2))
    assert len(gf2) == 2
