import pytest

from nilext import catalog
from nilext.algebra import Algebra
from nilext.fields import GF, QQ
from nilext.fileformat import (
    FormatError,
    ParametricTable,
    format_algebra,
    parse_algebra,
)

B5_06_FILE = """\
algebra B5_06
dim 5
field Q
table
e1 e1 = e2
e1 e2 = e5
e2 e1 = e3
e3 e1 = e4
e4 e1 = e5
end
"""


def test_parse_concrete_algebra():
    A = parse_algebra(B5_06_FILE)
    assert isinstance(A, Algebra)
    assert A == catalog.instantiate("B5_06", {}, QQ)


def test_roundtrip_all_catalog_entries():
    for name in catalog.list_entries():
        for bindings in catalog.sample_bindings(name, QQ)[:2]:
            A = catalog.instantiate(name, bindings, QQ)
            text = format_algebra(A, name=name)
            assert parse_algebra(text) == A
            assert format_algebra(parse_algebra(text), name=name) == text


def test_roundtrip_gf():
    A = catalog.instantiate("B4_05", {}, GF(7))
    text = format_algebra(A)
    assert parse_algebra(text) == A


def test_invalid_coefficient_over_gf2():
    text = "algebra x\ndim 2\nfield GF(2)\ntable\ne1 e1 = 1/2 e2\nend\n"
    with pytest.raises(FormatError, match="division by zero"):
        parse_algebra(text)


def test_parametric_table():
    text = (
        "algebra fam\ndim 3\nfield Q\nparams lambda\ntable\n"
        "e1 e1 = e2\ne2 e1 = lambda e3\nend\n"
    )
    table = parse_algebra(text)
    assert isinstance(table, ParametricTable)
    A = table.instantiate(QQ, {"lambda": 2})
    assert A.multiply(A.basis_vector(2), A.basis_vector(1)) == [
        QQ.zero,
        QQ.zero,
        QQ.of(2),
    ]
    with pytest.raises(FormatError, match="unbound"):
        table.instantiate(QQ, {})
    with pytest.raises(FormatError, match="unknown"):
        table.instantiate(QQ, {"lambda": 1, "mu": 2})


def test_duplicate_product_rejected():
    text = "dim 2\nfield Q\ntable\ne1 e1 = e2\ne1 e1 = e2\nend\n"
    with pytest.raises(FormatError, match="duplicate"):
        parse_algebra(text)


def test_index_out_of_range():
    text = "dim 2\nfield Q\ntable\ne1 e3 = e2\nend\n"
    with pytest.raises(FormatError, match="out of range"):
        parse_algebra(text)


def test_unknown_parameter_rejected():
    text = "dim 2\nfield Q\ntable\ne1 e1 = lambda e2\nend\n"
    with pytest.raises(FormatError, match="unknown parameter"):
        parse_algebra(text)


def test_error_carries_line_number():
    text = "dim 2\nfield Q\ntable\ne1 e1 = ???\nend\n"
    with pytest.raises(FormatError, match="line 4"):
        parse_algebra(text)


def test_missing_end():
    with pytest.raises(FormatError, match="missing end"):
        parse_algebra("dim 2\nfield Q\ntable\ne1 e1 = e2\n")


def test_omitted_products_are_zero():
    A = parse_algebra("dim 3\nfield Q\ntable\ne1 e1 = e2\nend\n")
    assert A.multiply(A.basis_vector(2), A.basis_vector(2)) == [QQ.zero] * 3


def test_comments_and_blank_lines():
    text = "# chain algebra\ndim 2\nfield Q\n\ntable\ne1 e1 = e2  # square\nend\n"
    A = parse_algebra(text)
    assert A == catalog.instantiate("B2_01", {}, QQ)


def test_negative_and_fractional_coefficients():
    text = "dim 2\nfield Q\ntable\ne1 e1 = -3/2 e2\nend\n"
    A = parse_algebra(text)
    assert A.sc[0][0][1] == QQ.parse("-3/2")
    assert parse_algebra(format_algebra(A)) == A
