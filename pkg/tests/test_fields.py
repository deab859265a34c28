from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilext.fields import GF, QQ, FieldError, parse_field


def test_rational_arithmetic():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.sub(QQ.one, Fraction(1, 4)) == Fraction(3, 4)
    assert QQ.mul(Fraction(2, 3), Fraction(3, 2)) == 1
    assert QQ.div(Fraction(1), Fraction(3)) == Fraction(1, 3)


def test_gf_arithmetic():
    F = GF(7)
    assert F.mul(2, 4) == 1
    assert F.add(5, 5) == 3
    assert F.sub(2, 5) == 4
    assert F.div(1, 3) == 5  # 3*5 = 15 = 1 mod 7


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.div(QQ.one, QQ.zero)
    with pytest.raises(ZeroDivisionError):
        GF(5).div(1, 0)


def test_gf_requires_prime():
    with pytest.raises(FieldError):
        GF(6)
    with pytest.raises(FieldError):
        GF(1)


def test_canonical_forms_are_unique():
    assert QQ.of(Fraction(2, 4)) == QQ.of("1/2")
    F = GF(5)
    assert F.of(7) == 2
    assert F.of(-1) == 4
    assert F.of(Fraction(1, 2)) == 3  # inverse of 2 mod 5


def test_no_floats():
    with pytest.raises(FieldError):
        QQ.of(0.5)
    with pytest.raises(FieldError):
        QQ.parse("1.5")


def test_parse_literals():
    assert QQ.parse("-3") == -3
    assert QQ.parse("3/2") == Fraction(3, 2)
    assert GF(7).parse("3/2") == GF(7).div(3, 2)
    assert parse_field("Q") is QQ
    assert parse_field("GF(11)").p == 11
    with pytest.raises(FieldError):
        parse_field("R")


def test_nth_root_rationals():
    assert QQ.nth_root(QQ.of(16), 4) == 2
    assert QQ.nth_root(QQ.of(2), 2) is None
    assert QQ.nth_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert QQ.nth_root(QQ.of(-8), 3) == -2
    assert QQ.nth_root(QQ.of(-4), 2) is None
    assert QQ.nth_root(QQ.zero, 5) == 0


def test_nth_root_gf():
    # r in {3, 4} squares to 2 mod 7; the smallest residue is canonical
    F = GF(7)
    assert F.nth_root(2, 2) == 3
    assert F.nth_root(3, 2) is None  # 3 is not a square mod 7
    for a in range(7):
        r = F.nth_root(a, 3)
        if r is not None:
            assert pow(r, 3, 7) == a


@settings(max_examples=1000, deadline=None)
@given(st.fractions(), st.fractions(), st.fractions())
def test_field_axioms_rationals(a, b, c):
    assert QQ.add(QQ.add(a, b), c) == QQ.add(a, QQ.add(b, c))
    assert QQ.mul(QQ.mul(a, b), c) == QQ.mul(a, QQ.mul(b, c))
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    assert QQ.add(a, QQ.neg(a)) == QQ.zero
    if a != 0:
        assert QQ.mul(a, QQ.div(QQ.one, a)) == QQ.one


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_field_axioms_gf13(a, b, c):
    F = GF(13)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero
    if a != 0:
        assert F.mul(a, F.inv(a)) == F.one


def test_large_prime_inverse():
    p = 2**31 - 1
    F = GF(p)
    assert F.mul(123456789, F.inv(123456789)) == 1


def test_pow_negative_exponent():
    F = GF(7)
    assert F.pow(3, -1) == F.inv(3)
    assert QQ.pow(Fraction(2), -2) == Fraction(1, 4)
