from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diracsym.scalars import (
    CR_I,
    CR_ONE,
    ComplexRational,
    parse_rational,
    rational_sqrt,
    rational_str,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(ComplexRational, rationals, rationals)
nonzero_scalars = scalars.filter(bool)


def test_basic_arithmetic():
    a = ComplexRational(Fraction(1, 2), Fraction(-3, 4))
    b = ComplexRational(2, 1)
    assert a + b == ComplexRational(Fraction(5, 2), Fraction(1, 4))
    assert a - a == ComplexRational(0)
    assert CR_I * CR_I == ComplexRational(-1)
    assert (a * b) / b == a


def test_equality_is_exact():
    assert ComplexRational(Fraction(1, 3)) != ComplexRational(Fraction(33333, 100000))
    assert ComplexRational(Fraction(2, 4)) == ComplexRational(Fraction(1, 2))


def test_conjugate_and_modulus():
    z = ComplexRational(Fraction(3, 5), Fraction(4, 5))
    assert z.conjugate().im == Fraction(-4, 5)
    assert z.abs2() == 1
    assert z.is_unit_modulus()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CR_ONE / ComplexRational(0)


def test_int_coercion():
    assert ComplexRational(2) + 1 == ComplexRational(3)
    assert 2 * CR_I == ComplexRational(0, 2)
    assert 1 - CR_I == ComplexRational(1, -1)


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(scalars)
def test_conjugation_involution(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0


@given(nonzero_scalars, scalars)
def test_division_inverts_multiplication(a, b):
    assert (b * a) / a == b


def test_rational_strings():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("2") == 2
    assert rational_str(Fraction(-5, 6)) == "-5/6"
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(ValueError):
        parse_rational("3/0")


def test_rational_sqrt():
    assert rational_sqrt(Fraction(25, 16)) == Fraction(5, 4)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None
    assert rational_sqrt(Fraction(0)) == 0


def test_str_forms():
    assert str(ComplexRational(0)) == "0"
    assert str(CR_I) == "i"
    assert str(-CR_I) == "-i"
    assert str(ComplexRational(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3i"
