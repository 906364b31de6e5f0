from fractions import Fraction

import pytest

from diracsym.expr import (
    ExprError,
    Gamma5,
    Generator,
    Identity,
    Negate,
    Product,
    ScalarLiteral,
    Sum,
    UnknownIdentifierError,
    parse,
)
from diracsym.scalars import CR_I, ComplexRational


def test_parse_product_of_generators():
    assert parse("g1*g2*g3") == Product((Generator(1), Generator(2), Generator(3)))


def test_parse_scalar_times_generators():
    e = parse("i*g0*g1*g2*g3")
    assert e == Product(
        (ScalarLiteral(CR_I), Generator(0), Generator(1), Generator(2), Generator(3))
    )


def test_parse_grouping():
    e = parse("g0*(g1+g2)")
    assert e == Product((Generator(0), Sum((Generator(1), Generator(2)))))


def test_precedence_minus_binds_tighter_than_sum():
    assert parse("-g1+g2") == Sum((Negate(Generator(1)), Generator(2)))
    assert parse("g1-g2") == Sum((Generator(1), Negate(Generator(2))))


def test_unary_minus_of_product_factor():
    assert parse("-g1*g2") == Product((Negate(Generator(1)), Generator(2)))


def test_rational_literals():
    assert parse("3/4") == ScalarLiteral(ComplexRational(Fraction(3, 4)))
    assert parse("7") == ScalarLiteral(ComplexRational(7))
    assert parse("-1/2") == Negate(ScalarLiteral(ComplexRational(Fraction(1, 2))))


def test_identity_and_gamma5_atoms():
    assert parse("I") == Identity()
    assert parse("g5") == Gamma5()


def test_whitespace_insignificant():
    assert parse(" g1 * g2 ") == parse("g1*g2")


def test_unknown_identifier_reports_position():
    with pytest.raises(UnknownIdentifierError) as err:
        parse("g1*gx")
    assert err.value.position == 3


def test_syntax_error_reports_position():
    with pytest.raises(ExprError) as err:
        parse("g1*")
    assert err.value.position == 3


def test_juxtaposition_rejected():
    with pytest.raises(ExprError):
        parse("g0 g1")


def test_unbalanced_parenthesis():
    with pytest.raises(ExprError):
        parse("(g1+g2")


def test_zero_denominator_rejected():
    with pytest.raises(ExprError):
        parse("1/0")


def test_double_minus_rejected():
    with pytest.raises(ExprError):
        parse("--g1")


def test_empty_input_rejected():
    with pytest.raises(ExprError):
        parse("   ")


def test_stray_character_rejected():
    with pytest.raises(ExprError) as err:
        parse("g1 @ g2")
    assert err.value.position == 3
