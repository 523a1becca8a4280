from fractions import Fraction

import pytest

from cdtwist.errors import FieldContextError, InvalidParameterError
from cdtwist.scalars.kinds import (
    QuadraticKind,
    RationalKind,
    SymbolicKind,
    kind_for_values,
    parse_gammas,
    parse_quadratic,
    parse_rational,
)
from cdtwist.scalars.polynomial import SparsePoly
from cdtwist.scalars.quadratic import QuadExt


@pytest.mark.parametrize("text, expected", [
    ("sqrt", QuadExt(0, 1, 2)),
    ("-sqrt", QuadExt(0, -1, 2)),
    ("1+2*sqrt", QuadExt(1, 2, 2)),
    ("1/2-3*sqrt", QuadExt(Fraction(1, 2), -3, 2)),
    ("-1-sqrt", QuadExt(-1, -1, 2)),
    ("3*sqrt(2)", QuadExt(0, 3, 2)),
    ("5", QuadExt(5, 0, 2)),
])
def test_parse_quadratic(text, expected):
    assert parse_quadratic(text, 2) == expected


def test_parse_quadratic_rejects_trailing_text():
    with pytest.raises(InvalidParameterError):
        parse_quadratic("sqrt+1", 2)


def test_parse_rational():
    assert parse_rational(" -3/4 ") == Fraction(-3, 4)
    with pytest.raises(InvalidParameterError):
        parse_rational("abc")
    with pytest.raises(InvalidParameterError):
        parse_rational("1/0")


def test_parse_gammas():
    assert parse_gammas("symbolic", 3) == "symbolic"
    assert parse_gammas(None, 2) == "symbolic"
    assert parse_gammas("-1,-1,2", 3) == [-1, -1, 2]
    assert parse_gammas("1/2", 1) == [Fraction(1, 2)]


def test_parse_gammas_checks_length_and_zero():
    with pytest.raises(InvalidParameterError):
        parse_gammas("-1,-1", 3)
    with pytest.raises(InvalidParameterError):
        parse_gammas("-1,0", 2)


def test_rational_kind_coercion():
    kind = RationalKind()
    assert kind.coerce(3) == Fraction(3)
    assert kind.coerce(QuadExt(2, 0, 5)) == Fraction(2)
    assert kind.coerce(SparsePoly.constant(4)) == Fraction(4)
    with pytest.raises(FieldContextError):
        kind.coerce(QuadExt(0, 1, 5))
    with pytest.raises(FieldContextError):
        kind.coerce(SparsePoly.gamma(1))


def test_quadratic_kind_coercion_and_involution():
    plain = QuadraticKind(2)
    twisted = QuadraticKind(2, sigma=True)
    root = QuadExt(0, 1, 2)
    assert plain.central and not twisted.central
    assert plain.involution(root) == root
    assert twisted.involution(root) == -root
    assert plain.coerce(Fraction(1, 2)) == QuadExt(Fraction(1, 2), 0, 2)
    with pytest.raises(FieldContextError):
        plain.coerce(QuadExt(0, 1, 3))
    assert plain != twisted
    assert plain == QuadraticKind(2)


def test_symbolic_kind():
    kind = SymbolicKind()
    assert not kind.is_concrete
    assert kind.coerce(2) == SparsePoly.constant(2)
    assert kind.one == 1
    with pytest.raises(FieldContextError):
        kind.coerce(QuadExt(0, 1, 2))


def test_kind_for_values():
    assert kind_for_values([-1, Fraction(1, 2)]) == RationalKind()
    assert kind_for_values([QuadExt(0, 1, 3), 2]) == QuadraticKind(3)
    with pytest.raises(FieldContextError):
        kind_for_values([QuadExt(0, 1, 2), QuadExt(0, 1, 3)])
