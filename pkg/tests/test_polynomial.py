from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cdtwist.errors import InvalidParameterError
from cdtwist.scalars.polynomial import ONE_MONOMIAL, GammaMonomial, SparsePoly, poly_eval, poly_mul

g1, g2, g3 = (SparsePoly.gamma(m) for m in (1, 2, 3))
SYMBOLS = sympy.symbols("g1 g2 g3")


def to_sympy(poly: SparsePoly):
    total = sympy.Integer(0)
    for monomial, coeff in poly.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for index, power in monomial.exponents:
            term *= SYMBOLS[index - 1] ** power
        total += term
    return sympy.expand(total)


monomials = st.builds(
    GammaMonomial,
    st.dictionaries(st.integers(1, 3), st.integers(0, 2), max_size=3)
)
polys = st.builds(
    SparsePoly,
    st.dictionaries(monomials, st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=4)
)
values = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=3).filter(lambda v: v != 0),
    min_size=3,
    max_size=3
)


def test_monomial_from_mask():
    assert str(GammaMonomial.from_mask(0b101)) == "g1*g3"
    assert GammaMonomial.from_mask(0) == ONE_MONOMIAL
    assert GammaMonomial.from_mask(0b101).mask == 0b101


def test_monomial_parse():
    assert GammaMonomial.parse("g1*g3") == GammaMonomial.from_mask(5)
    assert GammaMonomial.parse("1") == ONE_MONOMIAL
    assert GammaMonomial.parse("g2^2") == GammaMonomial({2: 2})
    with pytest.raises(InvalidParameterError):
        GammaMonomial.parse("x1")


def test_square_is_not_squarefree():
    square = GammaMonomial({2: 1}) * GammaMonomial({2: 1})
    assert str(square) == "g2^2"
    assert not square.is_squarefree
    with pytest.raises(InvalidParameterError):
        _ = square.mask


def test_signed_monomial_rendering():
    assert str(SparsePoly.signed_monomial(-1, 0b11)) == "-g1*g2"
    assert str(SparsePoly.signed_monomial(1, 0)) == "1"
    assert str(SparsePoly.constant(1) + g1) == "1 + g1"
    assert str(SparsePoly()) == "0"


def test_as_signed_monomial():
    assert (-(g1 * g3)).as_signed_monomial() == (-1, 0b101)
    assert (g1 + g2).as_signed_monomial() is None
    assert (2 * g1).as_signed_monomial() is None
    assert (g1 * g1).as_signed_monomial() is None


def test_cancellation_prunes():
    assert g1 - g1 == SparsePoly()
    assert not (g1 * g2 - g2 * g1)
    assert (g1 + 1) - 1 == g1


def test_constant_equality_and_hash():
    assert SparsePoly.constant(3) == 3
    assert hash(SparsePoly.constant(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert hash(SparsePoly()) == hash(0)


def test_evaluate():
    poly = g1 * g2 - 3 * g3 + Fraction(1, 2)
    assert poly_eval(poly, [2, 5, 1]) == Fraction(15, 2)


def test_evaluate_needs_every_parameter():
    with pytest.raises(InvalidParameterError):
        (g1 * g3).evaluate([1, 2])


def test_evaluate_rejects_zero():
    with pytest.raises(InvalidParameterError):
        g1.evaluate([0])


def test_parameters():
    assert (g1 * g3 + 2).parameters() == {1, 3}


def test_immutable():
    with pytest.raises(AttributeError):
        g1.terms = {}


@settings(derandomize=True, max_examples=150)
@given(polys, polys)
def test_product_matches_sympy(p, q):
    assert to_sympy(poly_mul(p, q)) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))


@settings(derandomize=True, max_examples=150)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == SparsePoly()


@settings(derandomize=True, max_examples=150)
@given(polys, polys, values)
def test_evaluation_is_a_ring_map(p, q, point):
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
