"""
Scalar kinds: the coefficient rings an algebra can be built over.

A kind knows its zero and one, how to coerce user input, the involution it
carries as a one-dimensional algebra, and how to draw random values. Every
AlgebraSpec records exactly one kind; mixing kinds is a FieldContextError.
"""
import logging
import random
from fractions import Fraction
from numbers import Rational
from typing import Any, List, Optional, Sequence, Union

from cdtwist.errors import FieldContextError, InvalidParameterError
from cdtwist.scalars.polynomial import ONE_MONOMIAL, SparsePoly
from cdtwist.scalars.quadratic import QuadExt, QuadraticField

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, QuadExt, SparsePoly]


class ScalarKind:
    """Base class for coefficient kinds"""

    name = "abstract"
    # a kind is central when its involution is the identity, so that
    # scalars commute with every element of an algebra built over it
    central = True
    is_concrete = True

    @property
    def zero(self) -> Scalar:
        raise NotImplementedError

    @property
    def one(self) -> Scalar:
        raise NotImplementedError

    def coerce(self, value: Any) -> Scalar:
        raise NotImplementedError

    def involution(self, value: Scalar) -> Scalar:
        return value

    def random(self, rng: random.Random, bound: int = 5) -> Scalar:
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()

    def __repr__(self):
        return f"{type(self).__name__}{self._key() or ''}"


class RationalKind(ScalarKind):
    """The ground field Q"""

    name = "rational"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Rational):
            return Fraction(value)
        if isinstance(value, QuadExt) and value.is_rational():
            return value.a
        if isinstance(value, SparsePoly) and set(value.terms) <= {ONE_MONOMIAL}:
            return value.terms.get(ONE_MONOMIAL, Fraction(0))
        raise FieldContextError(f"Cannot use {value!r} as a rational scalar")

    def random(self, rng: random.Random, bound: int = 5) -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


class QuadraticKind(ScalarKind):
    """
    The field E = Q(sqrt(d)).

    With sigma=True the field carries its nontrivial automorphism as
    involution (the base of a nonassociative quaternion algebra); with
    sigma=False it is an ordinary commutative ground field.
    """

    name = "quadext"

    def __init__(self, d: int, sigma: bool = False):
        self.field = QuadraticField(d)
        self.d = self.field.d
        self.sigma = sigma
        self.central = not sigma

    def _key(self):
        return (self.d, self.sigma)

    @property
    def zero(self) -> QuadExt:
        return self.field.zero

    @property
    def one(self) -> QuadExt:
        return self.field.one

    def coerce(self, value: Any) -> QuadExt:
        if isinstance(value, QuadExt):
            if value.d != self.d:
                raise FieldContextError(
                    f"Scalar from Q(sqrt({value.d})) used in an algebra over Q(sqrt({self.d}))"
                )
            return value
        if isinstance(value, Rational):
            return self.field(value)
        raise FieldContextError(f"Cannot use {value!r} as a scalar of Q(sqrt({self.d}))")

    def involution(self, value: QuadExt) -> QuadExt:
        return value.sigma() if self.sigma else value

    def random(self, rng: random.Random, bound: int = 5) -> QuadExt:
        return self.field.random(rng, bound=bound)


class SymbolicKind(ScalarKind):
    """Polynomials over Q in the symbolic doubling parameters g1, g2, ..."""

    name = "symbolic"
    is_concrete = False

    @property
    def zero(self) -> SparsePoly:
        return SparsePoly()

    @property
    def one(self) -> SparsePoly:
        return SparsePoly.constant(1)

    def coerce(self, value: Any) -> SparsePoly:
        if isinstance(value, SparsePoly):
            return value
        if isinstance(value, Rational):
            return SparsePoly.constant(value)
        raise FieldContextError(f"Cannot use {value!r} as a symbolic scalar")

    def random(self, rng: random.Random, bound: int = 5) -> SparsePoly:
        return SparsePoly.constant(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))


def parse_rational(text: str) -> Fraction:
    """
    Parse '3', '-1', '1/2' into a Fraction

    Args:
        text: Rational literal

    Returns:
        The parsed value
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidParameterError(f"Not a rational number: {text!r}") from e


def parse_quadratic(text: str, d: int) -> QuadExt:
    """
    Parse an element of Q(sqrt(d)).

    Accepted forms: 'sqrt' (the root itself), '-sqrt', 'a+b*sqrt', 'b*sqrt',
    and plain rationals.
    """
    field = QuadraticField(d)
    cleaned = text.replace(" ", "").replace(f"sqrt({d})", "sqrt")
    if "sqrt" not in cleaned:
        return field(parse_rational(cleaned))
    head, _, tail = cleaned.partition("sqrt")
    if tail:
        raise InvalidParameterError(f"Unexpected text after sqrt in {text!r}")
    # split head into rational part and coefficient of sqrt
    split_at = max(head.rfind("+", 1), head.rfind("-", 1))
    if split_at > 0:
        a_text, b_text = head[:split_at], head[split_at:]
    else:
        a_text, b_text = "0", head
    b_text = b_text.rstrip("*")
    if b_text in ("", "+"):
        b = Fraction(1)
    elif b_text == "-":
        b = Fraction(-1)
    else:
        b = parse_rational(b_text)
    return field(parse_rational(a_text), b)


def parse_gammas(text: Optional[str], t: int) -> Union[str, List[Fraction]]:
    """
    Parse the --gammas option: 'symbolic' or t comma separated rationals

    Args:
        text: Raw option value (None means symbolic)
        t: Tower level the values are for

    Returns:
        'symbolic' or the list of nonzero rationals
    """
    if text is None or text.strip().lower() == "symbolic":
        return "symbolic"
    values = [parse_rational(part) for part in text.split(",") if part.strip()]
    if len(values) != t:
        raise InvalidParameterError(f"Expected {t} gamma values, got {len(values)}")
    for m, value in enumerate(values, start=1):
        if value == 0:
            raise InvalidParameterError(f"g{m} must be nonzero")
    return values


def kind_for_values(values: Sequence[Any]) -> ScalarKind:
    """Pick the central kind able to hold all given concrete values"""
    radicands = {v.d for v in values if isinstance(v, QuadExt)}
    if len(radicands) > 1:
        raise FieldContextError(f"Parameters mix quadratic fields {sorted(radicands)}")
    if radicands:
        return QuadraticKind(radicands.pop())
    return RationalKind()
