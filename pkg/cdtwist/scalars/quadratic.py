"""
Exact arithmetic in quadratic fields Q(sqrt(d)).

Elements are immutable pairs (a, b) of rationals standing for a + b*sqrt(d).
The radicand d is part of every element and is validated once per field.
"""
import logging
import math
import random
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

from cdtwist.errors import FieldContextError, InvalidParameterError

logger = logging.getLogger(__name__)

RationalLike = Union[int, Fraction]


@lru_cache(maxsize=None)
def validate_radicand(d: int) -> int:
    """
    Check that d defines a genuine quadratic extension of Q

    Args:
        d: Integer radicand

    Returns:
        The radicand, unchanged
    """
    if not isinstance(d, int) or isinstance(d, bool):
        raise InvalidParameterError(f"Radicand must be an integer, got {d!r}")
    if d == 0:
        raise InvalidParameterError("Radicand 0 does not define a field extension")
    if d > 0 and math.isqrt(d) ** 2 == d:
        raise InvalidParameterError(f"Radicand {d} is a perfect square; Q(sqrt({d})) = Q")
    logger.debug(f"Validated quadratic radicand {d}")
    return d


class QuadExt:
    """
    An element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, d: int = 2):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", validate_radicand(d))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldContextError(
                    f"Cannot combine elements of Q(sqrt({self.d})) and Q(sqrt({other.d}))"
                )
            return other
        if isinstance(other, Rational):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(
            self.a * other.a + self.d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sigma(self) -> "QuadExt":
        """The nontrivial automorphism a + b*sqrt(d) -> a - b*sqrt(d)"""
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm x * sigma(x), a rational"""
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "QuadExt":
        """
        Multiplicative inverse sigma(x) / (x * sigma(x))

        Returns:
            The inverse element
        """
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        root = f"sqrt({self.d})"
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            irrational = root
        elif self.b == -1:
            irrational = f"-{root}"
        else:
            irrational = f"{self.b}*{root}"
        if self.a == 0:
            return irrational
        if irrational.startswith("-"):
            return f"{self.a}{irrational}"
        return f"{self.a}+{irrational}"


class QuadraticField:
    """
    Field context Q(sqrt(d)); validates d on construction.
    """

    def __init__(self, d: int):
        self.d = validate_radicand(d)

    def __call__(self, a: RationalLike = 0, b: RationalLike = 0) -> QuadExt:
        return QuadExt(a, b, self.d)

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.d == self.d

    def __hash__(self):
        return hash(("QuadraticField", self.d))

    def __repr__(self):
        return f"QuadraticField({self.d})"

    @property
    def zero(self) -> QuadExt:
        return QuadExt(0, 0, self.d)

    @property
    def one(self) -> QuadExt:
        return QuadExt(1, 0, self.d)

    @property
    def root(self) -> QuadExt:
        return QuadExt(0, 1, self.d)

    def random(self, rng: random.Random, bound: int = 5, denominator: int = 3) -> QuadExt:
        """
        Draw an element with small random rational components

        Args:
            rng: Seeded random source
            bound: Numerator bound
            denominator: Largest denominator

        Returns:
            Random element (possibly zero)
        """
        return QuadExt(
            Fraction(rng.randint(-bound, bound), rng.randint(1, denominator)),
            Fraction(rng.randint(-bound, bound), rng.randint(1, denominator)),
            self.d,
        )


def _same_field(x: QuadExt, y: QuadExt) -> None:
    if x.d != y.d:
        raise FieldContextError(f"Radicand mismatch: {x.d} != {y.d}")


def quadext_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    _same_field(x, y)
    return x * y


def quadext_sigma(x: QuadExt) -> QuadExt:
    return x.sigma()


def quadext_inv(x: QuadExt) -> QuadExt:
    return x.inverse()
