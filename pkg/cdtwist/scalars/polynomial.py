"""
Sparse multivariate polynomials in the doubling parameters g1, g2, ...

A polynomial is a map from GammaMonomial to a nonzero Fraction. Values are
immutable and kept in canonical (zero-pruned) form so that equality is
structural.
"""
import logging
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from cdtwist.errors import InvalidParameterError

logger = logging.getLogger(__name__)


class GammaMonomial:
    """
    A product g_{m1}^{e1} * g_{m2}^{e2} * ... with positive exponents.

    The empty monomial is 1.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        cleaned = {}
        for index, power in items:
            if index < 1:
                raise InvalidParameterError(f"Parameter index must be >= 1, got {index}")
            if power < 0:
                raise InvalidParameterError(f"Negative exponent for g{index}")
            if power:
                cleaned[index] = cleaned.get(index, 0) + power
        object.__setattr__(self, "exponents", tuple(sorted(cleaned.items())))

    def __setattr__(self, name, value):
        raise AttributeError("GammaMonomial is immutable")

    @classmethod
    def from_mask(cls, mask: int) -> "GammaMonomial":
        """Squarefree monomial whose parameters are the set bits of mask (bit m-1 -> g_m)"""
        pairs = []
        m = 1
        while mask:
            if mask & 1:
                pairs.append((m, 1))
            mask >>= 1
            m += 1
        return cls(pairs)

    @property
    def is_squarefree(self) -> bool:
        return all(power == 1 for _, power in self.exponents)

    @property
    def mask(self) -> int:
        if not self.is_squarefree:
            raise InvalidParameterError(f"Monomial {self} is not squarefree")
        result = 0
        for index, _ in self.exponents:
            result |= 1 << (index - 1)
        return result

    @property
    def degree(self) -> int:
        return sum(power for _, power in self.exponents)

    def __mul__(self, other: "GammaMonomial") -> "GammaMonomial":
        if not isinstance(other, GammaMonomial):
            return NotImplemented
        merged = dict(self.exponents)
        for index, power in other.exponents:
            merged[index] = merged.get(index, 0) + power
        return GammaMonomial(merged)

    def __eq__(self, other):
        return isinstance(other, GammaMonomial) and self.exponents == other.exponents

    def __lt__(self, other: "GammaMonomial"):
        return (self.degree, self.exponents) < (other.degree, other.exponents)

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"GammaMonomial({dict(self.exponents)})"

    def __str__(self):
        if not self.exponents:
            return "1"
        parts = []
        for index, power in self.exponents:
            parts.append(f"g{index}" if power == 1 else f"g{index}^{power}")
        return "*".join(parts)

    @classmethod
    def parse(cls, text: str) -> "GammaMonomial":
        """Inverse of str(): '1', 'g1*g3', 'g2^2'"""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        pairs = []
        for factor in text.split("*"):
            factor = factor.strip()
            if not factor.startswith("g"):
                raise InvalidParameterError(f"Bad monomial factor {factor!r}")
            name, _, power = factor[1:].partition("^")
            pairs.append((int(name), int(power) if power else 1))
        return cls(pairs)


ONE_MONOMIAL = GammaMonomial()


class SparsePoly:
    """
    Sparse polynomial over Q in the parameters g1, g2, ...
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[GammaMonomial, Union[int, Fraction]]] = None):
        cleaned: Dict[GammaMonomial, Fraction] = {}
        if terms:
            for monomial, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    cleaned[monomial] = coeff
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    @classmethod
    def _from_clean(cls, terms: Dict[GammaMonomial, Fraction]) -> "SparsePoly":
        poly = cls.__new__(cls)
        object.__setattr__(poly, "terms", terms)
        return poly

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> "SparsePoly":
        return cls({ONE_MONOMIAL: value})

    @classmethod
    def gamma(cls, m: int) -> "SparsePoly":
        """The polynomial g_m"""
        return cls({GammaMonomial({m: 1}): 1})

    @classmethod
    def signed_monomial(cls, sign: int, mask: int) -> "SparsePoly":
        return cls({GammaMonomial.from_mask(mask): sign})

    @staticmethod
    def _lift(value) -> Optional["SparsePoly"]:
        if isinstance(value, SparsePoly):
            return value
        if isinstance(value, Rational):
            return SparsePoly.constant(value)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        result = dict(self.terms)
        for monomial, coeff in other.terms.items():
            total = result.get(monomial, 0) + coeff
            if total:
                result[monomial] = total
            else:
                result.pop(monomial, None)
        return SparsePoly._from_clean(result)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._from_clean({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        result: Dict[GammaMonomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = m1 * m2
                total = result.get(monomial, 0) + c1 * c2
                if total:
                    result[monomial] = total
                else:
                    result.pop(monomial, None)
        return SparsePoly._from_clean(result)

    __rmul__ = __mul__

    def evaluate(self, gammas: Sequence[Union[int, Fraction]]) -> Fraction:
        """
        Substitute concrete values for the parameters

        Args:
            gammas: Values of g1, g2, ... in order (gammas[m-1] is g_m)

        Returns:
            The rational value of the polynomial
        """
        for m in self.parameters():
            if m > len(gammas):
                raise InvalidParameterError(f"No value supplied for g{m}")
        for m, value in enumerate(gammas, start=1):
            if value == 0:
                raise InvalidParameterError(f"g{m} must be nonzero")
        total = Fraction(0)
        for monomial, coeff in self.terms.items():
            value = Fraction(coeff)
            for index, power in monomial.exponents:
                value *= Fraction(gammas[index - 1]) ** power
            total += value
        return total

    def parameters(self) -> set:
        return {index for monomial in self.terms for index, _ in monomial.exponents}

    def as_signed_monomial(self) -> Optional[Tuple[int, int]]:
        """
        Decompose into (sign, mask) when the polynomial is +/- a squarefree monomial

        Returns:
            (sign, gamma_mask) or None
        """
        if len(self.terms) != 1:
            return None
        (monomial, coeff), = self.terms.items()
        if coeff not in (1, -1) or not monomial.is_squarefree:
            return None
        return int(coeff), monomial.mask

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if not self.terms:
            return hash(0)
        if len(self.terms) == 1 and ONE_MONOMIAL in self.terms:
            return hash(self.terms[ONE_MONOMIAL])
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"SparsePoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for monomial in sorted(self.terms):
            coeff = self.terms[monomial]
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if monomial == ONE_MONOMIAL:
                body = str(magnitude)
            elif magnitude == 1:
                body = str(monomial)
            else:
                body = f"{magnitude}*{monomial}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def poly_eval(p: SparsePoly, gammas: Sequence[Union[int, Fraction]]) -> Fraction:
    return p.evaluate(gammas)
