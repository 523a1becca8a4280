"""
Reference Cayley-Dickson doubling engine

This module implements the recursive doubling product

    (a1, a2)(b1, b2) = (a1 b1 + g conj(b2) a2, a2 conj(b1) + b2 a1)

together with its placements of g (L: g(conj(b2) a2), M: conj(b2)(g a2),
R: (conj(b2) a2) g), the scalar involution (a1, a2) -> (conj(a1), -a2),
trace, norm and associators. Elements of a doubled algebra of dimension 2n
are stored flat: index i < n is (f_i, 0) and index n + i is (0, f_i).

It is the ground truth the fast twist path in cdtwist.twist is checked
against.
"""
import logging
import random
from typing import Any, Dict, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from cdtwist.errors import AlgebraError, InvalidParameterError, LevelMismatchError
from cdtwist.scalars.kinds import (
    QuadraticKind,
    RationalKind,
    Scalar,
    ScalarKind,
    SymbolicKind,
    kind_for_values,
)
from cdtwist.scalars.polynomial import SparsePoly

logger = logging.getLogger(__name__)

VARIANTS = ("L", "M", "R")

Coeffs = Dict[int, Any]


class BaseField(NamedTuple):
    """The scalar field viewed as a one-dimensional algebra with its involution"""
    kind: ScalarKind

    @property
    def dimension(self) -> int:
        return 1

    @property
    def depth(self) -> int:
        return 0


class Doubled(NamedTuple):
    """base + base with doubling parameter gamma placed according to variant"""
    base: Any
    gamma: "Element"
    variant: str = "L"

    @property
    def kind(self) -> ScalarKind:
        return self.base.kind

    @property
    def dimension(self) -> int:
        return 2 * self.base.dimension

    @property
    def depth(self) -> int:
        return self.base.depth + 1


AlgebraSpec = Union[BaseField, Doubled]


class Element:
    """
    A general element sum(c_i f_i) of an algebra, with exact coefficients.

    Zero coefficients are never stored, so equality is structural.
    `c * x` scales coefficients; `x * y` is the algebra product.
    """

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: AlgebraSpec, coeffs: Optional[Mapping[int, Any]] = None):
        kind = spec.kind
        dimension = spec.dimension
        cleaned: Coeffs = {}
        for index, value in (coeffs or {}).items():
            if not 0 <= index < dimension:
                raise LevelMismatchError(f"Basis index {index} out of range for dimension {dimension}")
            value = kind.coerce(value)
            if value:
                cleaned[index] = value
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def _raw(cls, spec: AlgebraSpec, coeffs: Coeffs) -> "Element":
        element = cls.__new__(cls)
        object.__setattr__(element, "spec", spec)
        object.__setattr__(element, "coeffs", coeffs)
        return element

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def _same_spec(self, other: "Element") -> None:
        if other.spec is not self.spec and other.spec != self.spec:
            raise AlgebraError("Elements belong to different algebras")

    def __getitem__(self, index: int) -> Scalar:
        return self.coeffs.get(index, self.spec.kind.zero)

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same_spec(other)
        return Element._raw(self.spec, _add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same_spec(other)
        return Element._raw(self.spec, _add(self.coeffs, _neg(other.coeffs)))

    def __neg__(self):
        return Element._raw(self.spec, _neg(self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return mul(self.spec, self, other)

    def __rmul__(self, scalar):
        scalar = self.spec.kind.coerce(scalar)
        return Element._raw(self.spec, _scale(scalar, self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs and (other.spec is self.spec or other.spec == self.spec)

    def __hash__(self):
        return hash((self.spec, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def is_scalar(self) -> bool:
        return set(self.coeffs) <= {0}

    def scalar_part(self) -> Scalar:
        return self[0]

    def terms(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for index, coeff in self.terms():
            text = str(coeff)
            if index == 0:
                pieces.append(text)
                continue
            if coeff == 1:
                pieces.append(f"f{index}")
            elif coeff == -1:
                pieces.append(f"-f{index}")
            elif " " in text or "+" in text or "-" in text[1:]:
                pieces.append(f"({text})*f{index}")
            else:
                pieces.append(f"{text}*f{index}")
        out = " + ".join(pieces)
        return out.replace("+ -", "- ")


def _add(x: Coeffs, y: Coeffs) -> Coeffs:
    if not x:
        return dict(y)
    result = dict(x)
    for index, value in y.items():
        total = result[index] + value if index in result else value
        if total:
            result[index] = total
        else:
            result.pop(index, None)
    return result


def _neg(x: Coeffs) -> Coeffs:
    return {index: -value for index, value in x.items()}


def _scale(c, x: Coeffs) -> Coeffs:
    result = {}
    for index, value in x.items():
        product = c * value
        if product:
            result[index] = product
    return result


def _split(x: Coeffs, half: int) -> Tuple[Coeffs, Coeffs]:
    low, high = {}, {}
    for index, value in x.items():
        if index < half:
            low[index] = value
        else:
            high[index - half] = value
    return low, high


def _join(low: Coeffs, high: Coeffs, half: int) -> Coeffs:
    result = dict(low)
    for index, value in high.items():
        result[index + half] = value
    return result


def _conj(spec: AlgebraSpec, x: Coeffs) -> Coeffs:
    if not x:
        return {}
    kind = spec.kind
    if kind.central:
        # the involution fixes scalars and negates every other basis vector
        return {index: (value if index == 0 else -value) for index, value in x.items()}
    if isinstance(spec, BaseField):
        return {0: kind.involution(x[0])}
    half = spec.base.dimension
    low, high = _split(x, half)
    return _join(_conj(spec.base, low), _neg(high), half)


def _place_gamma(spec: Doubled, b: Coeffs, a: Coeffs) -> Coeffs:
    # g conj(b2) a2 with g placed by the variant; b is already conjugated
    base = spec.base
    g = spec.gamma.coeffs
    if base.kind.central and set(g) <= {0}:
        return _scale(g[0], _mul(base, b, a))
    if spec.variant == "L":
        return _mul(base, g, _mul(base, b, a))
    if spec.variant == "M":
        return _mul(base, b, _mul(base, g, a))
    return _mul(base, _mul(base, b, a), g)


def _mul(spec: AlgebraSpec, x: Coeffs, y: Coeffs) -> Coeffs:
    if not x or not y:
        return {}
    if isinstance(spec, BaseField):
        product = x[0] * y[0]
        return {0: product} if product else {}
    base = spec.base
    half = base.dimension
    x1, x2 = _split(x, half)
    y1, y2 = _split(y, half)
    first = _add(_mul(base, x1, y1), _place_gamma(spec, _conj(base, y2), x2))
    second = _add(_mul(base, x2, _conj(base, y1)), _mul(base, y2, x1))
    return _join(first, second, half)


def _check(spec: AlgebraSpec, *elements: Element) -> None:
    for element in elements:
        if element.spec is not spec and element.spec != spec:
            raise AlgebraError("Element does not belong to the given algebra")


def basis_element(spec: AlgebraSpec, index: int, coeff: Any = 1) -> Element:
    """The element coeff * f_index"""
    return Element(spec, {index: coeff})


def scalar_element(spec: AlgebraSpec, value: Any) -> Element:
    return Element(spec, {0: value})


def one(spec: AlgebraSpec) -> Element:
    return Element._raw(spec, {0: spec.kind.one})


def zero(spec: AlgebraSpec) -> Element:
    return Element._raw(spec, {})


def pair(spec: Doubled, a1: Element, a2: Element) -> Element:
    """The element (a1, a2) of a doubled algebra"""
    _check(spec.base, a1, a2)
    return Element._raw(spec, _join(a1.coeffs, a2.coeffs, spec.base.dimension))


def halves(spec: Doubled, x: Element) -> Tuple[Element, Element]:
    """Split x = (a1, a2) into its components in the base algebra"""
    _check(spec, x)
    low, high = _split(x.coeffs, spec.base.dimension)
    return Element._raw(spec.base, low), Element._raw(spec.base, high)


def double(base: AlgebraSpec, gamma: Any, variant: str = "L") -> Doubled:
    """
    Apply one doubling step

    Args:
        base: Algebra to double
        gamma: Doubling parameter, an Element of base or a scalar
        variant: Placement of gamma in the first component (L, M or R)

    Returns:
        Spec of the doubled algebra
    """
    if variant not in VARIANTS:
        raise InvalidParameterError(f"Unknown doubling variant {variant!r}; expected one of {VARIANTS}")
    if not isinstance(gamma, Element):
        gamma = scalar_element(base, gamma)
    _check(base, gamma)
    if not gamma:
        raise InvalidParameterError("Doubling parameter must be nonzero")
    if not gamma.is_scalar():
        from cdtwist.algebra.matrices import left_mult_matrix
        _, invertible = left_mult_matrix(base, gamma)
        if not invertible:
            raise AlgebraError(f"Doubling parameter {gamma} is not invertible")
    spec = Doubled(base, gamma, variant)
    logger.debug(f"Doubled algebra of dimension {base.dimension} with parameter {gamma} ({variant})")
    return spec


def make_cd_tower(t: int, gammas: Union[str, Sequence[Any]] = "symbolic") -> AlgebraSpec:
    """
    Build E_t = (g1, ..., gt / K) by t doublings

    Args:
        t: Number of doublings
        gammas: 'symbolic' for free parameters, or t nonzero concrete values

    Returns:
        Spec of dimension 2^t; layer m uses parameter g_m
    """
    if not isinstance(t, int) or t < 0:
        raise InvalidParameterError(f"Level must be a non-negative integer, got {t!r}")
    if isinstance(gammas, str):
        if gammas != "symbolic":
            raise InvalidParameterError(f"Unknown parameter mode {gammas!r}")
        kind: ScalarKind = SymbolicKind()
        values = [SparsePoly.gamma(m) for m in range(1, t + 1)]
    else:
        values = list(gammas)
        if len(values) != t:
            raise InvalidParameterError(f"Expected {t} parameter values, got {len(values)}")
        kind = kind_for_values(values)
        values = [kind.coerce(v) for v in values]
        for m, value in enumerate(values, start=1):
            if not value:
                raise InvalidParameterError(f"g{m} must be nonzero")

    spec: AlgebraSpec = BaseField(kind)
    for value in values:
        spec = Doubled(spec, scalar_element(spec, value), "L")
    logger.debug(f"Built Cayley-Dickson tower of level {t} over {kind!r}")
    return spec


def tower_gammas(spec: AlgebraSpec) -> Optional[list]:
    """
    The scalar parameters g1..gt of a tower, innermost first

    Returns:
        The list, or None when some layer has a non-scalar parameter
        or the scalars carry a nontrivial involution
    """
    if not spec.kind.central:
        return None
    values = []
    while isinstance(spec, Doubled):
        if not spec.gamma.is_scalar():
            return None
        values.append(spec.gamma.scalar_part())
        spec = spec.base
    return list(reversed(values))


def mul(spec: AlgebraSpec, x: Element, y: Element) -> Element:
    """
    Algebra product x y by recursive descent through the doublings

    Args:
        spec: The algebra
        x: Left factor
        y: Right factor

    Returns:
        The product
    """
    _check(spec, x, y)
    return Element._raw(spec, _mul(spec, x.coeffs, y.coeffs))


def conj(spec: AlgebraSpec, x: Element) -> Element:
    """Scalar involution (a1, a2) -> (conj(a1), -a2)"""
    _check(spec, x)
    return Element._raw(spec, _conj(spec, x.coeffs))


def trace(spec: AlgebraSpec, x: Element) -> Scalar:
    """t(x) = x + conj(x), which must be a scalar"""
    total = x + conj(spec, x)
    if not total.is_scalar():
        raise AlgebraError(f"x + conj(x) is not a scalar in this algebra: {total}")
    return total.scalar_part()


def norm(spec: AlgebraSpec, x: Element) -> Scalar:
    """n(x) = x conj(x), which must be a scalar"""
    product = mul(spec, x, conj(spec, x))
    if not product.is_scalar():
        raise AlgebraError(f"x conj(x) is not a scalar in this algebra: {product}")
    return product.scalar_part()


def associator(spec: AlgebraSpec, x: Element, y: Element, z: Element) -> Element:
    """(x y) z - x (y z)"""
    _check(spec, x, y, z)
    left = _mul(spec, _mul(spec, x.coeffs, y.coeffs), z.coeffs)
    right = _mul(spec, x.coeffs, _mul(spec, y.coeffs, z.coeffs))
    return Element._raw(spec, _add(left, _neg(right)))


def random_element(
        spec: AlgebraSpec,
        rng: random.Random,
        density: float = 1.0,
        bound: int = 5,
        nonzero: bool = False
) -> Element:
    """
    Draw an element with small random coefficients

    Args:
        spec: The algebra
        rng: Seeded random source
        density: Probability that a given coefficient is drawn at all
        bound: Numerator bound of the coefficients
        nonzero: Redraw until the element is nonzero

    Returns:
        Random element
    """
    kind = spec.kind
    while True:
        coeffs: Coeffs = {}
        for index in range(spec.dimension):
            if density >= 1.0 or rng.random() < density:
                value = kind.random(rng, bound=bound)
                if value:
                    coeffs[index] = value
        if coeffs or not nonzero:
            return Element._raw(spec, coeffs)


def describe(spec: AlgebraSpec) -> str:
    """Short human readable description of a spec"""
    if isinstance(spec, BaseField):
        kind = spec.kind
        if isinstance(kind, QuadraticKind):
            return f"Q(sqrt({kind.d}))" + (" with sigma" if kind.sigma else "")
        if isinstance(kind, RationalKind):
            return "Q"
        return "Q[g]"
    return f"({describe(spec.base)}, {spec.gamma}, {spec.variant})"
