"""
Nonassociative quaternion algebras H = E + E over E = Q(sqrt(d))

The product is the doubling formula with the base involution sigma and the
parameter placed on the left:

    (a1, a2)(b1, b2) = (a1 b1 + g (sigma(b2) a2), a2 sigma(b1) + b2 a1)

with g in E but not in Q. Over Q the algebra has basis
{1, f1, f2, f3} = {(1,0), (rho,0), (0,1), (0,rho)} where rho = c*sqrt(d)
and f1^2 = alpha = c^2 d. E is the nucleus, f_i x = sigma(x) f_i for
i = 2, 3, and third powers do not associate.
"""
import logging
import math
import random
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from pydantic import BaseModel

from cdtwist.algebra.engine import (
    AlgebraSpec,
    BaseField,
    Element,
    associator,
    double,
    halves,
    mul,
    random_element,
    scalar_element,
)
from cdtwist.algebra.matrices import k_basis, k_coordinates
from cdtwist.errors import InvalidParameterError
from cdtwist.scalars.kinds import QuadraticKind, parse_quadratic
from cdtwist.scalars.quadratic import QuadExt, validate_radicand

logger = logging.getLogger(__name__)

K_NAMES = ["1", "i", "j", "k"]


class FlexFailure(BaseModel):
    i: int
    k: int
    left: str
    right: str


class FlexReport(BaseModel):
    pairs_checked: List[Tuple[int, int]] = []
    failures: List[FlexFailure] = []

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def passed(self) -> int:
        return len(self.pairs_checked) - len(self.failures)

    @property
    def summary(self) -> str:
        return f"{self.passed}/{len(self.pairs_checked)} ordered basis pairs pass"


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value <= 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


class NonAssocQuatSpec(NamedTuple):
    """
    Parameters of a nonassociative quaternion algebra: E = Q(sqrt(d)),
    g in E - Q, and alpha = f1^2, which must be d times a rational square
    """
    d: int
    gamma: QuadExt
    alpha: Fraction

    @property
    def root(self) -> QuadExt:
        """rho = c*sqrt(d) with rho^2 = alpha"""
        return QuadExt(0, _rational_sqrt(self.alpha / self.d), self.d)

    @property
    def algebra(self) -> AlgebraSpec:
        return make_nonassoc_quaternion(self.d, self.gamma)


def _as_gamma(d: int, gamma: Union[str, QuadExt, int, Fraction]) -> QuadExt:
    if isinstance(gamma, str):
        return parse_quadratic(gamma, d)
    return QuadraticKind(d).coerce(gamma)


def make_nonassoc_quaternion(d: int, gamma: Union[str, QuadExt, int, Fraction]) -> AlgebraSpec:
    """
    Build H = E + E with the left placement of g

    Args:
        d: Radicand of E = Q(sqrt(d))
        gamma: Doubling parameter in E - Q (a QuadExt, or text such as 'sqrt')

    Returns:
        Four-dimensional (over Q) algebra spec with scalars in E
    """
    d = validate_radicand(d)
    gamma = _as_gamma(d, gamma)
    if gamma.is_rational():
        logger.error(f"Rejected parameter {gamma}: it lies in Q, so sigma(g) = g")
        raise InvalidParameterError(f"Parameter {gamma} lies in Q; it must have a nonzero sqrt({d}) part")
    base = BaseField(QuadraticKind(d, sigma=True))
    return double(base, gamma, "L")


def nonassoc_params(
        d: int,
        gamma: Union[str, QuadExt, int, Fraction],
        alpha: Optional[Union[int, Fraction]] = None
) -> NonAssocQuatSpec:
    """
    Validate and bundle the parameters d, g and alpha (default alpha = d)
    """
    d = validate_radicand(d)
    gamma = _as_gamma(d, gamma)
    make_nonassoc_quaternion(d, gamma)
    alpha = Fraction(d if alpha is None else alpha)
    if alpha == 0 or _rational_sqrt(alpha / d) is None:
        raise InvalidParameterError(
            f"alpha = {alpha} is not d times a nonzero rational square (d = {d}); no f1 in E squares to it"
        )
    return NonAssocQuatSpec(d, gamma, alpha)


def double_octonion(params: NonAssocQuatSpec, delta: Optional[Union[str, QuadExt, int, Fraction]] = None) -> AlgebraSpec:
    """
    Double H once more with a parameter delta in E (default delta = g)

    Returns:
        Eight-dimensional (over Q) algebra spec
    """
    if delta is None:
        delta = params.gamma
    delta = _as_gamma(params.d, delta)
    if not delta:
        raise InvalidParameterError("delta must be nonzero")
    h = params.algebra
    return double(h, scalar_element(h, delta), "L")


def e_element(spec: AlgebraSpec, e: Union[QuadExt, int, Fraction]) -> Element:
    """e embedded as (e, 0, ...)"""
    return scalar_element(spec, e)


def prop_table(params: NonAssocQuatSpec) -> Dict[Tuple[int, int], Element]:
    """
    Expected products of the Q-basis {1, f1, f2, f3}, written as
    (E-coefficient) * f_index with left E-scalars

    Returns:
        Map (i, k) -> f_i f_k
    """
    spec = params.algebra
    basis = k_basis(spec, params.root)
    g = params.gamma
    a = params.alpha
    cells = {
        (1, 1): (a, 0), (1, 2): (1, 3), (1, 3): (a, 2),
        (2, 1): (-1, 3), (2, 2): (g, 0), (2, 3): (-g, 1),
        (3, 1): (-a, 2), (3, 2): (g, 1), (3, 3): (-a * g, 0),
    }
    table = {}
    for i in range(4):
        for k in range(4):
            if i == 0 or k == 0:
                table[(i, k)] = basis[i + k]
            else:
                coeff, index = cells[(i, k)]
                table[(i, k)] = coeff * basis[index]
    return table


def render_ijk(params: NonAssocQuatSpec, x: Element) -> str:
    """Write x over the rational basis 1, i, j, k"""
    coords = k_coordinates(params.algebra, x, params.root)
    pieces = []
    for name, value in zip(K_NAMES, coords):
        if value == 0:
            continue
        if name == "1":
            pieces.append(str(value))
        elif value == 1:
            pieces.append(name)
        elif value == -1:
            pieces.append(f"-{name}")
        else:
            pieces.append(f"{value}{name}")
    if not pieces:
        return "0"
    return " + ".join(pieces).replace("+ -", "- ")


def example_table(params: NonAssocQuatSpec) -> Dict[Tuple[str, str], str]:
    """Products of 1, i, j, k rendered over the same basis"""
    spec = params.algebra
    basis = k_basis(spec, params.root)
    return {
        (K_NAMES[p], K_NAMES[q]): render_ijk(params, mul(spec, basis[p], basis[q]))
        for p in range(4)
        for q in range(4)
    }


def render_ej(spec: AlgebraSpec, x: Element) -> str:
    """Write x = (a1, a2) as 'a1 + a2 j' with coefficients in E"""
    a1, a2 = halves(spec, x)
    pieces = []
    if a1:
        pieces.append(str(a1))
    if a2:
        value = a2.scalar_part() if a2.is_scalar() else None
        if value is None:
            pieces.append(f"({a2}) j")
        elif value == 1:
            pieces.append("j")
        elif value == -1:
            pieces.append("-j")
        elif " " in str(value) or "+" in str(value) or "-" in str(value)[1:]:
            pieces.append(f"({value}) j")
        else:
            pieces.append(f"{value} j")
    if not pieces:
        return "0"
    return " + ".join(pieces).replace("+ -", "- ")


def check_third_power_assoc(spec: AlgebraSpec, x: Element) -> Tuple[Element, Element, bool]:
    """
    Compare x x^2 with x^2 x

    Returns:
        (x x^2, x^2 x, equal?)
    """
    square = mul(spec, x, x)
    left = mul(spec, x, square)
    right = mul(spec, square, x)
    return left, right, left == right


def check_flexible_basis_law(spec: AlgebraSpec, root: Optional[QuadExt] = None) -> FlexReport:
    """
    Check f_i (f_k f_i) = (f_i f_k) f_i for all ordered pairs i != k of
    non-unit rational basis vectors

    Args:
        spec: Nonassociative quaternion algebra or one of its doublings
        root: rho used for the rational basis (default sqrt(d))

    Returns:
        FlexReport with every failing pair and both sides
    """
    basis = k_basis(spec, root)
    report = FlexReport()
    for i in range(1, len(basis)):
        for k in range(1, len(basis)):
            if i == k:
                continue
            report.pairs_checked.append((i, k))
            left = mul(spec, basis[i], mul(spec, basis[k], basis[i]))
            right = mul(spec, mul(spec, basis[i], basis[k]), basis[i])
            if left != right:
                report.failures.append(FlexFailure(i=i, k=k, left=str(left), right=str(right)))
    logger.info(f"Law (F) on dimension {len(basis)}: {report.summary}")
    return report


def nucleus_membership(
        spec: AlgebraSpec,
        e: Union[QuadExt, Element],
        trials: int = 50,
        seed: int = 0
) -> bool:
    """
    True iff (e, a, b), (a, e, b), (a, b, e) all vanish for `trials` random a, b

    Args:
        spec: The algebra
        e: Element of E (embedded as (e, 0)) or any element
        trials: Number of random pairs
        seed: Seed for the pairs
    """
    x = e if isinstance(e, Element) else e_element(spec, e)
    rng = random.Random(seed)
    for _ in range(trials):
        a = random_element(spec, rng, bound=3)
        b = random_element(spec, rng, bound=3)
        if associator(spec, x, a, b) or associator(spec, a, x, b) or associator(spec, a, b, x):
            return False
    return True


def sigma_commutation_check(
        spec: AlgebraSpec,
        i: int,
        x: Union[QuadExt, int, Fraction],
        root: Optional[QuadExt] = None
) -> bool:
    """
    True iff f_i (x 1) = (sigma(x) 1) f_i

    Args:
        spec: Nonassociative quaternion algebra
        i: Rational basis index in {1, 2, 3}
        x: Element of E
        root: rho used for the rational basis
    """
    if i not in (1, 2, 3):
        raise InvalidParameterError(f"Basis index must be 1, 2 or 3, got {i}")
    basis = k_basis(spec, root)
    x = spec.kind.coerce(x)
    left = mul(spec, basis[i], e_element(spec, x))
    right = mul(spec, e_element(spec, x.sigma()), basis[i])
    return left == right
