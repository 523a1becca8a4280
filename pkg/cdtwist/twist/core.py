"""
Fast multiplication of basis vectors in the Cayley-Dickson tower E_t

The tower E_t = (g1, ..., gt / K) has basis f_0 = 1, f_1, ..., f_{2^t - 1}
and is a twisted group algebra over Z_2^t:

    f_p f_q = theta_t(p, q) * prod(g_m : bit m set in p AND q) * f_{p XOR q}

so one product costs O(t) bit operations, with no recursion through the
doubling formula. Bit m (counted from 1 at the least significant end)
belongs to the parameter g_m of the m-th doubling.
"""
import logging
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from cdtwist.errors import InvalidParameterError, LevelMismatchError
from cdtwist.scalars.polynomial import GammaMonomial, SparsePoly

logger = logging.getLogger(__name__)

MAX_LEVEL = 62


class BasisIndex(NamedTuple):
    """Index p of the basis vector f_p in a tower of level t"""
    value: int
    level: int

    def bits(self) -> List[int]:
        """Parameter numbers m whose bit is set, lowest first"""
        return [m for m in range(1, self.level + 1) if self.value >> (m - 1) & 1]


class TwistTerm(NamedTuple):
    """
    Result of a basis product: sign * g-monomial * f_index
    """
    sign: int
    gamma_mask: int
    index: int

    def monomial(self) -> GammaMonomial:
        return GammaMonomial.from_mask(self.gamma_mask)

    def coefficient(self) -> SparsePoly:
        return SparsePoly.signed_monomial(self.sign, self.gamma_mask)

    def render(self) -> str:
        """Long form used by the mul command, e.g. '+g1 * f6' or '+1 * f5'"""
        sign = "+" if self.sign > 0 else "-"
        return f"{sign}{self.monomial()} * f{self.index}"

    def cell(self) -> str:
        """Compact multiplication-table cell: '1', 'f1', '-f3', 'g1*f2', '-g1*g2'"""
        monomial = str(self.monomial())
        if self.index == 0:
            body = monomial
        elif self.gamma_mask == 0:
            body = f"f{self.index}"
        else:
            body = f"{monomial}*f{self.index}"
        return f"-{body}" if self.sign < 0 else body


class ThetaStep(NamedTuple):
    sign: int
    level: int
    p: int
    q: int


IndexLike = Union[int, BasisIndex]


def _value(x: IndexLike) -> int:
    return x.value if isinstance(x, BasisIndex) else x


def check_indices(t: int, p: int, q: int) -> None:
    """Raise LevelMismatchError unless 0 <= p, q < 2^t"""
    if not isinstance(t, int) or t < 0 or t > MAX_LEVEL:
        raise InvalidParameterError(f"Level must be an integer in [0, {MAX_LEVEL}], got {t!r}")
    limit = 1 << t
    for name, value in (("p", p), ("q", q)):
        if not 0 <= value < limit:
            raise LevelMismatchError(f"Index {name}={value} out of range [0, {limit}) for level {t}")


def xor_index(p: IndexLike, q: IndexLike) -> IndexLike:
    """
    Compose two basis indices in Z_2^t

    Args:
        p: Left index
        q: Right index

    Returns:
        p XOR q, as a BasisIndex when the inputs are BasisIndex values
    """
    if isinstance(p, BasisIndex) and isinstance(q, BasisIndex):
        if p.level != q.level:
            raise LevelMismatchError(f"Cannot compose indices of levels {p.level} and {q.level}")
        check_indices(p.level, p.value, q.value)
        return BasisIndex(p.value ^ q.value, p.level)
    if isinstance(p, BasisIndex) or isinstance(q, BasisIndex):
        raise LevelMismatchError("Cannot compose a leveled index with a bare integer")
    if p < 0 or q < 0:
        raise LevelMismatchError(f"Basis indices must be non-negative, got {p}, {q}")
    return p ^ q


def gamma_mask(p: IndexLike, q: IndexLike) -> int:
    """Bit m-1 is set iff g_m divides the coefficient of f_p f_q"""
    return _value(p) & _value(q)


def _theta_walk(t: int, p: int, q: int, steps: Optional[List[ThetaStep]] = None) -> int:
    # One pass from the top level down. At each level the pair is reduced to
    # the level below and the sign picks up the factor of that doubling.
    sign = 1
    if steps is not None:
        steps.append(ThetaStep(sign, t, p, q))
    for m in range(t, 0, -1):
        if p == 0 or q == 0:
            break
        h = 1 << (m - 1)
        p_high = p & h
        q_high = q & h
        r = p & (h - 1)
        s = q & (h - 1)
        if p_high and q_high:
            if s != 0 and (r == 0 or r == s):
                sign = -sign
            p, q = r, s
        elif q_high:
            if s != 0 and s != p:
                sign = -sign
            q = s
        elif p_high:
            sign = -sign
            p = r
        if steps is not None and m > 1:
            steps.append(ThetaStep(sign, m - 1, p, q))
    return sign


def theta(t: int, p: IndexLike, q: IndexLike) -> int:
    """
    Sign map theta_t(p, q) in {+1, -1}

    Args:
        t: Tower level
        p: Left index in [0, 2^t)
        q: Right index in [0, 2^t)

    Returns:
        The sign of f_p f_q
    """
    p, q = _value(p), _value(q)
    check_indices(t, p, q)
    return _theta_walk(t, p, q)


def theta_trace(t: int, p: IndexLike, q: IndexLike) -> Tuple[List[ThetaStep], int]:
    """
    The chain theta_t(p,q) = +/-theta_{t-1}(.,.) = ... down to the first
    term that is trivially +1

    Returns:
        (steps, final sign)
    """
    p, q = _value(p), _value(q)
    check_indices(t, p, q)
    steps: List[ThetaStep] = []
    final = _theta_walk(t, p, q, steps)
    return steps, final


def render_theta_trace(steps: Sequence[ThetaStep], final: int) -> str:
    """Render as 'theta3(3,5) = -theta2(3,1) = +theta1(1,1) = +1'"""
    parts = []
    for i, step in enumerate(steps):
        term = f"theta{step.level}({step.p},{step.q})"
        if i:
            term = ("+" if step.sign > 0 else "-") + term
        parts.append(term)
    parts.append("+1" if final > 0 else "-1")
    return " = ".join(parts)


def basis_product(t: int, p: IndexLike, q: IndexLike) -> TwistTerm:
    """
    f_p f_q in the tower of level t

    Args:
        t: Tower level
        p: Left index
        q: Right index

    Returns:
        TwistTerm(sign, p AND q, p XOR q)
    """
    p, q = _value(p), _value(q)
    check_indices(t, p, q)
    return TwistTerm(_theta_walk(t, p, q), p & q, p ^ q)


def alpha_eval(
        t: int,
        p: IndexLike,
        q: IndexLike,
        gammas: Optional[Sequence] = None
):
    """
    Twist map alpha_t(p, q): the scalar with f_p f_q = alpha_t(p,q) f_{p XOR q}

    Args:
        t: Tower level
        p: Left index
        q: Right index
        gammas: Concrete parameter values g1..gt (None for symbolic)

    Returns:
        A SparsePoly in symbolic mode, otherwise the evaluated scalar
    """
    term = basis_product(t, p, q)
    if gammas is None:
        return term.coefficient()
    if len(gammas) != t:
        raise InvalidParameterError(f"Expected {t} parameter values, got {len(gammas)}")
    value = Fraction(term.sign)
    for m, g in enumerate(gammas, start=1):
        if g == 0:
            raise InvalidParameterError(f"g{m} must be nonzero")
        if term.gamma_mask >> (m - 1) & 1:
            value = value * g
    return value


def alpha_recursive(t: int, p: int, q: int) -> Tuple[int, int]:
    """
    The twist map computed case by case through the doubling layers,
    independently of the sign walk used by basis_product.

    Returns:
        (sign, gamma_mask)
    """
    check_indices(t, p, q)
    if t == 0:
        return 1, 0
    h = 1 << (t - 1)
    p_high, q_high = p >= h, q >= h
    r, s = p - h, q - h

    if not p_high and not q_high:
        return alpha_recursive(t - 1, p, q)

    if not p_high:
        # (f_p, 0)(0, f_s) = (0, f_s f_p)
        if p == 0 or s == 0:
            return 1, 0
        if s == p:
            return alpha_recursive(t - 1, p, p)
        sign, mask = alpha_recursive(t - 1, p, s)
        return -sign, mask

    if not q_high:
        # (0, f_r)(f_q, 0) = (0, f_r conj(f_q))
        if q == 0:
            return 1, 0
        sign, mask = alpha_recursive(t - 1, r, q)
        return -sign, mask

    # (0, f_r)(0, f_s) = (g_t conj(f_s) f_r, 0)
    if s == 0:
        return 1, h
    if r == 0:
        return -1, h
    if r == s:
        sign, mask = alpha_recursive(t - 1, r, r)
        return -sign, mask | h
    sign, mask = alpha_recursive(t - 1, r, s)
    return sign, mask | h
