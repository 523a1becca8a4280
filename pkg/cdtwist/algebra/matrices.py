"""
Matrices of left multiplication and exact determinants.

Algebras whose scalars are Q(sqrt(d)) with sigma as involution are not
E-linear on the left, so they are viewed over the ground field Q: every
E-coordinate splits into two rational coordinates along (1, rho),
rho = c*sqrt(d).
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from cdtwist.algebra.engine import AlgebraSpec, Element, basis_element, mul
from cdtwist.errors import FieldContextError, InvalidParameterError
from cdtwist.scalars.kinds import QuadraticKind
from cdtwist.scalars.quadratic import QuadExt

logger = logging.getLogger(__name__)


def _splits_over_q(spec: AlgebraSpec) -> bool:
    kind = spec.kind
    return isinstance(kind, QuadraticKind) and kind.sigma


def _root(spec: AlgebraSpec, root: Optional[QuadExt]) -> QuadExt:
    d = spec.kind.d
    if root is None:
        return QuadExt(0, 1, d)
    if not isinstance(root, QuadExt) or root.d != d:
        raise FieldContextError(f"Root {root!r} is not an element of Q(sqrt({d}))")
    if root.a != 0 or root.b == 0:
        raise InvalidParameterError(f"Root must be a nonzero rational multiple of sqrt({d}), got {root}")
    return root


def k_basis(spec: AlgebraSpec, root: Optional[QuadExt] = None) -> List[Element]:
    """
    Basis of the algebra over its ground field

    For sigma-kinds this is f_0, rho f_0, f_1, rho f_1, ... so that the
    nonassociative quaternions get {1, f1, f2, f3} = {(1,0), (rho,0), (0,1), (0,rho)}.
    Otherwise it is the basis f_0, ..., f_{n-1} itself.
    """
    if not _splits_over_q(spec):
        return [basis_element(spec, i) for i in range(spec.dimension)]
    rho = _root(spec, root)
    basis = []
    for i in range(spec.dimension):
        basis.append(basis_element(spec, i))
        basis.append(basis_element(spec, i, rho))
    return basis


def k_coordinates(spec: AlgebraSpec, x: Element, root: Optional[QuadExt] = None) -> list:
    """Coordinates of x along k_basis(spec, root)"""
    if not _splits_over_q(spec):
        return [x[i] for i in range(spec.dimension)]
    rho = _root(spec, root)
    coords = []
    for i in range(spec.dimension):
        value = x[i]
        coords.append(value.a)
        coords.append(value.b / rho.b)
    return coords


def from_k_coordinates(spec: AlgebraSpec, coords: Sequence, root: Optional[QuadExt] = None) -> Element:
    """Inverse of k_coordinates"""
    if not _splits_over_q(spec):
        if len(coords) != spec.dimension:
            raise InvalidParameterError(f"Expected {spec.dimension} coordinates, got {len(coords)}")
        return Element(spec, dict(enumerate(coords)))
    if len(coords) != 2 * spec.dimension:
        raise InvalidParameterError(f"Expected {2 * spec.dimension} coordinates, got {len(coords)}")
    rho = _root(spec, root)
    d = spec.kind.d
    return Element(spec, {
        i: QuadExt(coords[2 * i], 0, d) + Fraction(coords[2 * i + 1]) * rho
        for i in range(spec.dimension)
    })


def bareiss_determinant(matrix) -> object:
    """
    Exact determinant by fraction-free Gaussian elimination

    Args:
        matrix: Square matrix of exact field elements (ints, Fractions or QuadExt)

    Returns:
        The determinant, exact
    """
    if len(matrix) == 0:
        return Fraction(1)
    m = np.array(
        [[Fraction(v) if isinstance(v, int) else v for v in row] for row in matrix],
        dtype=object
    )
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidParameterError(f"Determinant needs a square matrix, got shape {m.shape}")
    n = m.shape[0]

    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if m[k, k] == 0:
            below = [i for i in range(k + 1, n) if m[i, k] != 0]
            if not below:
                return Fraction(0)
            m[[k, below[0]]] = m[[below[0], k]]
            sign = -sign
        pivot = m[k, k]
        m[k + 1:, k + 1:] = (m[k + 1:, k + 1:] * pivot - np.outer(m[k + 1:, k], m[k, k + 1:])) / previous
        previous = pivot
    return sign * m[n - 1, n - 1]


def left_mult_matrix(
        spec: AlgebraSpec,
        x: Element,
        root: Optional[QuadExt] = None
) -> Tuple[np.ndarray, bool]:
    """
    Matrix of y -> x y over the ground field, with an invertibility flag

    Args:
        spec: Algebra with a concrete scalar kind
        x: The left factor
        root: rho for the rational view of sigma-kinds (default sqrt(d))

    Returns:
        Tuple containing:
            - matrix: object array whose column j holds the coordinates of x * b_j
            - invertible: True iff the exact determinant is nonzero
    """
    if not spec.kind.is_concrete:
        raise InvalidParameterError("Left multiplication matrices need concrete scalars")
    columns = [k_coordinates(spec, mul(spec, x, b), root) for b in k_basis(spec, root)]
    matrix = np.array(columns, dtype=object).T
    return matrix, bareiss_determinant(matrix) != 0


def left_mult_determinant(spec: AlgebraSpec, x: Element, root: Optional[QuadExt] = None):
    matrix, _ = left_mult_matrix(spec, x, root)
    return bareiss_determinant(matrix)
