from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cdtwist.algebra.engine import basis_element, make_cd_tower, scalar_element
from cdtwist.algebra.matrices import (
    bareiss_determinant,
    from_k_coordinates,
    k_basis,
    k_coordinates,
    left_mult_determinant,
    left_mult_matrix,
)
from cdtwist.errors import FieldContextError, InvalidParameterError
from cdtwist.scalars.quadratic import QuadExt

square_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=n, max_size=n),
        min_size=n,
        max_size=n
    )
)


@settings(derandomize=True, max_examples=150)
@given(square_matrices)
def test_bareiss_matches_sympy(rows):
    expected = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in rows]).det()
    assert bareiss_determinant(rows) == Fraction(int(sympy.numer(expected)), int(sympy.denom(expected)))


def test_bareiss_small_cases():
    assert bareiss_determinant([[2, 3], [1, 4]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant(np.empty((0, 0), dtype=object)) == 1


def test_bareiss_over_quadratic_field():
    root = QuadExt(0, 1, 2)
    assert bareiss_determinant([[root, 1], [1, root]]) == 1
    assert bareiss_determinant([[root, 2], [1, root]]) == 0


def test_bareiss_rejects_non_square():
    with pytest.raises(InvalidParameterError):
        bareiss_determinant([[1, 2, 3], [4, 5, 6]])


def test_quaternion_norm_is_the_determinant_root():
    spec = make_cd_tower(2, [-1, -1])
    x = basis_element(spec, 0, 1) + basis_element(spec, 1, 2) + basis_element(spec, 3, -1)
    # det L_x = n(x)^2 for a four-dimensional composition algebra
    assert left_mult_determinant(spec, x) == 36
    matrix, invertible = left_mult_matrix(spec, x)
    assert invertible
    assert matrix.shape == (4, 4)


def test_left_mult_of_nonassoc_quaternion_basis(h_params):
    spec = h_params.algebra
    f1 = basis_element(spec, 0, h_params.root)
    assert left_mult_determinant(spec, f1, h_params.root) == 4


def test_k_coordinates_round_trip(h_params):
    spec = h_params.algebra
    basis = k_basis(spec, h_params.root)
    assert len(basis) == 4
    x = basis_element(spec, 0, QuadExt(1, 3, 2)) + basis_element(spec, 1, QuadExt(-2, 1, 2))
    coords = k_coordinates(spec, x, h_params.root)
    assert coords == [1, 3, -2, 1]
    assert from_k_coordinates(spec, coords, h_params.root) == x


def test_k_basis_of_central_tower_is_the_basis():
    spec = make_cd_tower(2, [-1, -1])
    assert k_basis(spec) == [basis_element(spec, i) for i in range(4)]
    assert k_coordinates(spec, scalar_element(spec, 5)) == [5, 0, 0, 0]


def test_root_must_live_in_the_field(h_params):
    spec = h_params.algebra
    with pytest.raises(FieldContextError):
        k_basis(spec, QuadExt(0, 1, 3))
    with pytest.raises(InvalidParameterError):
        k_basis(spec, QuadExt(1, 1, 2))


def test_symbolic_matrices_are_refused(quaternions):
    with pytest.raises(InvalidParameterError):
        left_mult_matrix(quaternions, basis_element(quaternions, 1))
