import random
from fractions import Fraction

import pytest

from cdtwist.algebra.engine import basis_element, mul, one, random_element
from cdtwist.algebra.matrices import k_basis, left_mult_matrix
from cdtwist.errors import InvalidParameterError
from cdtwist.nonassoc.quaternion import (
    check_flexible_basis_law,
    check_third_power_assoc,
    double_octonion,
    e_element,
    example_table,
    make_nonassoc_quaternion,
    nonassoc_params,
    nucleus_membership,
    prop_table,
    render_ej,
    render_ijk,
    sigma_commutation_check,
)
from cdtwist.scalars.quadratic import QuadExt

ROOT2 = QuadExt(0, 1, 2)

# products of 1, i, j, k for d = 2, g = sqrt(2), alpha = 2
EXAMPLE_TABLE = {
    ("i", "i"): "2", ("i", "j"): "k", ("i", "k"): "2j",
    ("j", "i"): "-k", ("j", "j"): "i", ("j", "k"): "-2",
    ("k", "i"): "-2j", ("k", "j"): "2", ("k", "k"): "-2i",
}


def test_example_table(h_params):
    table = example_table(h_params)
    for key, expected in EXAMPLE_TABLE.items():
        assert table[key] == expected
    assert table[("1", "k")] == "k"
    assert table[("j", "1")] == "j"


@pytest.mark.parametrize("d, gamma, alpha", [
    (2, "sqrt", None),
    (2, "1+2*sqrt", 8),
    (3, "-sqrt", Fraction(3, 4)),
    (-1, "1/2+sqrt", -4),
])
def test_prop_table_matches_products(d, gamma, alpha):
    params = nonassoc_params(d, gamma, alpha)
    spec = params.algebra
    basis = k_basis(spec, params.root)
    expected = prop_table(params)
    for i in range(4):
        for k in range(4):
            assert mul(spec, basis[i], basis[k]) == expected[(i, k)]


def test_spot_value_of_law_f(h_params):
    spec = h_params.algebra
    f = k_basis(spec, h_params.root)
    assert mul(spec, f[1], mul(spec, f[2], f[1])) == -h_params.alpha * f[2]


def test_third_powers(h_params):
    spec = h_params.algebra
    j = basis_element(spec, 1)
    left, right, equal = check_third_power_assoc(spec, j)
    assert not equal
    assert render_ej(spec, left) == "-sqrt(2) j"
    assert render_ej(spec, right) == "sqrt(2) j"

    f3 = k_basis(spec, h_params.root)[3]
    g, a = h_params.gamma, h_params.alpha
    left, right, equal = check_third_power_assoc(spec, f3)
    assert not equal
    assert left == (-a * g.sigma()) * f3
    assert right == (-a * g) * f3


def test_third_power_of_scalars(h_params):
    spec = h_params.algebra
    assert check_third_power_assoc(spec, one(spec))[2]
    assert check_third_power_assoc(spec, e_element(spec, QuadExt(1, 3, 2)))[2]


def test_law_f_on_h(h_params):
    report = check_flexible_basis_law(h_params.algebra, h_params.root)
    assert len(report.pairs_checked) == 6
    assert report.summary == "4/6 ordered basis pairs pass"
    assert {(x.i, x.k) for x in report.failures} == {(2, 3), (3, 2)}


def test_law_f_on_the_doubling(h_params):
    spec = double_octonion(h_params)
    assert spec.dimension == 4
    report = check_flexible_basis_law(spec, h_params.root)
    assert len(report.pairs_checked) == 42
    assert report.summary == "38/42 ordered basis pairs pass"
    assert {(x.i, x.k) for x in report.failures} == {(2, 3), (3, 2), (4, 5), (5, 4)}


def test_rational_delta_repairs_the_new_pairs(h_params):
    report = check_flexible_basis_law(double_octonion(h_params, 3), h_params.root)
    failing = {(x.i, x.k) for x in report.failures}
    assert (4, 5) not in failing and (5, 4) not in failing
    assert {(2, 3), (3, 2)} <= failing


def test_nucleus(h_params):
    spec = h_params.algebra
    assert nucleus_membership(spec, ROOT2)
    assert nucleus_membership(spec, QuadExt(1, 0, 2))
    assert not nucleus_membership(spec, basis_element(spec, 1))


@pytest.mark.parametrize("i", [2, 3])
def test_sigma_commutation_for_j_and_k(h_params, i):
    spec = h_params.algebra
    rng = random.Random(i)
    for _ in range(100):
        x = spec.kind.random(rng)
        assert sigma_commutation_check(spec, i, x, h_params.root)


def test_sigma_commutation_for_i(h_params):
    spec = h_params.algebra
    assert sigma_commutation_check(spec, 1, 3, h_params.root)
    assert not sigma_commutation_check(spec, 1, ROOT2, h_params.root)
    with pytest.raises(InvalidParameterError):
        sigma_commutation_check(spec, 4, ROOT2)


def test_random_elements_are_invertible(h_params):
    spec = h_params.algebra
    rng = random.Random(99)
    for _ in range(200):
        x = random_element(spec, rng, nonzero=True)
        _, invertible = left_mult_matrix(spec, x, h_params.root)
        assert invertible


def test_rational_parameter_is_rejected():
    with pytest.raises(InvalidParameterError):
        make_nonassoc_quaternion(2, 3)
    with pytest.raises(InvalidParameterError):
        make_nonassoc_quaternion(2, "5")


def test_alpha_must_be_d_times_a_square():
    with pytest.raises(InvalidParameterError):
        nonassoc_params(2, "sqrt", 3)
    with pytest.raises(InvalidParameterError):
        nonassoc_params(2, "sqrt", 0)
    assert nonassoc_params(2, "sqrt", 8).root == QuadExt(0, 2, 2)


def test_bad_radicand():
    with pytest.raises(InvalidParameterError):
        make_nonassoc_quaternion(4, "sqrt")


def test_delta_must_be_nonzero(h_params):
    with pytest.raises(InvalidParameterError):
        double_octonion(h_params, 0)


def test_render_ijk(h_params):
    spec = h_params.algebra
    x = basis_element(spec, 0, QuadExt(1, -1, 2)) + basis_element(spec, 1, 2)
    assert render_ijk(h_params, x) == "1 - i + 2j"
    assert render_ijk(h_params, basis_element(spec, 0, 0)) == "0"
