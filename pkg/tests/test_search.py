import pytest

from cdtwist.algebra.engine import basis_element, make_cd_tower, mul
from cdtwist.algebra.search import find_zero_divisor, structured_candidates, structured_family_size
from cdtwist.errors import InvalidParameterError


def test_known_sedenion_zero_divisor():
    spec = make_cd_tower(4, [-1, -1, -1, -1])
    x = basis_element(spec, 1) + basis_element(spec, 10)
    y = basis_element(spec, 4) - basis_element(spec, 15)
    assert x and y
    assert not mul(spec, x, y)


def test_structured_search_finds_sedenion_zero_divisor():
    spec = make_cd_tower(4, [-1, -1, -1, -1])
    found = find_zero_divisor(spec, family="structured")
    assert found is not None
    x, y = found
    assert x and y
    assert not mul(spec, x, y)


def test_octonions_have_no_structured_zero_divisor(real_octonions):
    assert structured_family_size(real_octonions) == 448
    assert sum(1 for _ in structured_candidates(real_octonions)) == 448
    assert find_zero_divisor(real_octonions, family="structured") is None


def test_split_octonions_have_zero_divisors():
    spec = make_cd_tower(3, [1, -1, -1])
    x, y = find_zero_divisor(spec, family="structured")
    assert not mul(spec, x, y)


def test_random_search_respects_budget(real_octonions):
    assert find_zero_divisor(real_octonions, family="random", budget=200, seed=4) is None


def test_budget_limits_structured_search():
    spec = make_cd_tower(4, [-1, -1, -1, -1])
    assert find_zero_divisor(spec, family="structured", budget=0) is None


def test_search_needs_concrete_scalars(octonions):
    with pytest.raises(InvalidParameterError):
        find_zero_divisor(octonions)


def test_unknown_family(real_octonions):
    with pytest.raises(InvalidParameterError):
        find_zero_divisor(real_octonions, family="clever")
