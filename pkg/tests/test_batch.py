import numpy as np
import pytest

from cdtwist.errors import InvalidParameterError, LevelMismatchError
from cdtwist.twist.batch import basis_products_batch, random_pairs, run_bench, sign_table
from cdtwist.twist.core import basis_product, theta


@pytest.mark.parametrize("t", [0, 1, 3, 5])
def test_sign_table_matches_scalar_path(t):
    table = sign_table(t)
    n = 1 << t
    assert table.shape == (n, n)
    for p in range(n):
        for q in range(n):
            assert int(table[p, q]) == theta(t, p, q)


def test_sign_table_is_read_only():
    table = sign_table(2)
    with pytest.raises(ValueError):
        table[0, 0] = -1


def test_sign_table_level_limit():
    with pytest.raises(InvalidParameterError):
        sign_table(9)


@pytest.mark.parametrize("t", [12, 30, 62])
def test_batch_matches_scalar_path_at_large_levels(t):
    rng = np.random.default_rng(7)
    p, q = random_pairs(t, 500, rng)
    signs, masks, indices = basis_products_batch(t, p, q)
    for i in range(len(p)):
        term = basis_product(t, int(p[i]), int(q[i]))
        assert (int(signs[i]), int(masks[i]), int(indices[i])) == term


def test_batch_keeps_shape():
    p = np.array([[3, 6], [9, 4]])
    q = np.array([[5, 7], [14, 12]])
    signs, masks, indices = basis_products_batch(4, p, q)
    assert signs.shape == (2, 2)
    assert signs.dtype == np.int8
    assert indices.tolist() == [[6, 1], [7, 8]]
    assert signs.tolist() == [[1, -1], [-1, 1]]


def test_batch_rejects_bad_input():
    with pytest.raises(LevelMismatchError):
        basis_products_batch(3, np.array([8]), np.array([1]))
    with pytest.raises(LevelMismatchError):
        basis_products_batch(3, np.array([1, 2]), np.array([1]))
    with pytest.raises(InvalidParameterError):
        basis_products_batch(63, np.array([0]), np.array([0]))


def test_bench_report():
    report = run_bench(5, 10000, seed=3, chunk_size=4096)
    assert report.n == 10000
    assert report.t == 5
    assert report.products_per_second > 0
    assert run_bench(5, 10000, seed=3, chunk_size=4096).checksum == report.checksum


def test_bench_smallest_case():
    report = run_bench(1, 1)
    assert report.n == 1


def test_bench_rejects_negative_count():
    with pytest.raises(InvalidParameterError):
        run_bench(3, -1)
