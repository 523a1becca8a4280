import pytest

from cdtwist.algebra.verify import Disagreement, VerificationReport, oracle_term, verify_twist_vs_oracle
from cdtwist.errors import InvalidParameterError


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
def test_exhaustive_symbolic(t):
    report = verify_twist_vs_oracle(t, "symbolic", mode="exhaustive")
    assert report.ok
    assert report.pairs_checked == 4 ** t
    assert report.summary == f"{4 ** t} pairs, 0 disagreements"


def test_exhaustive_concrete():
    report = verify_twist_vs_oracle(3, [-1, 2, -3], mode="exhaustive")
    assert report.ok
    assert report.gammas == ["-1", "2", "-3"]


def test_worker_pool_splits_the_pairs():
    report = verify_twist_vs_oracle(4, "symbolic", mode="random", n=5000, seed=2, workers=2)
    assert report.ok
    assert report.pairs_checked == 5000
    assert report == verify_twist_vs_oracle(4, "symbolic", mode="random", n=5000, seed=2, workers=1)


@pytest.mark.slow
def test_exhaustive_level_six():
    assert verify_twist_vs_oracle(6, "symbolic", mode="exhaustive").ok


@pytest.mark.parametrize("n", [2000, pytest.param(100_000, marks=pytest.mark.slow)])
def test_random_high_level(n):
    report = verify_twist_vs_oracle(8, [-1, 2, -1, 3, -1, -2, 1, -1], mode="random", n=n, seed=11)
    assert report.ok
    assert report.pairs_checked == n


def test_random_is_reproducible():
    first = verify_twist_vs_oracle(6, "symbolic", mode="random", n=300, seed=5)
    second = verify_twist_vs_oracle(6, "symbolic", mode="random", n=300, seed=5)
    assert first == second


def test_exhaustive_limit():
    with pytest.raises(InvalidParameterError):
        verify_twist_vs_oracle(7, "symbolic", mode="exhaustive")


def test_bad_arguments():
    with pytest.raises(InvalidParameterError):
        verify_twist_vs_oracle(2, [-1], mode="exhaustive")
    with pytest.raises(InvalidParameterError):
        verify_twist_vs_oracle(2, [-1, 0], mode="exhaustive")
    with pytest.raises(InvalidParameterError):
        verify_twist_vs_oracle(2, "symbolic", mode="sometimes")
    with pytest.raises(InvalidParameterError):
        verify_twist_vs_oracle(2, "symbolic", mode="random", n=-1)


def test_merge_is_associative():
    rows = [Disagreement(p=i, q=0, expected="f1", actual="-f1", reason="mismatch") for i in range(3)]
    parts = [
        VerificationReport(t=2, gammas=["symbolic"], mode="random", pairs_checked=5, disagreements=[row])
        for row in rows
    ]
    left = parts[0].merge(parts[1]).merge(parts[2])
    right = parts[0].merge(parts[1].merge(parts[2]))
    assert left == right
    assert left.pairs_checked == 15
    assert not left.ok
    assert left.summary == "15 pairs, 3 disagreements"


def test_report_json_has_summary():
    report = verify_twist_vs_oracle(1)
    data = report.model_dump()
    assert data["ok"] is True
    assert data["summary"] == "4 pairs, 0 disagreements"


def test_oracle_term():
    assert oracle_term(2, 3, 3) == (-1, 3, 0)
    assert oracle_term(3, 6, 2) == (-1, 2, 4)
